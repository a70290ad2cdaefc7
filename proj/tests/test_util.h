// Copyright 2026 The twolevel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOLEVEL_TESTS_TEST_UTIL_H_
#define TWOLEVEL_TESTS_TEST_UTIL_H_

#include <random>
#include <string>
#include <vector>

#include "twolevel/api.h"
#include "twolevel/engine.h"
#include "twolevel/grammar.h"

namespace twolevel::testing {

inline const Grammar& arabic() {
  static const Grammar g =
      load_grammar(default_grammar_path(), default_lexicon_path());
  return g;
}

inline std::size_t entry(const Grammar& g, int tape, const std::string& form) {
  auto found = find_entries(g, tape, form);
  if (found.empty()) throw ConfigError("no entry " + form);
  return found.front();
}

// pattern smsmsx, root ktb, vocalism ui, and the given affix form.
inline MorphemeSelection stem(const Grammar& g, const std::string& affix) {
  return {{entry(g, 1, "smsmsx"), entry(g, 2, "ktb"), entry(g, 3, "ui"),
           entry(g, 4, affix)}};
}

inline FeatureStructure measure(const Grammar& g, const std::string& m) {
  return parse_features(g.features, "measure=" + m);
}

inline SymbolString sym(const Grammar& g, const std::string& text) {
  return parse_surface(g, text);
}

inline std::string spell(const Grammar& g, const SymbolString& s) {
  return g.alphabet.spell(s);
}

// Trace as the digit string used in the literature: R1,R1,R2,R4 -> 1124.
inline std::string digits(const std::vector<std::string>& trace) {
  std::string out;
  for (const auto& r : trace) out += r.substr(1);
  return out;
}

struct MeasureCase {
  std::string measure;
  std::string affix;
  std::string surface;
};

inline const std::vector<MeasureCase>& measure_table() {
  static const std::vector<MeasureCase> t = {
      {"1", "0", "kutib"},      {"2", "0", "kuttib"},
      {"3", "0", "kuutib"},     {"4", "'V", "'uktib"},
      {"5", "tu", "tukuttib"},  {"6", "tu", "tukuutib"},
      {"7", "n", "nkutib"},     {"8", "t", "ktutib"},
      {"10", "stV", "stuktib"},
  };
  return t;
}

}  // namespace twolevel::testing

#endif  // TWOLEVEL_TESTS_TEST_UTIL_H_
