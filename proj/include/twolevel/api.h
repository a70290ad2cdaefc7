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

// String-level entry points shared by the command line and the Python
// module, plus the output formats.

#ifndef TWOLEVEL_API_H_
#define TWOLEVEL_API_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twolevel/engine.h"
#include "twolevel/grammar.h"

namespace twolevel {

std::string default_data_dir();
std::string default_grammar_path();
std::string default_lexicon_path();
std::string default_corpus_path();

struct GenerateRequest {
  std::optional<std::string> measure;
  std::optional<std::string> features;  // `attr=v,v; attr=v`
  // Tape (name or 1-based index) and written form.
  std::vector<std::pair<std::string, std::string>> morphemes;
};

FeatureStructure goal_of(const Grammar& g, const GenerateRequest& r);
MorphemeSelection selection_of(const Grammar& g, const GenerateRequest& r,
                               const FeatureStructure& goal);

// Throws ConfigError for unknown morphemes, tapes, attributes or values.
std::vector<Analysis> generate(const Grammar& g, const GenerateRequest& r);
std::vector<Analysis> analyze(const Grammar& g, std::string_view surface);

struct OracleReport {
  int measure = 0;
  SymbolString oracle;
  std::vector<SymbolString> engine;
  bool agree = false;
};

OracleReport oracle_report(const Grammar& g, int measure);

// One line per analysis:
//   surface TAB trace TAB features TAB tape:form ...
// An empty surface is written `0`.
std::string format_text(const Grammar& g, std::span<const Analysis> analyses);

// Array of {features, morphemes:[{category, form, tape}], surface, trace},
// keys sorted, two-space indent.
std::string format_json(const Grammar& g, std::span<const Analysis> analyses);

std::string format_text(const Grammar& g, const OracleReport& r);
std::string format_json(const Grammar& g, const OracleReport& r);

std::string format_text(const std::vector<Diagnostic>& diagnostics);
std::string format_json(const std::vector<Diagnostic>& diagnostics);

}  // namespace twolevel

#endif  // TWOLEVEL_API_H_
