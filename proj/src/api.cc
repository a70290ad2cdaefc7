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

#include "twolevel/api.h"

#include <charconv>
#include <cstdlib>

#include "json.hpp"
#include "text_util.h"
#include "twolevel/prosody.h"

namespace twolevel {

std::string default_data_dir() {
  if (const char* env = std::getenv("TWOLEVEL_DATA_DIR"); env && *env) {
    return env;
  }
  return TWOLEVEL_DATA_DIR;
}

std::string default_grammar_path() { return default_data_dir() + "/arabic.mtg"; }
std::string default_lexicon_path() { return default_data_dir() + "/arabic.mtl"; }
std::string default_corpus_path() { return default_data_dir() + "/corpus.tsv"; }

namespace {

std::size_t tape_index(const Grammar& g, const std::string& tape) {
  if (auto t = g.find_tape(tape)) return static_cast<std::size_t>(*t - 1);
  int n = 0;
  auto [p, ec] = std::from_chars(tape.data(), tape.data() + tape.size(), n);
  if (ec == std::errc() && p == tape.data() + tape.size() && n >= 1 &&
      static_cast<std::size_t>(n) <= g.tape_count()) {
    return static_cast<std::size_t>(n - 1);
  }
  throw ConfigError("unknown tape '" + tape + "'");
}

}  // namespace

FeatureStructure goal_of(const Grammar& g, const GenerateRequest& r) {
  FeatureStructure goal;
  if (r.features) goal = parse_features(g.features, *r.features);
  if (r.measure) {
    auto m = parse_features(g.features, "measure=" + *r.measure);
    auto u = unify(g.features, goal, m);
    if (!u) throw ConfigError("--measure contradicts --features");
    goal = *u;
  }
  return goal;
}

MorphemeSelection selection_of(const Grammar& g, const GenerateRequest& r,
                               const FeatureStructure& goal) {
  std::vector<std::optional<std::size_t>> chosen(g.tape_count());
  for (const auto& [tape, form] : r.morphemes) {
    const std::size_t j = tape_index(g, tape);
    auto found = find_entries(g, static_cast<int>(j) + 1, form);
    if (found.empty()) {
      throw ConfigError("unknown morpheme '" + form + "' on tape " +
                        g.tapes[j].name);
    }
    chosen[j] = found.front();
  }
  return complete_selection(g, std::move(chosen), goal);
}

std::vector<Analysis> generate(const Grammar& g, const GenerateRequest& r) {
  const FeatureStructure goal = goal_of(g, r);
  return generate(g, selection_of(g, r, goal), goal);
}

std::vector<Analysis> analyze(const Grammar& g, std::string_view surface) {
  return recognize(g, parse_surface(g, surface));
}

OracleReport oracle_report(const Grammar& g, int measure) {
  OracleReport r;
  r.measure = measure;
  r.oracle = oracle_measure(g, measure);
  GenerateRequest req;
  req.measure = std::to_string(measure);
  for (const auto& a : generate(g, req)) r.engine.push_back(a.surface);
  r.agree = r.engine.size() == 1 && r.engine.front() == r.oracle;
  return r;
}

namespace {

std::string spell_or_zero(const Grammar& g, const SymbolString& s) {
  return s.empty() ? std::string(kEpsilonToken) : g.alphabet.spell(s);
}

std::string tape_name(const Grammar& g, int tape) {
  if (tape >= 1 && static_cast<std::size_t>(tape) <= g.tape_count()) {
    return g.tapes[tape - 1].name;
  }
  return std::to_string(tape);
}

nlohmann::json features_json(const Grammar& g, const FeatureStructure& fs) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [attr, mask] : fs.attributes()) {
    out[attr] = g.features.values_in(attr, mask);
  }
  return out;
}

}  // namespace

std::string format_text(const Grammar& g, std::span<const Analysis> analyses) {
  std::string out;
  for (const auto& a : analyses) {
    std::vector<std::string> morphs;
    for (const auto& m : a.morphemes) {
      morphs.push_back(tape_name(g, m.tape) + ":" + m.form);
    }
    out += spell_or_zero(g, a.surface) + '\t' + detail::join(a.trace, ",") +
           '\t' + format_features(g.features, a.word_fs) + '\t' +
           detail::join(morphs, " ") + '\n';
  }
  return out;
}

std::string format_json(const Grammar& g, std::span<const Analysis> analyses) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : analyses) {
    nlohmann::json morphs = nlohmann::json::array();
    for (const auto& m : a.morphemes) {
      morphs.push_back(
          {{"tape", m.tape}, {"form", m.form}, {"category", m.category}});
    }
    arr.push_back({{"surface", g.alphabet.spell(a.surface)},
                   {"morphemes", morphs},
                   {"features", features_json(g, a.word_fs)},
                   {"trace", a.trace}});
  }
  return arr.dump(2) + "\n";
}

std::string format_text(const Grammar& g, const OracleReport& r) {
  return g.alphabet.spell(r.oracle) + (r.agree ? " agree" : " disagree") + "\n";
}

std::string format_json(const Grammar& g, const OracleReport& r) {
  nlohmann::json engine = nlohmann::json::array();
  for (const auto& s : r.engine) engine.push_back(g.alphabet.spell(s));
  nlohmann::json j = {{"measure", r.measure},
                      {"oracle", g.alphabet.spell(r.oracle)},
                      {"engine", engine},
                      {"agree", r.agree}};
  return j.dump(2) + "\n";
}

std::string format_text(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    out += d.subject + ":" + std::to_string(d.line) + ": " + d.message + "\n";
  }
  return out;
}

std::string format_json(const std::vector<Diagnostic>& diagnostics) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : diagnostics) {
    arr.push_back(
        {{"subject", d.subject}, {"line", d.line}, {"message", d.message}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace twolevel
