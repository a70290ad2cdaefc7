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

#include "twolevel/corpus.h"

#include <fstream>
#include <sstream>

#include "text_util.h"
#include "twolevel/api.h"
#include "twolevel/engine.h"

namespace twolevel {

std::vector<GoldenCase> parse_corpus(std::string_view text) {
  std::vector<GoldenCase> out;
  int line_no = 0;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cols = detail::split(line, '\t');
    auto bad = [&](const std::string& why) {
      return ConfigError("corpus line " + std::to_string(line_no) + ": " + why);
    };
    if (cols.size() != 5) throw bad("expected 5 tab-separated columns");
    GoldenCase c;
    c.line = line_no;
    auto dir = detail::trim(cols[0]);
    if (dir == "gen") c.direction = CaseDirection::kGenerate;
    else if (dir == "rec") c.direction = CaseDirection::kRecognize;
    else if (dir == "rej") c.direction = CaseDirection::kReject;
    else throw bad("unknown direction '" + std::string(dir) + "'");
    c.measure = detail::trim(cols[1]);
    if (auto t = detail::trim(cols[2]); t != "-") {
      for (auto f : detail::split(t, '|')) c.tapes.emplace_back(detail::trim(f));
    }
    c.expected = detail::trim(cols[3]);
    if (auto t = detail::trim(cols[4]); t != "-") {
      for (auto r : detail::split(t, ',')) c.trace.emplace_back(detail::trim(r));
    }
    if (c.direction != CaseDirection::kReject &&
        (c.tapes.empty() || c.measure == "-")) {
      throw bad("gen and rec rows need a measure and tapes");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<GoldenCase> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

namespace {

std::string describe(const Grammar& g, const std::vector<Analysis>& as) {
  if (as.empty()) return "no analyses";
  std::string out;
  for (const auto& a : as) {
    if (!out.empty()) out += "; ";
    out += g.alphabet.spell(a.surface) + " [" + detail::join(a.trace, ",") +
           "] " + format_features(g.features, a.word_fs);
  }
  return out;
}

GenerateRequest request_for(const GoldenCase& c) {
  GenerateRequest r;
  r.measure = c.measure;
  for (std::size_t j = 0; j < c.tapes.size(); ++j) {
    r.morphemes.emplace_back(std::to_string(j + 1), c.tapes[j]);
  }
  return r;
}

bool same_morphemes(const Analysis& a, const GoldenCase& c) {
  if (a.morphemes.size() != c.tapes.size()) return false;
  for (std::size_t j = 0; j < c.tapes.size(); ++j) {
    if (a.morphemes[j].tape != static_cast<int>(j) + 1 ||
        a.morphemes[j].form != c.tapes[j]) {
      return false;
    }
  }
  return true;
}

}  // namespace

CaseResult run_case(const Grammar& g, const GoldenCase& c) {
  switch (c.direction) {
    case CaseDirection::kGenerate: {
      auto as = generate(g, request_for(c));
      bool ok = as.size() == 1 && g.alphabet.spell(as[0].surface) == c.expected &&
                as[0].trace == c.trace;
      return {ok, describe(g, as)};
    }
    case CaseDirection::kRecognize: {
      auto as = analyze(g, c.expected);
      const auto want = parse_features(g.features, "measure=" + c.measure);
      for (const auto& a : as) {
        if (same_morphemes(a, c) && a.trace == c.trace &&
            a.word_fs.get("measure") == want.get("measure")) {
          return {true, describe(g, as)};
        }
      }
      return {false, describe(g, as)};
    }
    case CaseDirection::kReject: {
      auto as = analyze(g, c.expected);
      return {as.empty(), describe(g, as)};
    }
  }
  return {false, "unknown direction"};
}

}  // namespace twolevel
