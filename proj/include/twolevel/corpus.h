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

// Golden cases: tab-separated `direction measure tapes expected trace`.
//
//   gen  2   smsmsx|ktb|ui|0  kuttib   R1,R7,R1,R2,R4
//   rec  2   smsmsx|ktb|ui|0  kuttib   R1,R7,R1,R2,R4
//   rej  -   -                'ukutib  -
//
// For `gen` the measure is the goal; for `rec` it is the exact measure set
// of the expected analysis. Tape forms are listed in tape order.

#ifndef TWOLEVEL_CORPUS_H_
#define TWOLEVEL_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "twolevel/grammar.h"

namespace twolevel {

enum class CaseDirection { kGenerate, kRecognize, kReject };

struct GoldenCase {
  CaseDirection direction = CaseDirection::kGenerate;
  std::string measure;             // "-" when not applicable
  std::vector<std::string> tapes;  // written forms, tape order
  std::string expected;            // surface
  std::vector<std::string> trace;  // rule ids
  int line = 0;
};

// Throws ConfigError naming the line for malformed rows.
std::vector<GoldenCase> parse_corpus(std::string_view text);
std::vector<GoldenCase> load_corpus(const std::string& path);

struct CaseResult {
  bool pass = false;
  std::string detail;
};

CaseResult run_case(const Grammar& g, const GoldenCase& c);

}  // namespace twolevel

#endif  // TWOLEVEL_CORPUS_H_
