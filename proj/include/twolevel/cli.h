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

#ifndef TWOLEVEL_CLI_H_
#define TWOLEVEL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace twolevel {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEmpty = 1;
inline constexpr int kExitConfig = 2;

// Runs the command line `args` (without the program name). Returns the
// exit status: 0 with results, 1 without, 2 on a configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Splits a batch line on blanks; double quotes group, so `""` is an empty
// argument. Single quotes are ordinary characters (the glottal stop).
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace twolevel

#endif  // TWOLEVEL_CLI_H_
