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

// Exhaustive reference for the partition search. Shares only the data model
// with the engine: rules are ground-instantiated over every assignment of
// their variables and segmentations are enumerated by length, so none of the
// engine's matching code is involved.

#ifndef TWOLEVEL_BRUTE_FORCE_H_
#define TWOLEVEL_BRUTE_FORCE_H_

#include <span>
#include <vector>

#include "twolevel/engine.h"
#include "twolevel/grammar.h"

namespace twolevel {

struct BruteForceOptions {
  // Longest segment tried per tape and on the surface; 0 selects
  // default_max_segment().
  std::size_t max_seg = 0;
  std::size_t max_length = 12;
  std::vector<bool> enabled;  // as SearchOptions::enabled
};

// Longest Lex (per tape) or Surf in the grammar.
std::size_t default_max_segment(const Grammar& g);

// Throws ConfigError("bound exceeded") when a tape or the surface is longer
// than options.max_length, or a rule has too many ground instances.
std::vector<Partition> brute_force_partitions(
    const Grammar& g, const TapeConfiguration& tapes,
    std::span<const Symbol> surface, const BruteForceOptions& options = {});

// Same, with the surface left open.
std::vector<Partition> brute_force_generate(
    const Grammar& g, const TapeConfiguration& tapes,
    const BruteForceOptions& options = {});

}  // namespace twolevel

#endif  // TWOLEVEL_BRUTE_FORCE_H_
