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

#include <gtest/gtest.h>

#include "properties.h"
#include "twolevel/brute_force.h"
#include "twolevel/corpus.h"

namespace twolevel {
namespace {

using testing::arabic;
using testing::sym;

TapeConfiguration world(const Grammar& g, const std::string& affix) {
  return instantiate(g, testing::stem(g, affix)).front();
}

TEST(BruteForce, MeasureOnePartition) {
  const Grammar& g = arabic();
  auto ps = brute_force_partitions(g, world(g, "0"), sym(g, "kutib"));
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].trace(), (std::vector<std::string>{"R1", "R1", "R2", "R4"}));
  EXPECT_EQ(g.alphabet.spell(ps[0].pairs[0].surf), "ku");
  EXPECT_EQ(g.alphabet.spell(ps[0].pairs[1].surf), "ti");
  EXPECT_EQ(g.alphabet.spell(ps[0].pairs[2].surf), "b");
  EXPECT_TRUE(ps[0].pairs[3].surf.empty());
}

TEST(BruteForce, UnlicensedSurfaceHasNoPartition) {
  const Grammar& g = arabic();
  EXPECT_TRUE(brute_force_partitions(g, world(g, "0"), sym(g, "kutub")).empty());
}

TEST(BruteForce, EmptyInputHasTheEmptyPartition) {
  const Grammar& g = arabic();
  TapeConfiguration empty;
  empty.tapes.resize(g.tape_count());
  auto ps = brute_force_partitions(g, empty, SymbolString{});
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(ps[0].pairs.empty());
}

TEST(BruteForce, DefaultSegmentIsTheLongestSurface) {
  EXPECT_EQ(default_max_segment(arabic()), 3u);
}

TEST(BruteForce, BoundExceeded) {
  const Grammar& g = arabic();
  BruteForceOptions o;
  o.max_length = 4;
  EXPECT_THROW(brute_force_partitions(g, world(g, "0"), sym(g, "kutib"), o),
               ConfigError);
}

TEST(BruteForce, AgreesWithEngineOnCorpus) {
  const Grammar& g = arabic();
  auto f = testing::check_oracle_corpus(g, load_corpus(default_corpus_path()));
  EXPECT_TRUE(f.empty()) << f.size() << " failures, first: " << f.front();
}

TEST(BruteForce, AgreesWithEngineOnRandomInputs) {
  const Grammar& g = arabic();
  auto f = testing::check_oracle_random(g, 20260415, 200);
  EXPECT_TRUE(f.empty()) << f.size() << " failures, first: " << f.front();
}

}  // namespace
}  // namespace twolevel
