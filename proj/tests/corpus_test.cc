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

#include <set>

#include "test_util.h"
#include "twolevel/corpus.h"

namespace twolevel {
namespace {

const std::vector<GoldenCase>& corpus() {
  static const auto c = load_corpus(default_corpus_path());
  return c;
}

TEST(Corpus, HasEnoughCases) { EXPECT_GE(corpus().size(), 13u); }

TEST(Corpus, CoversEveryRule) {
  std::set<std::string> seen;
  for (const auto& c : corpus()) seen.insert(c.trace.begin(), c.trace.end());
  for (const auto& r : testing::arabic().rules) {
    EXPECT_TRUE(seen.count(r.id)) << r.id;
  }
}

TEST(Corpus, CoversEveryDirection) {
  std::set<CaseDirection> seen;
  for (const auto& c : corpus()) seen.insert(c.direction);
  EXPECT_EQ(seen.size(), 3u);
}

class GoldenCaseTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(GoldenCaseTest, Passes) {
  const auto& c = corpus()[GetParam()];
  auto r = run_case(testing::arabic(), c);
  EXPECT_TRUE(r.pass) << "line " << c.line << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(AllRows, GoldenCaseTest,
                         ::testing::Range<std::size_t>(0, 20));

TEST(Corpus, RowCountMatchesInstantiation) { EXPECT_EQ(corpus().size(), 20u); }

TEST(CorpusParse, Errors) {
  EXPECT_THROW(parse_corpus("gen\t1\tsmsmsx\n"), ConfigError);
  EXPECT_THROW(parse_corpus("zap\t1\ta|b\tx\tR1\n"), ConfigError);
  auto ok = parse_corpus("# c\n\nrej\t-\t-\tx\t-\n");
  ASSERT_EQ(ok.size(), 1u);
  EXPECT_EQ(ok[0].line, 3);
  EXPECT_EQ(ok[0].direction, CaseDirection::kReject);
}

TEST(CorpusRun, MismatchIsReported) {
  GoldenCase c;
  c.direction = CaseDirection::kGenerate;
  c.measure = "1";
  c.tapes = {"smsmsx", "ktb", "ui", "0"};
  c.expected = "kuttib";
  c.trace = {"R1", "R1", "R2", "R4"};
  auto r = run_case(testing::arabic(), c);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.detail.empty());
}

}  // namespace
}  // namespace twolevel
