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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "twolevel/api.h"
#include "twolevel/cli.h"

namespace twolevel {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, GenerateMeasureTwo) {
  auto r = run({"generate", "--root", "ktb", "--measure", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "kuttib\tR1,R7,R1,R2,R4\tmeasure=2;tense=perf;voice=pass\t"
            "pattern:smsmsx root:ktb vocalism:ui affix:0\n");
}

TEST(Cli, GenerateByMorphemeOption) {
  auto r = run({"generate", "--morpheme", "4=n", "--morpheme", "root=ktb"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, 7), "nkutib\t");
}

TEST(Cli, MeasureOutsideDomainIsAConfigError) {
  auto r = run({"generate", "--root", "ktb", "--measure", "9"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("value 9 outside domain of measure"), std::string::npos);
}

TEST(Cli, AnalyzeWithoutResult) {
  auto r = run({"analyze", "'ukutib"});
  EXPECT_EQ(r.code, kExitEmpty);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, AnalyzeEmptyString) {
  auto r = run({"analyze", ""});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0\t\t\t\n");
}

TEST(Cli, UnknownCommandAndMissingFiles) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"--grammar", "/nonexistent.mtg", "validate"}).code,
            kExitConfig);
  EXPECT_EQ(run({"--format", "xml", "validate"}).code, kExitConfig);
}

TEST(Cli, Validate) {
  auto r = run({"validate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  auto j = run({"--format", "json", "validate"});
  EXPECT_EQ(j.out, "[]\n");
}

TEST(Cli, InvalidGrammarBlocksOtherCommands) {
  std::ifstream in(default_grammar_path());
  std::stringstream text;
  text << in.rdbuf();
  std::string g = text.str();
  g.replace(g.find("lex: (sx, C, 0, 0)"), 18, "lex: (0, 0, 0, 0)");
  auto path = temp_file("twolevel_cli_bad.mtg", g);
  EXPECT_EQ(run({"--grammar", path, "validate"}).code, kExitEmpty);
  EXPECT_EQ(run({"--grammar", path, "analyze", "kutib"}).code, kExitConfig);
}

TEST(Cli, Oracle) {
  auto r = run({"oracle", "8"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "ktutib agree\n");
  EXPECT_EQ(run({"oracle", "7"}).code, kExitConfig);
  EXPECT_EQ(run({"oracle", "x"}).code, kExitConfig);
  auto j = nlohmann::json::parse(run({"--format", "json", "oracle", "2"}).out);
  EXPECT_EQ(j["oracle"], "kuttib");
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, JsonIsStableUnderReparse) {
  auto r = run({"--format", "json", "analyze", "kutib"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["surface"], "kutib");
  EXPECT_EQ(j[0]["features"]["measure"],
            (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(j[0]["morphemes"].size(), 4u);
  EXPECT_EQ(j[0]["trace"],
            (std::vector<std::string>{"R1", "R1", "R2", "R4"}));
}

TEST(Cli, BatchKeepsInputOrder) {
  auto path = temp_file("twolevel_cli_batch.txt",
                        "# measures in reverse\n"
                        "generate --measure 10\n"
                        "generate --measure 8\n"
                        "\n"
                        "analyze 'uktib\n"
                        "analyze \"\"\n"
                        "generate --measure 1\n");
  auto r = run({"--batch", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> firsts;
  std::istringstream lines(r.out);
  for (std::string l; std::getline(lines, l);) {
    firsts.push_back(l.substr(0, l.find('\t')));
  }
  EXPECT_EQ(firsts, (std::vector<std::string>{"stuktib", "ktutib", "'uktib",
                                              "0", "kutib"}));
}

TEST(Cli, BatchExitIsTheWorstLine) {
  auto path = temp_file("twolevel_cli_batch2.txt",
                        "analyze kutib\nanalyze kutub\n");
  EXPECT_EQ(run({"--batch", path}).code, kExitEmpty);
  auto bad = temp_file("twolevel_cli_batch3.txt",
                       "analyze kutib\ngenerate --measure 9\n");
  EXPECT_EQ(run({"--batch", bad}).code, kExitConfig);
  EXPECT_EQ(run({"--batch", path, "validate"}).code, kExitConfig);
}

TEST(SplitCommandLine, QuotesAndGlottalStops) {
  EXPECT_EQ(split_command_line("analyze 'uktib"),
            (std::vector<std::string>{"analyze", "'uktib"}));
  EXPECT_EQ(split_command_line("analyze \"\"  "),
            (std::vector<std::string>{"analyze", ""}));
  EXPECT_EQ(split_command_line("generate --features \"voice=pass; tense=perf\""),
            (std::vector<std::string>{"generate", "--features",
                                      "voice=pass; tense=perf"}));
}

}  // namespace
}  // namespace twolevel
