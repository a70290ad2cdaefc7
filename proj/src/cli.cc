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

#include "twolevel/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "twolevel/api.h"
#include "twolevel/grammar.h"
#include "twolevel/prosody.h"

namespace twolevel {

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false, quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      in_token = true;
    } else if (!quoted && (c == ' ' || c == '\t' || c == '\r')) {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur += c;
      in_token = true;
    }
  }
  if (quoted) throw ConfigError("unterminated quote in '" + line + "'");
  if (in_token) out.push_back(cur);
  return out;
}

namespace {

enum class Format { kText, kJson };

struct Command {
  CLI::App* generate = nullptr;
  CLI::App* analyze = nullptr;
  CLI::App* validate = nullptr;
  CLI::App* oracle = nullptr;

  std::optional<std::string> measure, features, root, vocalism, pattern, affix;
  std::vector<std::string> morphemes;
  std::string surface;
  std::string oracle_measure;
};

void add_commands(CLI::App& app, Command& c) {
  c.generate = app.add_subcommand("generate", "Surface forms of a morpheme set");
  c.generate->add_option("--measure", c.measure, "Goal measure");
  c.generate->add_option("--features", c.features,
                         "Goal features, e.g. 'measure=2,5;voice=pass'");
  c.generate->add_option("--root", c.root, "Form on the root tape");
  c.generate->add_option("--vocalism", c.vocalism, "Form on the vocalism tape");
  c.generate->add_option("--pattern", c.pattern, "Form on the pattern tape");
  c.generate->add_option("--affix", c.affix, "Form on the affix tape");
  c.generate->add_option("--morpheme", c.morphemes,
                         "TAPE=FORM for any tape, by name or number");

  c.analyze = app.add_subcommand("analyze", "Analyses of a surface form");
  c.analyze->add_option("surface", c.surface, "Surface form (may be empty)")
      ->required();

  c.validate = app.add_subcommand("validate", "Check grammar and lexicon");

  c.oracle = app.add_subcommand(
      "oracle", "Compare the prosodic derivation with the rules");
  c.oracle->add_option("measure", c.oracle_measure, "1, 2, 3 or 8")
      ->required();
}

struct Outcome {
  int code = kExitOk;
  std::string out;
  std::string err;
};

Outcome run_command(const Grammar& g, const Command& c, Format f) {
  Outcome o;
  try {
    if (c.validate->parsed()) {
      auto d = validate(g);
      o.out = f == Format::kJson ? format_json(d) : format_text(d);
      o.code = d.empty() ? kExitOk : kExitEmpty;
      return o;
    }
    if (auto d = validate(g); !d.empty()) {
      o.err = format_text(d);
      o.code = kExitConfig;
      return o;
    }
    std::vector<Analysis> as;
    if (c.generate->parsed()) {
      GenerateRequest r;
      r.measure = c.measure;
      r.features = c.features;
      auto by_name = [&](const char* tape, const std::optional<std::string>& v) {
        if (v) r.morphemes.emplace_back(tape, *v);
      };
      by_name("pattern", c.pattern);
      by_name("root", c.root);
      by_name("vocalism", c.vocalism);
      by_name("affix", c.affix);
      for (const auto& m : c.morphemes) {
        auto eq = m.find('=');
        if (eq == std::string::npos) {
          throw ConfigError("--morpheme expects TAPE=FORM, got '" + m + "'");
        }
        r.morphemes.emplace_back(m.substr(0, eq), m.substr(eq + 1));
      }
      as = generate(g, r);
    } else if (c.analyze->parsed()) {
      as = analyze(g, c.surface);
    } else if (c.oracle->parsed()) {
      int m = 0;
      const auto& s = c.oracle_measure;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), m);
      if (ec != std::errc() || p != s.data() + s.size()) {
        throw ConfigError("measure must be a number, got '" + s + "'");
      }
      auto r = oracle_report(g, m);
      o.out = f == Format::kJson ? format_json(g, r) : format_text(g, r);
      o.code = r.agree ? kExitOk : kExitEmpty;
      return o;
    } else {
      throw ConfigError("no command given");
    }
    o.out = f == Format::kJson ? format_json(g, as) : format_text(g, as);
    o.code = as.empty() ? kExitEmpty : kExitOk;
  } catch (const std::exception& e) {
    o = {kExitConfig, {}, std::string("error: ") + e.what() + "\n"};
  }
  return o;
}

// Parses one batch line into `c`; CLI11 takes arguments in reverse.
void parse_line(CLI::App& app, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  app.parse(args);
}

Outcome run_batch_line(const Grammar& g, const std::string& line, Format f) {
  CLI::App app{"batch line"};
  app.require_subcommand(1, 1);
  Command c;
  add_commands(app, c);
  try {
    parse_line(app, split_command_line(line));
  } catch (const CLI::ParseError& e) {
    return {kExitConfig, {}, "error: " + line + ": " + e.what() + "\n"};
  } catch (const ConfigError& e) {
    return {kExitConfig, {}, std::string("error: ") + e.what() + "\n"};
  }
  return run_command(g, c, f);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multi-tape two-level morphology", "twolevel"};
  std::string grammar_path = default_grammar_path();
  std::string lexicon_path = default_lexicon_path();
  std::string format = "text";
  std::optional<std::string> batch;
  app.add_option("--grammar", grammar_path, "Grammar file (.mtg)");
  app.add_option("--lexicon", lexicon_path, "Lexicon file (.mtl)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--batch", batch,
                 "File with one command per line, run concurrently");
  Command c;
  add_commands(app, c);
  app.require_subcommand(0, 1);

  try {
    parse_line(app, args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  const Format f = format == "json" ? Format::kJson : Format::kText;
  const bool any_command = c.generate->parsed() || c.analyze->parsed() ||
                           c.validate->parsed() || c.oracle->parsed();
  if (batch.has_value() == any_command) {
    err << "error: give exactly one of a command or --batch\n";
    return kExitConfig;
  }

  Grammar g;
  try {
    g = load_grammar(grammar_path, lexicon_path, /*validate=*/false);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (!batch) {
    Outcome o = run_command(g, c, f);
    out << o.out;
    err << o.err;
    return o.code;
  }

  std::ifstream in(*batch);
  if (!in) {
    err << "error: cannot open " << *batch << "\n";
    return kExitConfig;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  std::vector<std::future<Outcome>> jobs;
  for (const auto& line : lines) {
    jobs.push_back(std::async(std::launch::async, run_batch_line,
                              std::cref(g), std::cref(line), f));
  }
  int code = kExitOk;
  for (auto& j : jobs) {
    Outcome o = j.get();
    out << o.out;
    err << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

}  // namespace twolevel
