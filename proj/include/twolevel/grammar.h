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

// Rules, lexica, and the line-oriented grammar language.
//
// A grammar file (.mtg) has the sections TAPES, ALPHABET, CLASSES, FEATURES
// and RULES; a lexicon file (.mtl) has a LEXICON section. `#` starts a line
// comment. A rule is a block:
//
//   rule R6 <=>
//     lsc: C1 V
//     surf: C
//     rsc: C2 V1 C3
//     llc: *
//     lex: (sm, C, V, 0)
//     rlc: *
//     fs: measure=2,5          (optional)
//     where: X != +            (optional, `;`-separated)
//
// `*` alone is the always-satisfied context; inside a context tuple it
// matches any single symbol on that tape. `0` is epsilon.

#ifndef TWOLEVEL_GRAMMAR_H_
#define TWOLEVEL_GRAMMAR_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/features.h"
#include "twolevel/symbols.h"

namespace twolevel {

// Source line of a declaration. Never participates in equality, so that a
// printed-and-reparsed grammar compares equal to the original.
struct SourceLine {
  int value = 0;
  friend bool operator==(SourceLine, SourceLine) { return true; }
};

struct PatternElement {
  enum class Kind { kLiteral, kVariable, kEpsilon, kAny };

  Kind kind = Kind::kEpsilon;
  Symbol symbol{};       // kLiteral
  std::string variable;  // kVariable

  static PatternElement literal(Symbol s) { return {Kind::kLiteral, s, {}}; }
  static PatternElement var(std::string name) {
    return {Kind::kVariable, {}, std::move(name)};
  }
  static PatternElement epsilon() { return {}; }
  static PatternElement any() { return {Kind::kAny, {}, {}}; }

  friend bool operator==(const PatternElement&,
                         const PatternElement&) = default;
};

// One element per lexical tape.
using TuplePattern = std::vector<PatternElement>;
// A surface segment; empty means epsilon.
using SurfacePattern = std::vector<PatternElement>;

struct LexicalContext {
  bool wildcard = true;
  std::vector<TuplePattern> tuples;
  friend bool operator==(const LexicalContext&,
                         const LexicalContext&) = default;
};

struct SurfaceContext {
  bool wildcard = true;
  SurfacePattern elements;
  friend bool operator==(const SurfaceContext&,
                         const SurfaceContext&) = default;
};

enum class RuleOperator { kOptional, kObligatory };

struct Inequality {
  std::string variable;
  Symbol symbol;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct ClassRestriction {
  std::string variable;
  std::string class_name;
  friend bool operator==(const ClassRestriction&,
                         const ClassRestriction&) = default;
};

struct Rule {
  std::string id;
  RuleOperator op = RuleOperator::kOptional;
  SurfaceContext lsc;
  SurfacePattern surf;
  SurfaceContext rsc;
  LexicalContext llc;
  TuplePattern lex;
  LexicalContext rlc;
  std::optional<FeatureStructure> fs;
  std::vector<Inequality> inequalities;
  std::vector<ClassRestriction> restrictions;
  // Every variable the rule mentions, with its rule-local range after the
  // `where:` clauses are applied.
  std::map<std::string, Variable> variables;
  SourceLine line;

  bool obligatory() const { return op == RuleOperator::kObligatory; }
  bool gated() const { return fs.has_value(); }
  const Variable& variable(std::string_view name) const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct LexicalEntry {
  int tape = 1;  // 1-based
  std::string form_text;
  // Literals, or variables carried into matching (the V of `stV`).
  std::vector<PatternElement> form;
  std::string category;
  FeatureStructure fs;
  SourceLine line;

  friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

struct TapeDecl {
  std::string name;
  // Material on a prefix tape precedes the material of the other tapes.
  bool prefix = false;
  friend bool operator==(const TapeDecl&, const TapeDecl&) = default;
};

struct Grammar {
  std::vector<TapeDecl> tapes;
  Alphabet alphabet;
  std::vector<SymbolClass> classes;
  // Declared base variables (C, V, A, X); numbered forms derive from these.
  std::map<std::string, Variable> variables;
  FeatureSchema features;
  std::vector<Rule> rules;
  std::vector<LexicalEntry> lexicon;

  std::size_t tape_count() const { return tapes.size(); }
  const Rule* find_rule(std::string_view id) const;
  const SymbolClass* find_class(std::string_view name) const;
  std::optional<int> find_tape(std::string_view name) const;  // 1-based
  // Resolves `C` or a numbered variant such as `C2`.
  std::optional<Variable> resolve_variable(std::string_view name) const;

  friend bool operator==(const Grammar&, const Grammar&) = default;
};

struct Diagnostic {
  std::string subject;  // rule id, entry label, or section
  int line = 0;
  std::string message;
};

struct ParseError {
  std::string source;
  int line = 0;
  std::string message;
};

class GrammarError : public std::runtime_error {
 public:
  explicit GrammarError(std::vector<ParseError> errors);
  const std::vector<ParseError>& errors() const { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

struct ParseOptions {
  // Run validate() and report its diagnostics as errors.
  bool validate = true;
  std::string source_name = "<grammar>";
};

// Parses grammar sections, and a LEXICON section when present. Throws
// GrammarError listing every error with its line.
Grammar parse_grammar(std::string_view text, const ParseOptions& options = {});

// Adds the LEXICON section of `text` to a copy of `grammar`.
Grammar parse_lexicon(const Grammar& grammar, std::string_view text,
                      const ParseOptions& options = {});

// Reads and parses both files; an empty lexicon path skips the lexicon.
Grammar load_grammar(const std::string& grammar_path,
                     const std::string& lexicon_path, bool validate = true);

std::vector<Diagnostic> validate(const Grammar& grammar);

// DSL printers; parse(print(g)) == g.
std::string print_grammar(const Grammar& grammar);
std::string print_lexicon(const Grammar& grammar);

std::string format_tuple(const Grammar& g, const TuplePattern& tuple);
std::string format_rule_header(const Rule& rule);

// Tokenises a surface string; throws ConfigError naming the offending
// position when a character sequence is not a declared symbol.
SymbolString parse_surface(const Grammar& g, std::string_view text);

// The entries on `tape` whose written form is `form`.
std::vector<std::size_t> find_entries(const Grammar& g, int tape,
                                      std::string_view form);

}  // namespace twolevel

#endif  // TWOLEVEL_GRAMMAR_H_
