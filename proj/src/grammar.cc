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

#include "twolevel/grammar.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "text_util.h"

namespace twolevel {

using detail::join;
using detail::split;
using detail::trim;
using detail::words;

const Variable& Rule::variable(std::string_view name) const {
  auto it = variables.find(std::string(name));
  if (it == variables.end()) {
    throw ConfigError("rule " + id + " has no variable " + std::string(name));
  }
  return it->second;
}

const Rule* Grammar::find_rule(std::string_view id) const {
  for (const auto& r : rules) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const SymbolClass* Grammar::find_class(std::string_view name) const {
  for (const auto& c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::optional<int> Grammar::find_tape(std::string_view name) const {
  for (std::size_t i = 0; i < tapes.size(); ++i) {
    if (tapes[i].name == name) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::optional<Variable> Grammar::resolve_variable(std::string_view name) const {
  if (auto it = variables.find(std::string(name)); it != variables.end()) {
    return it->second;
  }
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) {
    --cut;
  }
  if (cut == 0 || cut == name.size()) return std::nullopt;
  auto base = variables.find(std::string(name.substr(0, cut)));
  if (base == variables.end()) return std::nullopt;
  Variable v = base->second;
  v.name = std::string(name);
  return v;
}

namespace {

std::string format_errors(const std::vector<ParseError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += '\n';
    out += e.source + ":" + std::to_string(e.line) + ": " + e.message;
  }
  return out;
}

bool is_variable_name(std::string_view tok) {
  return !tok.empty() && std::isupper(static_cast<unsigned char>(tok[0]));
}

enum class Section { kNone, kTapes, kAlphabet, kClasses, kFeatures, kRules,
                     kLexicon };

std::optional<Section> section_header(std::string_view line) {
  if (line == "TAPES") return Section::kTapes;
  if (line == "ALPHABET") return Section::kAlphabet;
  if (line == "CLASSES") return Section::kClasses;
  if (line == "FEATURES") return Section::kFeatures;
  if (line == "RULES") return Section::kRules;
  if (line == "LEXICON") return Section::kLexicon;
  return std::nullopt;
}

class Parser {
 public:
  Parser(Grammar g, const ParseOptions& options)
      : g_(std::move(g)), options_(options) {}

  Grammar run(std::string_view text, bool lexicon_only) {
    int line_no = 0;
    Section section = Section::kNone;
    for (std::string_view raw : split(text, '\n')) {
      ++line_no;
      line_ = line_no;
      auto hash = raw.find('#');
      std::string_view line = trim(hash == std::string_view::npos
                                       ? raw
                                       : raw.substr(0, hash));
      if (line.empty()) continue;
      if (auto s = section_header(line)) {
        finish_rule();
        section = *s;
        if (lexicon_only && section != Section::kLexicon) {
          error("only a LEXICON section is allowed here");
        }
        continue;
      }
      try {
        switch (section) {
          case Section::kNone:
            error("text outside any section");
            break;
          case Section::kTapes: tape_line(line); break;
          case Section::kAlphabet: alphabet_line(line); break;
          case Section::kClasses: classes_line(line); break;
          case Section::kFeatures: features_line(line); break;
          case Section::kRules: rules_line(line); break;
          case Section::kLexicon: lexicon_line(line); break;
        }
      } catch (const ConfigError& e) {
        error(e.what());
      }
    }
    finish_rule();
    if (!errors_.empty()) throw GrammarError(errors_);
    if (options_.validate) {
      for (const auto& d : validate(g_)) {
        errors_.push_back({options_.source_name, d.line,
                           d.subject + ": " + d.message});
      }
      if (!errors_.empty()) throw GrammarError(errors_);
    }
    return std::move(g_);
  }

 private:
  void error(std::string message) {
    errors_.push_back({options_.source_name, line_, std::move(message)});
  }

  void tape_line(std::string_view line) {
    auto w = words(line);
    if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "prefix")) {
      throw ConfigError("expected '<index> <name> [prefix]'");
    }
    if (w[0] != std::to_string(g_.tapes.size() + 1)) {
      throw ConfigError("tape index " + std::string(w[0]) + " out of order");
    }
    g_.tapes.push_back(TapeDecl{std::string(w[1]), w.size() == 3});
  }

  void alphabet_line(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("expected '<group>: <symbols>'");
    }
    std::string group(trim(line.substr(0, colon)));
    for (auto tok : words(line.substr(colon + 1))) {
      if (is_variable_name(tok)) {
        throw ConfigError("symbol '" + std::string(tok) +
                          "' must not start with a capital letter");
      }
      g_.alphabet.add(tok, group);
    }
  }

  Symbol symbol(std::string_view tok) const {
    auto s = g_.alphabet.find(tok);
    if (!s) throw ConfigError("undeclared symbol '" + std::string(tok) + "'");
    return *s;
  }

  void classes_line(std::string_view line) {
    if (auto eq = line.find('='); eq != std::string_view::npos &&
                                  line.find("!=") == std::string_view::npos) {
      std::string name(trim(line.substr(0, eq)));
      if (name.empty() || is_variable_name(name)) {
        throw ConfigError("class names start with a lower-case letter");
      }
      if (g_.alphabet.find(name)) {
        throw ConfigError("class name '" + name + "' is also a symbol");
      }
      if (g_.find_class(name)) {
        throw ConfigError("class '" + name + "' declared twice");
      }
      SymbolClass cls{name, {}, SymbolSet(g_.alphabet.size())};
      for (auto tok : words(line.substr(eq + 1))) {
        Symbol s = symbol(tok);
        cls.members.push_back(s);
        cls.set.insert(s);
      }
      g_.classes.push_back(std::move(cls));
      return;
    }
    // Variable declaration: `C : consonant`, `X : *`, `X : * != +`.
    auto colon = line.find(':');
    std::string name(trim(line.substr(0, colon)));
    if (!is_variable_name(name)) {
      throw ConfigError("variable names start with a capital letter");
    }
    if (g_.variables.contains(name)) {
      throw ConfigError("variable '" + name + "' declared twice");
    }
    Variable v{name, std::nullopt, {}, g_.alphabet.all()};
    if (colon != std::string_view::npos) {
      std::string_view rest = line.substr(colon + 1);
      std::string_view range = rest;
      std::string_view excl;
      if (auto ne = rest.find("!="); ne != std::string_view::npos) {
        range = rest.substr(0, ne);
        excl = rest.substr(ne + 2);
      }
      range = trim(range);
      if (!range.empty() && range != "*") {
        const SymbolClass* cls = g_.find_class(range);
        if (!cls) {
          throw ConfigError("undeclared class '" + std::string(range) + "'");
        }
        v.class_name = cls->name;
        v.admitted = cls->set;
      }
      for (auto tok : words(excl)) {
        Symbol s = symbol(tok);
        v.exclusions.push_back(s);
        v.admitted.erase(s);
      }
    }
    g_.variables.emplace(name, std::move(v));
  }

  void features_line(std::string_view line) {
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected '<attribute> = <values>'");
    }
    std::vector<std::string> values;
    for (auto tok : words(line.substr(eq + 1))) values.emplace_back(tok);
    g_.features.declare(std::string(trim(line.substr(0, eq))),
                        std::move(values));
  }

  // --- rules -------------------------------------------------------------

  PatternElement element(std::string_view tok) {
    if (tok == kEpsilonToken) return PatternElement::epsilon();
    if (tok == "*") return PatternElement::any();
    if (auto s = g_.alphabet.find(tok)) return PatternElement::literal(*s);
    if (is_variable_name(tok) && g_.resolve_variable(tok)) {
      return PatternElement::var(std::string(tok));
    }
    throw ConfigError("undeclared symbol or variable '" + std::string(tok) +
                      "'");
  }

  std::vector<TuplePattern> tuples(std::string_view text) {
    std::vector<TuplePattern> out;
    text = trim(text);
    if (text.empty() || text.front() != '(') {
      for (auto tok : words(text)) out.push_back({element(tok)});
      return out;
    }
    while (!text.empty()) {
      if (text.front() != '(') {
        throw ConfigError("expected '(' in tuple list");
      }
      auto close = text.find(')');
      if (close == std::string_view::npos) {
        throw ConfigError("unterminated tuple");
      }
      TuplePattern t;
      for (auto item : split(text.substr(1, close - 1), ',')) {
        auto tok = trim(item);
        if (tok.empty()) throw ConfigError("empty tuple element");
        t.push_back(element(tok));
      }
      out.push_back(std::move(t));
      text = trim(text.substr(close + 1));
    }
    return out;
  }

  LexicalContext lexical_context(std::string_view text) {
    text = trim(text);
    if (text == "*") return {};
    return LexicalContext{false, tuples(text)};
  }

  SurfacePattern surface_elements(std::string_view text) {
    SurfacePattern out;
    auto w = words(text);
    if (w.size() == 1 && w[0] == kEpsilonToken) return out;
    for (auto tok : w) out.push_back(element(tok));
    return out;
  }

  SurfaceContext surface_context(std::string_view text) {
    text = trim(text);
    if (text == "*") return {};
    return SurfaceContext{false, surface_elements(text)};
  }

  void rules_line(std::string_view line) {
    auto w = words(line);
    if (!w.empty() && w[0] == "rule") {
      finish_rule();
      if (w.size() != 3) throw ConfigError("expected 'rule <id> <op>'");
      Rule r;
      r.id = std::string(w[1]);
      if (w[2] == "=>" || w[2] == "⇒") {
        r.op = RuleOperator::kOptional;
      } else if (w[2] == "<=>" || w[2] == "⇔") {
        r.op = RuleOperator::kObligatory;
      } else {
        throw ConfigError("unknown rule operator '" + std::string(w[2]) + "'");
      }
      r.line.value = line_;
      rule_ = std::move(r);
      seen_keys_.clear();
      return;
    }
    if (!rule_) throw ConfigError("rule field outside a rule block");
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("expected '<field>: <value>'");
    }
    std::string key(trim(line.substr(0, colon)));
    std::string_view value = trim(line.substr(colon + 1));
    if (!seen_keys_.insert(key).second) {
      throw ConfigError("field '" + key + "' repeated in rule " + rule_->id);
    }
    Rule& r = *rule_;
    if (key == "lsc") {
      r.lsc = surface_context(value);
    } else if (key == "rsc") {
      r.rsc = surface_context(value);
    } else if (key == "surf") {
      r.surf = surface_elements(value);
    } else if (key == "llc") {
      r.llc = lexical_context(value);
      for (const auto& t : r.llc.tuples) check_arity(r, "llc", t);
    } else if (key == "rlc") {
      r.rlc = lexical_context(value);
      for (const auto& t : r.rlc.tuples) check_arity(r, "rlc", t);
    } else if (key == "lex") {
      auto t = tuples(value);
      if (t.size() != 1) {
        throw ConfigError("lex takes exactly one tuple in rule " + r.id);
      }
      r.lex = std::move(t.front());
      check_arity(r, "lex", r.lex);
    } else if (key == "fs") {
      r.fs = parse_features(g_.features, value);
    } else if (key == "where") {
      for (auto clause : split(value, ';')) {
        clause = trim(clause);
        if (clause.empty()) continue;
        auto cw = words(clause);
        if (cw.size() == 3 && cw[1] == "!=") {
          element(cw[0]);
          r.inequalities.push_back({std::string(cw[0]), symbol(cw[2])});
        } else if (cw.size() == 3 && cw[1] == "in") {
          element(cw[0]);
          if (!g_.find_class(cw[2])) {
            throw ConfigError("undeclared class '" + std::string(cw[2]) + "'");
          }
          r.restrictions.push_back({std::string(cw[0]), std::string(cw[2])});
        } else {
          throw ConfigError("expected 'X != sym' or 'X in class', got '" +
                            std::string(clause) + "'");
        }
      }
    } else {
      throw ConfigError("unknown rule field '" + key + "'");
    }
  }

  void check_arity(const Rule& r, std::string_view field,
                   const TuplePattern& t) {
    if (t.size() != g_.tape_count()) {
      error("arity mismatch in rule " + r.id + ": " + std::string(field) +
            " tuple has " + std::to_string(t.size()) + " elements, " +
            std::to_string(g_.tape_count()) + " tapes declared");
    }
  }

  void finish_rule() {
    if (!rule_) return;
    Rule r = std::move(*rule_);
    rule_.reset();
    int saved = line_;
    line_ = r.line.value;
    if (!seen_keys_.contains("lex")) error("rule " + r.id + " has no lex");
    if (!seen_keys_.contains("surf")) error("rule " + r.id + " has no surf");
    if (g_.find_rule(r.id)) error("duplicate rule id " + r.id);
    resolve_rule_variables(g_, r);
    line_ = saved;
    g_.rules.push_back(std::move(r));
  }

 public:
  static void resolve_rule_variables(const Grammar& g, Rule& r) {
    std::set<std::string> names;
    auto collect = [&](const std::vector<PatternElement>& elems) {
      for (const auto& e : elems) {
        if (e.kind == PatternElement::Kind::kVariable) names.insert(e.variable);
      }
    };
    collect(r.lsc.elements);
    collect(r.rsc.elements);
    collect(r.surf);
    collect(r.lex);
    for (const auto& t : r.llc.tuples) collect(t);
    for (const auto& t : r.rlc.tuples) collect(t);
    for (const auto& q : r.inequalities) names.insert(q.variable);
    for (const auto& q : r.restrictions) names.insert(q.variable);
    r.variables.clear();
    for (const auto& n : names) {
      if (auto v = g.resolve_variable(n)) r.variables.emplace(n, *v);
    }
    for (const auto& q : r.inequalities) {
      auto it = r.variables.find(q.variable);
      if (it == r.variables.end()) continue;
      it->second.exclusions.push_back(q.symbol);
      it->second.admitted.erase(q.symbol);
    }
    for (const auto& q : r.restrictions) {
      auto it = r.variables.find(q.variable);
      const SymbolClass* cls = g.find_class(q.class_name);
      if (it == r.variables.end() || !cls) continue;
      it->second.admitted = it->second.admitted.intersect(cls->set);
    }
  }

 private:
  // --- lexicon -----------------------------------------------------------

  std::vector<PatternElement> lexical_form(std::string_view text) {
    std::vector<PatternElement> out;
    if (text == kEpsilonToken) return out;
    while (!text.empty()) {
      if (text.front() == '.') {
        text.remove_prefix(1);
        continue;
      }
      std::size_t sym = g_.alphabet.longest_match(text);
      std::size_t var = 0;
      for (const auto& [name, v] : g_.variables) {
        if (name.size() > var && text.starts_with(name)) var = name.size();
      }
      if (sym == 0 && var == 0) {
        throw ConfigError("undeclared symbol in form at '" +
                          std::string(text) + "'");
      }
      if (sym >= var) {
        out.push_back(
            PatternElement::literal(*g_.alphabet.find(text.substr(0, sym))));
        text.remove_prefix(sym);
      } else {
        out.push_back(PatternElement::var(std::string(text.substr(0, var))));
        text.remove_prefix(var);
      }
    }
    return out;
  }

  void lexicon_line(std::string_view line) {
    auto w = words(line);
    if (w.size() < 3) {
      throw ConfigError("expected '<tape> <form> <category> [features]'");
    }
    LexicalEntry e;
    try {
      e.tape = std::stoi(std::string(w[0]));
    } catch (const std::exception&) {
      throw ConfigError("tape index '" + std::string(w[0]) +
                        "' is not a number");
    }
    e.form_text = std::string(w[1]);
    e.form = lexical_form(w[1]);
    e.category = std::string(w[2]);
    e.line.value = line_;
    std::string rest;
    for (std::size_t i = 3; i < w.size(); ++i) {
      if (!rest.empty()) rest += ' ';
      rest += w[i];
    }
    std::string_view fs = trim(rest);
    if (!fs.empty()) {
      if (fs.front() != '[' || fs.back() != ']') {
        throw ConfigError("feature structure must be written [attr=v,...]");
      }
      e.fs = parse_features(g_.features, fs.substr(1, fs.size() - 2));
    }
    g_.lexicon.push_back(std::move(e));
  }

  Grammar g_;
  const ParseOptions& options_;
  std::vector<ParseError> errors_;
  std::optional<Rule> rule_;
  std::set<std::string> seen_keys_;
  int line_ = 0;
};

}  // namespace

GrammarError::GrammarError(std::vector<ParseError> errors)
    : std::runtime_error(format_errors(errors)), errors_(std::move(errors)) {}

Grammar parse_grammar(std::string_view text, const ParseOptions& options) {
  return Parser(Grammar{}, options).run(text, false);
}

Grammar parse_lexicon(const Grammar& grammar, std::string_view text,
                      const ParseOptions& options) {
  return Parser(grammar, options).run(text, true);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Grammar load_grammar(const std::string& grammar_path,
                     const std::string& lexicon_path, bool validate) {
  ParseOptions gopt;
  gopt.source_name = grammar_path;
  gopt.validate = validate && lexicon_path.empty();
  Grammar g = parse_grammar(read_file(grammar_path), gopt);
  if (lexicon_path.empty()) return g;
  ParseOptions lopt;
  lopt.source_name = lexicon_path;
  lopt.validate = validate;
  return parse_lexicon(g, read_file(lexicon_path), lopt);
}

std::vector<Diagnostic> validate(const Grammar& g) {
  std::vector<Diagnostic> out;
  auto add = [&](std::string subject, int line, std::string message) {
    out.push_back({std::move(subject), line, std::move(message)});
  };
  for (const auto& cls : g.classes) {
    if (cls.members.empty()) add("class " + cls.name, 0, "class is empty");
  }
  std::set<std::string> ids;
  for (const auto& r : g.rules) {
    const int line = r.line.value;
    if (!ids.insert(r.id).second) add(r.id, line, "duplicate rule id");
    if (r.lex.size() != g.tape_count()) {
      add(r.id, line, "lex arity " + std::to_string(r.lex.size()) +
                          " does not match " + std::to_string(g.tape_count()) +
                          " tapes");
    }
    for (const auto* ctx : {&r.llc, &r.rlc}) {
      for (const auto& t : ctx->tuples) {
        if (t.size() != g.tape_count()) {
          add(r.id, line, "context tuple arity " + std::to_string(t.size()) +
                              " does not match " +
                              std::to_string(g.tape_count()) + " tapes");
        }
      }
    }
    bool trivial = true;
    for (const auto& e : r.lex) {
      if (e.kind == PatternElement::Kind::kAny) {
        add(r.id, line, "'*' is only legal as a whole context");
      }
      if (e.kind != PatternElement::Kind::kEpsilon) trivial = false;
    }
    if (r.obligatory() && trivial) {
      add(r.id, line, "obligatory rule needs a non-epsilon lex");
    }
    for (const auto& e : r.surf) {
      if (e.kind == PatternElement::Kind::kAny) {
        add(r.id, line, "'*' is not a surface element");
      }
      if (e.kind == PatternElement::Kind::kEpsilon) {
        add(r.id, line, "epsilon must be the sole surface element");
      }
    }
    for (const auto* ctx : {&r.lsc, &r.rsc}) {
      for (const auto& e : ctx->elements) {
        if (e.kind == PatternElement::Kind::kEpsilon) {
          add(r.id, line, "epsilon inside a surface context");
        }
      }
    }
    for (const auto& [name, v] : r.variables) {
      if (v.admitted.empty()) {
        add(r.id, line, "variable " + name +
                            " has no admissible symbol (incompatible classes)");
      }
    }
    std::set<std::string> used;
    auto note = [&](const std::vector<PatternElement>& elems) {
      for (const auto& e : elems) {
        if (e.kind == PatternElement::Kind::kVariable) used.insert(e.variable);
      }
    };
    note(r.lsc.elements);
    note(r.rsc.elements);
    note(r.surf);
    note(r.lex);
    for (const auto& t : r.llc.tuples) note(t);
    for (const auto& t : r.rlc.tuples) note(t);
    for (const auto& n : used) {
      if (!r.variables.contains(n)) {
        add(r.id, line, "undeclared variable " + n);
      }
    }
    if (r.fs) {
      for (const auto& [attr, mask] : r.fs->attributes()) {
        if (!g.features.has(attr)) {
          add(r.id, line, "undeclared attribute " + attr);
        }
      }
    }
  }
  for (std::size_t i = 0; i < g.lexicon.size(); ++i) {
    const auto& e = g.lexicon[i];
    std::string subject = "entry " + std::to_string(e.tape) + " " +
                          e.form_text;
    if (e.tape < 1 || static_cast<std::size_t>(e.tape) > g.tape_count()) {
      add(subject, e.line.value,
          "tape " + std::to_string(e.tape) + " out of range 1.." +
              std::to_string(g.tape_count()));
    }
    for (const auto& el : e.form) {
      if (el.kind == PatternElement::Kind::kVariable &&
          !g.resolve_variable(el.variable)) {
        add(subject, e.line.value, "undeclared variable " + el.variable);
      }
    }
    for (const auto& [attr, mask] : e.fs.attributes()) {
      if (!g.features.has(attr)) {
        add(subject, e.line.value, "undeclared attribute " + attr);
      }
    }
  }
  return out;
}

namespace {

std::string format_element(const Grammar& g, const PatternElement& e) {
  switch (e.kind) {
    case PatternElement::Kind::kLiteral: return g.alphabet.name(e.symbol);
    case PatternElement::Kind::kVariable: return e.variable;
    case PatternElement::Kind::kEpsilon: return std::string(kEpsilonToken);
    case PatternElement::Kind::kAny: return "*";
  }
  return {};
}

std::string format_sequence(const Grammar& g,
                            const std::vector<PatternElement>& elems) {
  if (elems.empty()) return std::string(kEpsilonToken);
  std::vector<std::string> parts;
  for (const auto& e : elems) parts.push_back(format_element(g, e));
  return join(parts, " ");
}

std::string format_context(const Grammar& g, const SurfaceContext& c) {
  return c.wildcard ? "*" : format_sequence(g, c.elements);
}

std::string format_context(const Grammar& g, const LexicalContext& c) {
  if (c.wildcard) return "*";
  std::vector<std::string> parts;
  for (const auto& t : c.tuples) parts.push_back(format_tuple(g, t));
  return join(parts, " ");
}

}  // namespace

std::string format_tuple(const Grammar& g, const TuplePattern& tuple) {
  std::vector<std::string> parts;
  for (const auto& e : tuple) parts.push_back(format_element(g, e));
  return "(" + join(parts, ", ") + ")";
}

std::string format_rule_header(const Rule& r) {
  return "rule " + r.id + (r.obligatory() ? " <=>" : " =>");
}

std::string print_grammar(const Grammar& g) {
  std::ostringstream out;
  out << "TAPES\n";
  for (std::size_t i = 0; i < g.tapes.size(); ++i) {
    out << (i + 1) << ' ' << g.tapes[i].name
        << (g.tapes[i].prefix ? " prefix" : "") << '\n';
  }
  out << "\nALPHABET\n";
  for (const auto& grp : g.alphabet.groups()) {
    out << grp.name << ": " << g.alphabet.spell_spaced(grp.symbols) << '\n';
  }
  out << "\nCLASSES\n";
  for (const auto& cls : g.classes) {
    out << cls.name << " = " << g.alphabet.spell_spaced(cls.members) << '\n';
  }
  for (const auto& [name, v] : g.variables) {
    out << name << " : " << v.class_name.value_or("*");
    if (!v.exclusions.empty()) {
      out << " != " << g.alphabet.spell_spaced(v.exclusions);
    }
    out << '\n';
  }
  out << "\nFEATURES\n";
  for (const auto& attr : g.features.attributes()) {
    out << attr << " = " << join(g.features.values(attr), " ") << '\n';
  }
  out << "\nRULES\n";
  for (const auto& r : g.rules) {
    out << format_rule_header(r) << '\n';
    out << "  lsc: " << format_context(g, r.lsc) << '\n';
    out << "  surf: " << format_sequence(g, r.surf) << '\n';
    out << "  rsc: " << format_context(g, r.rsc) << '\n';
    out << "  llc: " << format_context(g, r.llc) << '\n';
    out << "  lex: " << format_tuple(g, r.lex) << '\n';
    out << "  rlc: " << format_context(g, r.rlc) << '\n';
    if (r.fs) out << "  fs: " << format_features(g.features, *r.fs) << '\n';
    std::vector<std::string> where;
    for (const auto& q : r.inequalities) {
      where.push_back(q.variable + " != " + g.alphabet.name(q.symbol));
    }
    for (const auto& q : r.restrictions) {
      where.push_back(q.variable + " in " + q.class_name);
    }
    if (!where.empty()) out << "  where: " << join(where, "; ") << '\n';
  }
  return out.str();
}

std::string print_lexicon(const Grammar& g) {
  std::ostringstream out;
  out << "LEXICON\n";
  for (const auto& e : g.lexicon) {
    out << e.tape << ' ' << e.form_text << ' ' << e.category << " ["
        << format_features(g.features, e.fs) << "]\n";
  }
  return out.str();
}

SymbolString parse_surface(const Grammar& g, std::string_view text) {
  SymbolString out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t n = g.alphabet.longest_match(text.substr(pos));
    if (n == 0) {
      throw ConfigError("undeclared symbol at position " +
                        std::to_string(pos) + " in '" + std::string(text) +
                        "'");
    }
    out.push_back(*g.alphabet.find(text.substr(pos, n)));
    pos += n;
  }
  return out;
}

std::vector<std::size_t> find_entries(const Grammar& g, int tape,
                                      std::string_view form) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.lexicon.size(); ++i) {
    if (g.lexicon[i].tape == tape && g.lexicon[i].form_text == form) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace twolevel
