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

#include "twolevel/engine.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace twolevel {

TapeConfiguration TapeConfiguration::from_symbols(
    const std::vector<SymbolString>& t) {
  TapeConfiguration out;
  for (const auto& tape : t) {
    auto& cells = out.tapes.emplace_back();
    for (Symbol s : tape) cells.push_back({s, {}});
  }
  return out;
}

std::vector<SymbolString> TapeConfiguration::symbols() const {
  std::vector<SymbolString> out;
  for (const auto& tape : tapes) {
    auto& s = out.emplace_back();
    for (const auto& c : tape) s.push_back(c.symbol);
  }
  return out;
}

bool Pair::lexically_empty() const {
  return std::all_of(lex.begin(), lex.end(),
                     [](const SymbolString& s) { return s.empty(); });
}

std::vector<std::string> Partition::trace() const {
  std::vector<std::string> out;
  for (const auto& p : pairs) out.push_back(p.rule);
  return out;
}

SymbolString Partition::surface() const {
  SymbolString out;
  for (const auto& p : pairs) out.insert(out.end(), p.surf.begin(), p.surf.end());
  return out;
}

std::vector<SymbolString> Partition::lexical() const {
  std::vector<SymbolString> out;
  for (const auto& p : pairs) {
    if (out.size() < p.lex.size()) out.resize(p.lex.size());
    for (std::size_t j = 0; j < p.lex.size(); ++j) {
      out[j].insert(out[j].end(), p.lex[j].begin(), p.lex[j].end());
    }
  }
  return out;
}

namespace {

using Kind = PatternElement::Kind;

// A symbol seen by the matcher. `origin` is set only when the cell should be
// treated as underspecified (obligation checks on variable-derived cells).
struct CellRef {
  Symbol symbol;
  const Variable* origin = nullptr;
};

// Matches `pattern` against `cells` element by element, appending every
// resulting binding to `out`.
void match_cells(const Rule& rule, std::span<const PatternElement> pattern,
                 std::span<const CellRef> cells, const Binding& binding,
                 std::vector<Binding>& out) {
  if (pattern.empty()) {
    out.push_back(binding);
    return;
  }
  const PatternElement& e = pattern.front();
  const CellRef& c = cells.front();
  auto rest_p = pattern.subspan(1);
  auto rest_c = cells.subspan(1);
  switch (e.kind) {
    case Kind::kAny:
      match_cells(rule, rest_p, rest_c, binding, out);
      return;
    case Kind::kEpsilon:
      return;
    case Kind::kLiteral:
      if (c.origin ? c.origin->admits(e.symbol) : c.symbol == e.symbol) {
        match_cells(rule, rest_p, rest_c, binding, out);
      }
      return;
    case Kind::kVariable: {
      const Variable& v = rule.variable(e.variable);
      if (!c.origin) {
        if (auto b = bind(binding, v, c.symbol)) {
          match_cells(rule, rest_p, rest_c, *b, out);
        }
        return;
      }
      if (auto bound = binding.get(e.variable)) {
        if (c.origin->admits(*bound)) {
          match_cells(rule, rest_p, rest_c, binding, out);
        }
        return;
      }
      for (Symbol s : v.admitted.intersect(c.origin->admitted).members()) {
        if (auto b = bind(binding, v, s)) {
          match_cells(rule, rest_p, rest_c, *b, out);
        }
      }
      return;
    }
  }
}

std::vector<PatternElement> non_epsilon(std::span<const PatternElement> p) {
  std::vector<PatternElement> out;
  for (const auto& e : p) {
    if (e.kind != Kind::kEpsilon) out.push_back(e);
  }
  return out;
}

// Per-tape projection of a lexical context, epsilons dropped.
std::vector<std::vector<PatternElement>> project(const LexicalContext& ctx,
                                                 std::size_t tapes) {
  std::vector<std::vector<PatternElement>> out(tapes);
  for (const auto& tuple : ctx.tuples) {
    for (std::size_t j = 0; j < tapes && j < tuple.size(); ++j) {
      if (tuple[j].kind != Kind::kEpsilon) out[j].push_back(tuple[j]);
    }
  }
  return out;
}

// Window of `n` cells ending (left) or starting (right) at `pos`.
std::optional<std::span<const CellRef>> window(std::span<const CellRef> cells,
                                               std::size_t pos, std::size_t n,
                                               Direction d) {
  if (d == Direction::kLeft) {
    if (pos < n || pos > cells.size()) return std::nullopt;
    return cells.subspan(pos - n, n);
  }
  if (pos + n > cells.size()) return std::nullopt;
  return cells.subspan(pos, n);
}

std::vector<Binding> match_lexical_all(
    const Rule& rule, const LexicalContext& ctx,
    const std::vector<std::vector<CellRef>>& tapes,
    std::span<const std::size_t> positions, Direction d,
    const Binding& binding) {
  if (ctx.wildcard) return {binding};
  auto proj = project(ctx, tapes.size());
  std::vector<Binding> current{binding};
  for (std::size_t j = 0; j < tapes.size(); ++j) {
    if (proj[j].empty()) continue;
    auto w = window(tapes[j], positions[j], proj[j].size(), d);
    if (!w) return {};
    std::vector<Binding> next;
    for (const auto& b : current) match_cells(rule, proj[j], *w, b, next);
    current = std::move(next);
    if (current.empty()) return {};
  }
  return current;
}

std::vector<Binding> match_surface_all(const Rule& rule,
                                       const SurfaceContext& ctx,
                                       std::span<const CellRef> surface,
                                       std::size_t pos, Direction d,
                                       const Binding& binding) {
  if (ctx.wildcard) return {binding};
  auto pat = non_epsilon(ctx.elements);
  auto w = window(surface, pos, pat.size(), d);
  if (!w) return {};
  std::vector<Binding> out;
  match_cells(rule, pat, *w, binding, out);
  return out;
}

std::vector<CellRef> plain_cells(std::span<const Symbol> symbols) {
  std::vector<CellRef> out;
  for (Symbol s : symbols) out.push_back({s, nullptr});
  return out;
}

std::vector<std::vector<CellRef>> plain_tapes(const TapeConfiguration& t) {
  std::vector<std::vector<CellRef>> out;
  for (const auto& tape : t.tapes) {
    auto& cells = out.emplace_back();
    for (const auto& c : tape) cells.push_back({c.symbol, nullptr});
  }
  return out;
}

std::optional<Binding> first(std::vector<Binding> v) {
  if (v.empty()) return std::nullopt;
  return std::move(v.front());
}

// Matches a Lex tuple against a pair's per-tape segments.
std::vector<Binding> match_lex(const Rule& rule,
                               const std::vector<std::span<const CellRef>>& seg,
                               const Binding& binding) {
  std::vector<Binding> current{binding};
  for (std::size_t j = 0; j < rule.lex.size(); ++j) {
    const auto& e = rule.lex[j];
    const std::size_t want = e.kind == Kind::kEpsilon ? 0 : 1;
    if (j >= seg.size() || seg[j].size() != want) return {};
    if (want == 0) continue;
    std::vector<Binding> next;
    for (const auto& b : current) {
      match_cells(rule, std::span(&e, 1), seg[j], b, next);
    }
    current = std::move(next);
    if (current.empty()) return {};
  }
  return current;
}

// Pair boundaries: lexical cut points and surface offsets before each pair,
// plus the final ones.
struct Boundaries {
  std::vector<std::vector<std::size_t>> lex;
  std::vector<std::size_t> surf;
};

Boundaries boundaries(const Partition& p, std::size_t tape_count) {
  Boundaries b;
  std::vector<std::size_t> pos(tape_count, 0);
  std::size_t s = 0;
  for (const auto& pair : p.pairs) {
    b.lex.push_back(pos);
    b.surf.push_back(s);
    for (std::size_t j = 0; j < tape_count && j < pair.lex.size(); ++j) {
      pos[j] += pair.lex[j].size();
    }
    s += pair.surf.size();
  }
  b.lex.push_back(pos);
  b.surf.push_back(s);
  return b;
}

// Surface cells that copy a variable-derived tape cell through a shared
// rule variable inherit its origin.
std::vector<std::string> surface_marks(const Grammar& g, const Partition& p,
                                       const TapeConfiguration& tapes,
                                       const Boundaries& b) {
  std::vector<std::string> marks;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    const Pair& pair = p.pairs[i];
    const Rule* rule = g.find_rule(pair.rule);
    std::vector<std::string> local(pair.surf.size());
    if (rule && rule->surf.size() == pair.surf.size()) {
      for (std::size_t k = 0; k < rule->surf.size(); ++k) {
        const auto& se = rule->surf[k];
        if (se.kind != Kind::kVariable) continue;
        for (std::size_t j = 0; j < rule->lex.size(); ++j) {
          const auto& le = rule->lex[j];
          if (le.kind != Kind::kVariable || le.variable != se.variable) continue;
          if (pair.lex[j].size() != 1) continue;
          const auto& cell = tapes.tapes[j][b.lex[i][j]];
          if (!cell.variable.empty()) local[k] = cell.variable;
        }
      }
    }
    marks.insert(marks.end(), local.begin(), local.end());
  }
  return marks;
}

class OriginCache {
 public:
  explicit OriginCache(const Grammar& g) : g_(g) {}
  const Variable* get(const std::string& name) {
    if (name.empty()) return nullptr;
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      auto v = g_.resolve_variable(name);
      if (!v) return nullptr;
      it = cache_.emplace(name, std::move(*v)).first;
    }
    return &it->second;
  }

 private:
  const Grammar& g_;
  std::map<std::string, Variable> cache_;
};

bool instantiates_surf(const Rule& rule, const SymbolString& surf,
                       const Binding& b) {
  auto pat = non_epsilon(rule.surf);
  if (pat.size() != surf.size()) return false;
  auto cells = plain_cells(surf);
  std::vector<Binding> out;
  match_cells(rule, pat, cells, b, out);
  return !out.empty();
}

bool satisfies_where(const Rule& rule, const Binding& b) {
  for (const auto& ineq : rule.inequalities) {
    if (b.get(ineq.variable) == ineq.symbol) return false;
  }
  return true;
}

}  // namespace

std::optional<Binding> match_context(const Grammar& g, const Rule& rule,
                                     const LexicalContext& context,
                                     const TapeConfiguration& tapes,
                                     std::span<const std::size_t> positions,
                                     Direction direction, Binding binding) {
  (void)g;
  return first(match_lexical_all(rule, context, plain_tapes(tapes), positions,
                                 direction, binding));
}

std::optional<Binding> match_context(const Grammar& g, const Rule& rule,
                                     const SurfaceContext& context,
                                     std::span<const Symbol> surface,
                                     std::size_t position, Direction direction,
                                     Binding binding) {
  (void)g;
  auto cells = plain_cells(surface);
  return first(
      match_surface_all(rule, context, cells, position, direction, binding));
}

std::vector<Violation> check_obligatory(const Grammar& g,
                                        const Partition& partition,
                                        const TapeConfiguration& tapes) {
  std::vector<Violation> out;
  const std::size_t n = tapes.tapes.size();
  const Boundaries b = boundaries(partition, n);
  const SymbolString surface = partition.surface();
  const auto marks = surface_marks(g, partition, tapes, b);

  OriginCache origins(g);
  std::vector<std::vector<CellRef>> lex_cells;
  for (const auto& tape : tapes.tapes) {
    auto& cells = lex_cells.emplace_back();
    for (const auto& c : tape) cells.push_back({c.symbol, origins.get(c.variable)});
  }
  std::vector<CellRef> surf_cells;
  for (std::size_t k = 0; k < surface.size(); ++k) {
    surf_cells.push_back({surface[k], origins.get(marks[k])});
  }

  for (const Rule& rule : g.rules) {
    if (!rule.obligatory()) continue;
    for (std::size_t i = 0; i < partition.pairs.size(); ++i) {
      const Pair& pair = partition.pairs[i];
      const Rule* licensing = g.find_rule(pair.rule);
      if (licensing && licensing->gated() && !rule.gated()) continue;
      std::vector<std::span<const CellRef>> seg;
      for (std::size_t j = 0; j < n; ++j) {
        seg.push_back(std::span(lex_cells[j]).subspan(b.lex[i][j],
                                                      pair.lex[j].size()));
      }
      bool violated = false;
      for (const auto& b0 : match_lex(rule, seg, Binding{})) {
        for (const auto& b1 : match_lexical_all(rule, rule.llc, lex_cells,
                                                b.lex[i], Direction::kLeft,
                                                b0)) {
          for (const auto& b2 :
               match_lexical_all(rule, rule.rlc, lex_cells, b.lex[i + 1],
                                 Direction::kRight, b1)) {
            for (const auto& b3 : match_surface_all(
                     rule, rule.lsc, surf_cells, b.surf[i], Direction::kLeft,
                     b2)) {
              for (const auto& b4 : match_surface_all(
                       rule, rule.rsc, surf_cells, b.surf[i + 1],
                       Direction::kRight, b3)) {
                if (!satisfies_where(rule, b4)) continue;
                if (!instantiates_surf(rule, pair.surf, b4)) violated = true;
              }
            }
          }
        }
      }
      if (violated) out.push_back({rule.id, i});
    }
  }
  return out;
}

std::vector<Violation> check_gated(const Grammar& g,
                                   const Partition& partition,
                                   const TapeConfiguration& tapes) {
  std::vector<Violation> out;
  const std::size_t n = tapes.tapes.size();
  const Boundaries b = boundaries(partition, n);
  const auto cells = plain_tapes(tapes);
  for (std::size_t i = 0; i < partition.pairs.size(); ++i) {
    const Rule* rule = g.find_rule(partition.pairs[i].rule);
    if (!rule || !rule->gated()) continue;
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::span<const CellRef>> seg;
      for (std::size_t t = 0; t < n; ++t) {
        seg.push_back(std::span(cells[t]).subspan(
            b.lex[j][t], partition.pairs[j].lex[t].size()));
      }
      bool applicable = false;
      for (const auto& b0 : match_lex(*rule, seg, Binding{})) {
        for (const auto& b1 : match_lexical_all(*rule, rule->llc, cells,
                                                b.lex[j], Direction::kLeft,
                                                b0)) {
          for (const auto& b2 : match_lexical_all(
                   *rule, rule->rlc, cells, b.lex[j + 1], Direction::kRight,
                   b1)) {
            if (satisfies_where(*rule, b2)) applicable = true;
          }
        }
      }
      if (applicable) {
        out.push_back({rule->id, i});
        break;
      }
    }
  }
  return out;
}

namespace {

class Search {
 public:
  Search(const Grammar& g, const TapeConfiguration& tapes,
         std::optional<std::span<const Symbol>> surface,
         const SearchOptions& options)
      : g_(g), tapes_(tapes), fixed_(surface), cells_(plain_tapes(tapes)) {
    for (std::size_t r = 0; r < g.rules.size(); ++r) {
      if (options.enabled.empty() || options.enabled.at(r)) {
        rules_.push_back(&g.rules[r]);
      }
    }
    for (const auto& t : g.tapes) prefix_.push_back(t.prefix);
    prefix_.resize(tapes.tapes.size(), false);
    if (fixed_) fixed_cells_ = plain_cells(*fixed_);
  }

  std::vector<Partition> run() {
    State s;
    s.pos.assign(tapes_.tapes.size(), 0);
    step(s);
    return {results_.begin(), results_.end()};
  }

 private:
  struct Pending {
    std::size_t pair;
    std::size_t at;
  };
  struct State {
    std::vector<std::size_t> pos;
    SymbolString surface;  // generated so far, or matched prefix
    std::vector<Pair> pairs;
    std::vector<Pending> pending;
    bool prev_empty_lex = false;
  };

  bool tapes_done(const State& s) const {
    for (std::size_t j = 0; j < s.pos.size(); ++j) {
      if (s.pos[j] != tapes_.tapes[j].size()) return false;
    }
    return true;
  }

  void step(const State& s) {
    if (tapes_done(s) && (!fixed_ || s.surface.size() == fixed_->size())) {
      finish(s);
    }
    for (const Rule* r : rules_) try_rule(s, *r);
  }

  void finish(const State& s) {
    if (!s.pending.empty()) return;
    Partition p{s.pairs};
    if (!check_obligatory(g_, p, tapes_).empty()) return;
    if (!check_gated(g_, p, tapes_).empty()) return;
    results_.insert(std::move(p));
  }

  void try_rule(const State& s, const Rule& rule) {
    const std::size_t n = s.pos.size();
    if (rule.lex.size() != n) return;
    Binding b;
    std::vector<std::size_t> next = s.pos;
    std::vector<SymbolString> lex(n);
    bool empty_lex = true;
    bool takes_prefix = false;
    bool takes_other = false;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = rule.lex[j];
      if (e.kind == Kind::kEpsilon) continue;
      if (e.kind == Kind::kAny) return;
      if (s.pos[j] >= cells_[j].size()) return;
      std::vector<Binding> out;
      match_cells(rule, std::span(&e, 1),
                  std::span(cells_[j]).subspan(s.pos[j], 1), b, out);
      if (out.empty()) return;
      b = std::move(out.front());
      lex[j].push_back(cells_[j][s.pos[j]].symbol);
      ++next[j];
      empty_lex = false;
      (prefix_[j] ? takes_prefix : takes_other) = true;
    }
    if (empty_lex && s.prev_empty_lex) return;
    if (takes_other && !takes_prefix) {
      for (std::size_t j = 0; j < n; ++j) {
        if (prefix_[j] && s.pos[j] != cells_[j].size()) return;
      }
    }
    auto llc = first(match_lexical_all(rule, rule.llc, cells_, s.pos,
                                       Direction::kLeft, b));
    if (!llc) return;
    auto rlc = first(match_lexical_all(rule, rule.rlc, cells_, next,
                                       Direction::kRight, *llc));
    if (!rlc) return;
    const auto surf_cells = current_surface(s);
    auto lsc = first(match_surface_all(rule, rule.lsc, surf_cells,
                                       s.surface.size(), Direction::kLeft,
                                       *rlc));
    if (!lsc) return;

    const auto pattern = non_epsilon(rule.surf);
    if (empty_lex && pattern.empty()) return;

    if (fixed_) {
      const std::size_t at = s.surface.size();
      if (at + pattern.size() > fixed_->size()) return;
      std::vector<Binding> out;
      match_cells(rule, pattern,
                  std::span(fixed_cells_).subspan(at, pattern.size()), *lsc,
                  out);
      if (out.empty()) return;
      auto rsc = first(match_surface_all(rule, rule.rsc, fixed_cells_,
                                         at + pattern.size(),
                                         Direction::kRight, out.front()));
      if (!rsc || !satisfies_where(rule, *rsc)) return;
      State t = s;
      t.pos = next;
      t.surface.insert(t.surface.end(), fixed_->begin() + at,
                       fixed_->begin() + at + pattern.size());
      t.pairs.push_back({lex, SymbolString(fixed_->begin() + at,
                                           fixed_->begin() + at + pattern.size()),
                         rule.id, *rsc});
      t.prev_empty_lex = empty_lex;
      step(t);
      return;
    }

    expand_surface(s, rule, pattern, 0, *lsc, {}, [&](const Binding& bf,
                                                     const SymbolString& surf) {
      if (!satisfies_where(rule, bf)) return;
      State t = s;
      t.pos = next;
      const std::size_t at = t.surface.size();
      t.surface.insert(t.surface.end(), surf.begin(), surf.end());
      t.pairs.push_back({lex, surf, rule.id, bf});
      t.prev_empty_lex = empty_lex;
      if (!rule.rsc.wildcard) {
        t.pending.push_back({t.pairs.size() - 1, at + surf.size()});
      }
      if (!resolve_pending(t)) return;
      step(t);
    });
  }

  template <typename F>
  void expand_surface(const State& s, const Rule& rule,
                      const std::vector<PatternElement>& pattern,
                      std::size_t k, const Binding& b, SymbolString acc,
                      F&& emit) {
    if (k == pattern.size()) {
      emit(b, acc);
      return;
    }
    const auto& e = pattern[k];
    if (e.kind == Kind::kLiteral) {
      acc.push_back(e.symbol);
      expand_surface(s, rule, pattern, k + 1, b, std::move(acc), emit);
      return;
    }
    if (e.kind != Kind::kVariable) return;
    if (auto v = b.get(e.variable)) {
      acc.push_back(*v);
      expand_surface(s, rule, pattern, k + 1, b, std::move(acc), emit);
      return;
    }
    const Variable& var = rule.variable(e.variable);
    for (Symbol sym : var.admitted.members()) {
      auto nb = bind(b, var, sym);
      if (!nb) continue;
      SymbolString next = acc;
      next.push_back(sym);
      expand_surface(s, rule, pattern, k + 1, *nb, std::move(next), emit);
    }
  }

  // Checks deferred right surface contexts that now have enough material.
  // A context can bind several ways only through unbound variables, which
  // no later check sees, so the first binding is kept.
  bool resolve_pending(State& t) const {
    std::vector<Pending> keep;
    const auto cells = plain_cells(t.surface);
    for (const auto& p : t.pending) {
      Pair& pair = t.pairs[p.pair];
      const Rule& rule = *g_.find_rule(pair.rule);
      const std::size_t need = non_epsilon(rule.rsc.elements).size();
      if (t.surface.size() < p.at + need) {
        keep.push_back(p);
        continue;
      }
      auto r = first(match_surface_all(rule, rule.rsc, cells, p.at,
                                       Direction::kRight, pair.binding));
      if (!r || !satisfies_where(rule, *r)) return false;
      pair.binding = std::move(*r);
    }
    t.pending = std::move(keep);
    return true;
  }

  std::vector<CellRef> current_surface(const State& s) const {
    return plain_cells(s.surface);
  }

  const Grammar& g_;
  const TapeConfiguration& tapes_;
  std::optional<std::span<const Symbol>> fixed_;
  std::vector<CellRef> fixed_cells_;
  std::vector<std::vector<CellRef>> cells_;
  std::vector<const Rule*> rules_;
  std::vector<bool> prefix_;
  std::set<Partition> results_;
};

}  // namespace

std::vector<Partition> find_partitions(const Grammar& g,
                                       const TapeConfiguration& tapes,
                                       std::span<const Symbol> surface,
                                       const SearchOptions& options) {
  return Search(g, tapes, surface, options).run();
}

std::vector<Partition> generate_partitions(const Grammar& g,
                                           const TapeConfiguration& tapes,
                                           const SearchOptions& options) {
  return Search(g, tapes, std::nullopt, options).run();
}

std::vector<TapeConfiguration> instantiate(const Grammar& g,
                                           const MorphemeSelection& selection) {
  const std::size_t n = g.tape_count();
  if (selection.entries.size() != n) {
    throw ConfigError("selection names " +
                      std::to_string(selection.entries.size()) +
                      " tapes, grammar has " + std::to_string(n));
  }
  const auto boundary = g.alphabet.find(kBoundaryToken);
  std::vector<TapeConfiguration> worlds(1);
  worlds[0].tapes.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& idx = selection.entries[j];
    if (!idx) continue;
    if (*idx >= g.lexicon.size()) throw ConfigError("no such lexicon entry");
    const LexicalEntry& e = g.lexicon[*idx];
    if (e.tape != static_cast<int>(j) + 1) {
      throw ConfigError("entry '" + e.form_text + "' belongs on tape " +
                        std::to_string(e.tape));
    }
    for (const auto& el : e.form) {
      if (el.kind == Kind::kLiteral) {
        for (auto& w : worlds) w.tapes[j].push_back({el.symbol, {}});
        continue;
      }
      if (el.kind != Kind::kVariable) continue;
      auto v = g.resolve_variable(el.variable);
      if (!v) throw ConfigError("undeclared variable " + el.variable);
      std::vector<TapeConfiguration> next;
      for (const auto& w : worlds) {
        for (Symbol s : v->admitted.members()) {
          auto& copy = next.emplace_back(w);
          copy.tapes[j].push_back({s, el.variable});
        }
      }
      worlds = std::move(next);
    }
    if (!e.form.empty() && boundary) {
      for (auto& w : worlds) w.tapes[j].push_back({*boundary, {}});
    }
  }
  return worlds;
}

MorphemeSelection complete_selection(
    const Grammar& g, std::vector<std::optional<std::size_t>> chosen,
    const FeatureStructure& goal) {
  const std::size_t n = g.tape_count();
  chosen.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (chosen[j]) continue;
    std::vector<std::size_t> fits;
    std::optional<std::size_t> null_entry;
    for (std::size_t i = 0; i < g.lexicon.size(); ++i) {
      const LexicalEntry& e = g.lexicon[i];
      if (e.tape != static_cast<int>(j) + 1) continue;
      if (!unify(g.features, goal, e.fs)) continue;
      fits.push_back(i);
      if (e.form.empty()) null_entry = i;
    }
    if (fits.size() == 1) {
      chosen[j] = fits.front();
    } else if (null_entry) {
      chosen[j] = null_entry;
    } else if (!fits.empty()) {
      throw ConfigError("several morphemes fit tape " + g.tapes[j].name +
                        "; name one");
    }
  }
  return {std::move(chosen)};
}

namespace {

// Unification of goal and entry structures; nullopt on failure.
std::optional<FeatureStructure> base_structure(
    const Grammar& g, const std::vector<const LexicalEntry*>& entries,
    const FeatureStructure& goal) {
  std::optional<FeatureStructure> w = unify(g.features, goal, {});
  for (const auto* e : entries) {
    if (!w) return std::nullopt;
    w = unify(g.features, *w, e->fs);
  }
  return w;
}

SearchOptions options_for(const Grammar& g, const FeatureStructure& w0) {
  SearchOptions o;
  for (const Rule& r : g.rules) {
    o.enabled.push_back(!r.fs || unify(g.features, w0, *r.fs).has_value());
  }
  return o;
}

std::optional<Analysis> make_analysis(
    const Grammar& g, const Partition& p,
    const std::vector<const LexicalEntry*>& entries,
    const FeatureStructure& w0) {
  FeatureStructure w = w0;
  std::set<std::string> fired;
  for (const auto& pair : p.pairs) {
    fired.insert(pair.rule);
    const Rule* r = g.find_rule(pair.rule);
    if (!r || !r->fs) continue;
    auto next = unify(g.features, w, *r->fs);
    if (!next) return std::nullopt;
    w = std::move(*next);
  }
  for (const Rule& r : g.rules) {
    if (r.fs && !fired.contains(r.id) && subsumed_by(g.features, w, *r.fs)) {
      return std::nullopt;
    }
  }
  Analysis a;
  a.surface = p.surface();
  a.trace = p.trace();
  a.word_fs = std::move(w);
  for (const auto* e : entries) {
    a.morphemes.push_back({e->tape, e->form_text, e->category});
  }
  return a;
}

std::vector<Analysis> run_generate(const Grammar& g,
                                   const std::vector<TapeConfiguration>& worlds,
                                   const std::vector<const LexicalEntry*>& entries,
                                   const FeatureStructure& goal) {
  std::vector<Analysis> out;
  auto w0 = base_structure(g, entries, goal);
  if (!w0) return out;
  const auto options = options_for(g, *w0);
  for (const auto& tapes : worlds) {
    for (const auto& p : generate_partitions(g, tapes, options)) {
      if (auto a = make_analysis(g, p, entries, *w0)) out.push_back(*a);
    }
  }
  sort_canonical(g, out);
  return out;
}

std::vector<const LexicalEntry*> selected(const Grammar& g,
                                          const MorphemeSelection& s) {
  std::vector<const LexicalEntry*> out;
  for (const auto& idx : s.entries) {
    if (idx) out.push_back(&g.lexicon.at(*idx));
  }
  return out;
}

}  // namespace

std::vector<Analysis> generate(const Grammar& g,
                               const MorphemeSelection& selection,
                               const FeatureStructure& goal) {
  auto worlds = instantiate(g, selection);
  return run_generate(g, worlds, selected(g, selection), goal);
}

std::vector<Analysis> generate(const Grammar& g,
                               const TapeConfiguration& tapes,
                               const FeatureStructure& goal) {
  if (tapes.tapes.size() != g.tape_count()) {
    throw ConfigError("expected " + std::to_string(g.tape_count()) +
                      " tapes, got " + std::to_string(tapes.tapes.size()));
  }
  return run_generate(g, {tapes}, {}, goal);
}

std::vector<Analysis> recognize(const Grammar& g,
                                std::span<const Symbol> surface) {
  const std::size_t n = g.tape_count();
  std::vector<std::vector<std::optional<std::size_t>>> choices(n);
  for (std::size_t i = 0; i < g.lexicon.size(); ++i) {
    const int t = g.lexicon[i].tape;
    if (t >= 1 && static_cast<std::size_t>(t) <= n) choices[t - 1].push_back(i);
  }
  for (auto& c : choices) {
    if (c.empty()) c.push_back(std::nullopt);
  }

  std::vector<MorphemeSelection> selections;
  selections.push_back({std::vector<std::optional<std::size_t>>(n)});
  MorphemeSelection current{std::vector<std::optional<std::size_t>>(n)};
  auto enumerate = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      selections.push_back(current);
      return;
    }
    for (const auto& c : choices[j]) {
      current.entries[j] = c;
      self(self, j + 1);
    }
  };
  enumerate(enumerate, 0);

  std::vector<Analysis> out;
  for (const auto& sel : selections) {
    const auto entries = selected(g, sel);
    auto w0 = base_structure(g, entries, {});
    if (!w0) continue;
    const auto options = options_for(g, *w0);
    for (const auto& tapes : instantiate(g, sel)) {
      for (const auto& p : find_partitions(g, tapes, surface, options)) {
        if (auto a = make_analysis(g, p, entries, *w0)) out.push_back(*a);
      }
    }
  }
  sort_canonical(g, out);
  return out;
}

void sort_canonical(const Grammar& g, std::vector<Analysis>& analyses) {
  auto key = [&](const Analysis& a) {
    return std::make_tuple(g.alphabet.spell(a.surface), a.trace, a.morphemes,
                           format_features(g.features, a.word_fs));
  };
  std::sort(analyses.begin(), analyses.end(),
            [&](const Analysis& a, const Analysis& b) { return key(a) < key(b); });
  analyses.erase(std::unique(analyses.begin(), analyses.end()),
                 analyses.end());
}

}  // namespace twolevel
