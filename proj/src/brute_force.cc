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

#include "twolevel/brute_force.h"

#include <algorithm>
#include <map>
#include <set>

namespace twolevel {

std::size_t default_max_segment(const Grammar& g) {
  std::size_t m = 1;
  for (const Rule& r : g.rules) {
    std::size_t surf = 0;
    for (const auto& e : r.surf) {
      if (e.kind != PatternElement::Kind::kEpsilon) ++surf;
    }
    m = std::max(m, surf);
  }
  return m;
}

namespace {

using Kind = PatternElement::Kind;
using Slot = std::optional<Symbol>;  // nullopt matches anything

constexpr std::size_t kMaxGroundInstances = 1'000'000;

// A rule with every variable replaced by a symbol.
struct Ground {
  const Rule* rule = nullptr;
  std::size_t rule_index = 0;
  Binding binding;
  std::vector<SymbolString> lex;
  SymbolString surf;
  bool llc_any = true, rlc_any = true, lsc_any = true, rsc_any = true;
  std::vector<std::vector<Slot>> llc, rlc;  // per tape
  std::vector<Slot> lsc, rsc;
  const std::set<std::string>* open_vars = nullptr;  // only in Surf
};

Slot ground_element(const PatternElement& e, const Binding& b) {
  if (e.kind == Kind::kLiteral) return e.symbol;
  if (e.kind == Kind::kVariable) return b.get(e.variable);
  return std::nullopt;
}

std::vector<Slot> ground_sequence(const std::vector<PatternElement>& p,
                                  const Binding& b) {
  std::vector<Slot> out;
  for (const auto& e : p) {
    if (e.kind != Kind::kEpsilon) out.push_back(ground_element(e, b));
  }
  return out;
}

std::vector<std::vector<Slot>> ground_tuples(const LexicalContext& c,
                                             std::size_t n, const Binding& b) {
  std::vector<std::vector<Slot>> out(n);
  for (const auto& t : c.tuples) {
    for (std::size_t j = 0; j < n && j < t.size(); ++j) {
      if (t[j].kind != Kind::kEpsilon) out[j].push_back(ground_element(t[j], b));
    }
  }
  return out;
}

void collect_vars(const std::vector<PatternElement>& p,
                  std::set<std::string>& out) {
  for (const auto& e : p) {
    if (e.kind == Kind::kVariable) out.insert(e.variable);
  }
}

std::vector<Ground> instantiate_rule(const Rule& r, std::size_t index,
                                     std::size_t n,
                                     std::set<std::string>& open) {
  std::vector<std::pair<const Variable*, std::vector<Symbol>>> vars;
  std::size_t product = 1;
  for (const auto& [name, v] : r.variables) {
    vars.push_back({&v, v.admitted.members()});
    product *= std::max<std::size_t>(1, vars.back().second.size());
    if (product > kMaxGroundInstances) {
      throw ConfigError("bound exceeded: rule " + r.id +
                        " has too many ground instances");
    }
  }
  std::set<std::string> outside_surf;
  for (const auto& t : r.llc.tuples) collect_vars(t, outside_surf);
  for (const auto& t : r.rlc.tuples) collect_vars(t, outside_surf);
  collect_vars(r.lex, outside_surf);
  collect_vars(r.lsc.elements, outside_surf);
  collect_vars(r.rsc.elements, outside_surf);
  for (const auto& e : r.surf) {
    if (e.kind == Kind::kVariable && !outside_surf.contains(e.variable)) {
      open.insert(e.variable);
    }
  }

  std::vector<Ground> out;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Binding b;
    bool ok = true;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (vars[k].second.empty()) {
        ok = false;
        break;
      }
      b.try_bind(*vars[k].first, vars[k].second[idx[k]]);
    }
    for (const auto& ineq : r.inequalities) {
      if (b.get(ineq.variable) == ineq.symbol) ok = false;
    }
    if (ok) {
      Ground g;
      g.rule = &r;
      g.rule_index = index;
      g.binding = b;
      g.lex.resize(n);
      for (std::size_t j = 0; j < n && j < r.lex.size(); ++j) {
        if (auto s = ground_element(r.lex[j], b);
            s && r.lex[j].kind != Kind::kEpsilon) {
          g.lex[j].push_back(*s);
        }
      }
      for (const auto& s : ground_sequence(r.surf, b)) g.surf.push_back(*s);
      g.llc_any = r.llc.wildcard;
      g.rlc_any = r.rlc.wildcard;
      g.lsc_any = r.lsc.wildcard;
      g.rsc_any = r.rsc.wildcard;
      g.llc = ground_tuples(r.llc, n, b);
      g.rlc = ground_tuples(r.rlc, n, b);
      g.lsc = ground_sequence(r.lsc.elements, b);
      g.rsc = ground_sequence(r.rsc.elements, b);
      g.open_vars = &open;
      out.push_back(std::move(g));
    }
    std::size_t k = 0;
    while (k < vars.size()) {
      if (++idx[k] < vars[k].second.size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == vars.size()) break;
  }
  return out;
}

// A symbol plus, for variable-derived cells, the range it stands for.
struct Cell {
  Symbol symbol;
  const Variable* origin = nullptr;
};

bool slot_matches(const Slot& slot, const Cell& c, bool loose) {
  if (!slot) return true;
  if (loose && c.origin) return c.origin->admits(*slot);
  return *slot == c.symbol;
}

bool window_matches(const std::vector<Slot>& pattern,
                    const std::vector<Cell>& cells, std::size_t pos, bool left,
                    bool loose) {
  const std::size_t k = pattern.size();
  std::size_t start;
  if (left) {
    if (pos < k) return false;
    start = pos - k;
  } else {
    if (pos + k > cells.size()) return false;
    start = pos;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!slot_matches(pattern[i], cells[start + i], loose)) return false;
  }
  return true;
}

bool lexical_matches(bool any, const std::vector<std::vector<Slot>>& ctx,
                     const std::vector<std::vector<Cell>>& tapes,
                     const std::vector<std::size_t>& pos, bool left,
                     bool loose) {
  if (any) return true;
  for (std::size_t j = 0; j < tapes.size(); ++j) {
    if (!window_matches(ctx[j], tapes[j], pos[j], left, loose)) return false;
  }
  return true;
}

struct Chosen {
  std::size_t ground;
  std::vector<std::size_t> start;  // lexical positions before the pair
  std::size_t surf_start;
};

class Enumerator {
 public:
  Enumerator(const Grammar& g, const TapeConfiguration& tapes,
             std::optional<std::span<const Symbol>> surface,
             const BruteForceOptions& options)
      : g_(g), surface_(surface) {
    n_ = g.tape_count();
    if (tapes.tapes.size() != n_) {
      throw ConfigError("tape count does not match the grammar");
    }
    max_seg_ = options.max_seg ? options.max_seg : default_max_segment(g);
    for (const auto& t : tapes.tapes) {
      if (t.size() > options.max_length) throw ConfigError("bound exceeded");
    }
    if (surface && surface->size() > options.max_length) {
      throw ConfigError("bound exceeded");
    }
    for (const auto& t : tapes.tapes) {
      auto& cells = tapes_.emplace_back();
      for (const auto& c : t) cells.push_back({c.symbol, origin(c.variable)});
    }
    if (surface) {
      for (Symbol s : *surface) fixed_.push_back({s, nullptr});
    }
    open_vars_.resize(g.rules.size());
    for (std::size_t r = 0; r < g.rules.size(); ++r) {
      for (auto& gr : instantiate_rule(g.rules[r], r, n_, open_vars_[r])) {
        grounds_.push_back(std::move(gr));
      }
    }
    for (std::size_t i = 0; i < grounds_.size(); ++i) {
      const auto& gr = grounds_[i];
      bool enabled = options.enabled.empty() || options.enabled[gr.rule_index];
      if (enabled) index_[gr.lex].push_back(i);
      by_rule_[gr.rule_index].push_back(i);
    }
    for (const auto& t : g.tapes) prefix_.push_back(t.prefix);
  }

  std::vector<Partition> run() {
    std::vector<std::size_t> pos(n_, 0);
    std::vector<Cell> produced;
    std::vector<Chosen> chosen;
    dfs(pos, produced, chosen, false);
    return {results_.begin(), results_.end()};
  }

 private:
  const Variable* origin(const std::string& name) {
    if (name.empty()) return nullptr;
    auto it = origins_.find(name);
    if (it == origins_.end()) {
      auto v = g_.resolve_variable(name);
      if (!v) return nullptr;
      it = origins_.emplace(name, std::move(*v)).first;
    }
    return &it->second;
  }

  void dfs(std::vector<std::size_t>& pos, std::vector<Cell>& produced,
           std::vector<Chosen>& chosen, bool prev_empty) {
    bool done = true;
    for (std::size_t j = 0; j < n_; ++j) done &= pos[j] == tapes_[j].size();
    if (done && (!surface_ || produced.size() == fixed_.size())) {
      accept(produced, chosen);
    }
    // Every combination of per-tape segment lengths.
    std::vector<std::size_t> len(n_, 0);
    while (true) {
      std::vector<SymbolString> key(n_);
      bool fits = true;
      for (std::size_t j = 0; j < n_ && fits; ++j) {
        if (pos[j] + len[j] > tapes_[j].size()) {
          fits = false;
          break;
        }
        for (std::size_t k = 0; k < len[j]; ++k) {
          key[j].push_back(tapes_[j][pos[j] + k].symbol);
        }
      }
      if (fits) {
        if (auto it = index_.find(key); it != index_.end()) {
          for (std::size_t gi : it->second) {
            extend(gi, len, pos, produced, chosen, prev_empty);
          }
        }
      }
      std::size_t j = 0;
      while (j < n_) {
        if (++len[j] <= max_seg_) break;
        len[j] = 0;
        ++j;
      }
      if (j == n_) break;
    }
  }

  void extend(std::size_t gi, const std::vector<std::size_t>& len,
              std::vector<std::size_t>& pos, std::vector<Cell>& produced,
              std::vector<Chosen>& chosen, bool prev_empty) {
    const Ground& gr = grounds_[gi];
    const bool empty_lex =
        std::all_of(len.begin(), len.end(), [](std::size_t l) { return l == 0; });
    if (empty_lex && (prev_empty || gr.surf.empty())) return;
    if (gr.surf.size() > max_seg_) return;
    bool takes_prefix = false, takes_other = false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (len[j]) (prefix_[j] ? takes_prefix : takes_other) = true;
    }
    if (takes_other && !takes_prefix) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (prefix_[j] && pos[j] != tapes_[j].size()) return;
      }
    }
    std::vector<std::size_t> next = pos;
    for (std::size_t j = 0; j < n_; ++j) next[j] += len[j];
    if (!lexical_matches(gr.llc_any, gr.llc, tapes_, pos, true, false)) return;
    if (!lexical_matches(gr.rlc_any, gr.rlc, tapes_, next, false, false)) {
      return;
    }
    const std::size_t at = produced.size();
    if (surface_) {
      if (at + gr.surf.size() > fixed_.size()) return;
      for (std::size_t k = 0; k < gr.surf.size(); ++k) {
        if (fixed_[at + k].symbol != gr.surf[k]) return;
      }
      if (!gr.lsc_any && !window_matches(gr.lsc, fixed_, at, true, false)) {
        return;
      }
      if (!gr.rsc_any &&
          !window_matches(gr.rsc, fixed_, at + gr.surf.size(), false, false)) {
        return;
      }
    } else if (!gr.lsc_any &&
               !window_matches(gr.lsc, produced, at, true, false)) {
      return;
    }
    for (Symbol s : gr.surf) produced.push_back({s, nullptr});
    chosen.push_back({gi, pos, at});
    if (surface_ || pending_ok(produced, chosen, false)) {
      std::swap(pos, next);
      dfs(pos, produced, chosen, empty_lex);
      std::swap(pos, next);
    }
    chosen.pop_back();
    produced.resize(at);
  }

  // Right surface contexts in generation, checked once enough surface
  // exists (or, when `final`, required to be checkable).
  bool pending_ok(const std::vector<Cell>& produced,
                  const std::vector<Chosen>& chosen, bool final) const {
    for (const auto& c : chosen) {
      const Ground& gr = grounds_[c.ground];
      if (gr.rsc_any) continue;
      const std::size_t end = c.surf_start + gr.surf.size();
      if (end + gr.rsc.size() > produced.size()) {
        if (final) return false;
        continue;
      }
      if (!window_matches(gr.rsc, produced, end, false, false)) return false;
    }
    return true;
  }

  void accept(const std::vector<Cell>& produced,
              const std::vector<Chosen>& chosen) {
    if (!surface_ && !pending_ok(produced, chosen, true)) return;
    std::vector<std::size_t> end(n_);
    for (std::size_t j = 0; j < n_; ++j) end[j] = tapes_[j].size();

    // Surface cells copying a variable-derived tape cell.
    std::vector<Cell> surf;
    for (const auto& c : chosen) {
      const Ground& gr = grounds_[c.ground];
      const Rule& r = *gr.rule;
      for (std::size_t k = 0; k < gr.surf.size(); ++k) {
        Cell cell{gr.surf[k], nullptr};
        const auto& se = r.surf[k];
        if (se.kind == Kind::kVariable) {
          for (std::size_t j = 0; j < n_; ++j) {
            if (r.lex[j].kind == Kind::kVariable &&
                r.lex[j].variable == se.variable) {
              cell.origin = tapes_[j][c.start[j]].origin;
            }
          }
        }
        surf.push_back(cell);
      }
    }

    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const auto& next_pos = i + 1 < chosen.size() ? chosen[i + 1].start : end;
      const std::size_t surf_end =
          chosen[i].surf_start + grounds_[chosen[i].ground].surf.size();
      if (violates_obligation(chosen[i], next_pos, surf_end, surf)) return;
      if (misplaced_gated(chosen, i, end)) return;
    }

    Partition p;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const Ground& gr = grounds_[chosen[i].ground];
      Pair pair;
      pair.lex = gr.lex;
      pair.surf = gr.surf;
      pair.rule = gr.rule->id;
      pair.binding = gr.binding;
      p.pairs.push_back(std::move(pair));
    }
    results_.insert(std::move(p));
  }

  bool violates_obligation(const Chosen& c,
                           const std::vector<std::size_t>& next_pos,
                           std::size_t surf_end,
                           const std::vector<Cell>& surf) const {
    const Ground& self = grounds_[c.ground];
    for (std::size_t r = 0; r < g_.rules.size(); ++r) {
      const Rule& rule = g_.rules[r];
      if (!rule.obligatory()) continue;
      if (self.rule->gated() && !rule.gated()) continue;
      auto it = by_rule_.find(r);
      if (it == by_rule_.end()) continue;
      std::set<Binding> triggered, satisfied;
      for (std::size_t gi : it->second) {
        const Ground& gr = grounds_[gi];
        bool lex_ok = true;
        for (std::size_t j = 0; j < n_ && lex_ok; ++j) {
          const std::size_t seg = next_pos[j] - c.start[j];
          if (seg != gr.lex[j].size()) lex_ok = false;
          else if (seg == 1) {
            lex_ok = slot_matches(gr.lex[j][0], tapes_[j][c.start[j]], true);
          }
        }
        if (!lex_ok) continue;
        if (!lexical_matches(gr.llc_any, gr.llc, tapes_, c.start, true, true) ||
            !lexical_matches(gr.rlc_any, gr.rlc, tapes_, next_pos, false,
                             true)) {
          continue;
        }
        if (!gr.lsc_any &&
            !window_matches(gr.lsc, surf, c.surf_start, true, true)) {
          continue;
        }
        if (!gr.rsc_any && !window_matches(gr.rsc, surf, surf_end, false, true)) {
          continue;
        }
        Binding key;
        for (const auto& [name, sym] : gr.binding) {
          if (!gr.open_vars->contains(name)) {
            key.try_bind(gr.rule->variable(name), sym);
          }
        }
        triggered.insert(key);
        if (gr.surf == self.surf) satisfied.insert(key);
      }
      for (const auto& k : triggered) {
        if (!satisfied.contains(k)) return true;
      }
    }
    return false;
  }

  bool misplaced_gated(const std::vector<Chosen>& chosen, std::size_t i,
                       const std::vector<std::size_t>& end) const {
    const Ground& self = grounds_[chosen[i].ground];
    if (!self.rule->gated()) return false;
    auto it = by_rule_.find(self.rule_index);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& start = chosen[j].start;
      const auto& stop = j + 1 < chosen.size() ? chosen[j + 1].start : end;
      std::vector<SymbolString> seg(n_);
      for (std::size_t t = 0; t < n_; ++t) {
        for (std::size_t k = start[t]; k < stop[t]; ++k) {
          seg[t].push_back(tapes_[t][k].symbol);
        }
      }
      for (std::size_t gi : it->second) {
        const Ground& gr = grounds_[gi];
        if (gr.lex != seg) continue;
        if (lexical_matches(gr.llc_any, gr.llc, tapes_, start, true, false) &&
            lexical_matches(gr.rlc_any, gr.rlc, tapes_, stop, false, false)) {
          return true;
        }
      }
    }
    return false;
  }

  const Grammar& g_;
  std::optional<std::span<const Symbol>> surface_;
  std::size_t n_ = 0;
  std::size_t max_seg_ = 1;
  std::vector<std::vector<Cell>> tapes_;
  std::vector<Cell> fixed_;
  std::vector<std::set<std::string>> open_vars_;
  std::vector<Ground> grounds_;
  std::map<std::vector<SymbolString>, std::vector<std::size_t>> index_;
  std::map<std::size_t, std::vector<std::size_t>> by_rule_;
  std::map<std::string, Variable> origins_;
  std::vector<bool> prefix_;
  std::set<Partition> results_;
};

}  // namespace

std::vector<Partition> brute_force_partitions(
    const Grammar& g, const TapeConfiguration& tapes,
    std::span<const Symbol> surface, const BruteForceOptions& options) {
  return Enumerator(g, tapes, surface, options).run();
}

std::vector<Partition> brute_force_generate(const Grammar& g,
                                            const TapeConfiguration& tapes,
                                            const BruteForceOptions& options) {
  return Enumerator(g, tapes, std::nullopt, options).run();
}

}  // namespace twolevel
