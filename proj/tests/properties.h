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

// Randomised property checks shared by the unit tests and the acceptance
// runner. Each returns a list of failure descriptions; empty means pass.

#ifndef TWOLEVEL_TESTS_PROPERTIES_H_
#define TWOLEVEL_TESTS_PROPERTIES_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "test_util.h"
#include "twolevel/brute_force.h"
#include "twolevel/corpus.h"
#include "twolevel/engine.h"
#include "twolevel/prosody.h"

namespace twolevel::testing {

using Failures = std::vector<std::string>;

inline FeatureStructure random_fs(const FeatureSchema& schema,
                                  std::mt19937& rng) {
  FeatureStructure fs;
  for (const auto& attr : schema.attributes()) {
    if (rng() % 2) continue;
    const ValueMask full = schema.full(attr);
    ValueMask m = 0;
    while (m == 0) m = static_cast<ValueMask>(rng()) & full;
    fs.constrain(schema, attr, m);
  }
  return fs;
}

// Commutativity, associativity, idempotence and the full-structure identity
// of unification.
inline Failures check_fs_algebra(const FeatureSchema& schema, unsigned seed,
                                 int count) {
  Failures f;
  std::mt19937 rng(seed);
  const FeatureStructure top;
  for (int i = 0; i < count; ++i) {
    auto a = random_fs(schema, rng);
    auto b = random_fs(schema, rng);
    auto c = random_fs(schema, rng);
    const std::string tag = " at sample " + std::to_string(i);
    if (unify(schema, a, b) != unify(schema, b, a)) {
      f.push_back("commutativity" + tag);
    }
    auto ab = unify(schema, a, b);
    auto bc = unify(schema, b, c);
    auto left = ab ? unify(schema, *ab, c) : std::nullopt;
    auto right = bc ? unify(schema, a, *bc) : std::nullopt;
    if (left != right) f.push_back("associativity" + tag);
    if (unify(schema, a, a) != a) f.push_back("idempotence" + tag);
    if (unify(schema, a, top) != a) f.push_back("identity" + tag);
  }
  return f;
}

// A random string of well-formed syllables. A final consonant may close
// only a light syllable; CVVC and CVCC are not legal.
inline SymbolString random_cv_string(const Phonology& ph, std::mt19937& rng) {
  auto cons = ph.consonants.members();
  auto vows = ph.vowels.members();
  auto pick = [&](const std::vector<Symbol>& v) { return v[rng() % v.size()]; };
  SymbolString s;
  const int syllables = 1 + static_cast<int>(rng() % 4);
  bool light = true;
  for (int i = 0; i < syllables; ++i) {
    s.push_back(pick(cons));
    s.push_back(pick(vows));
    light = false;
    switch (rng() % 3) {
      case 0: s.push_back(pick(vows)); break;
      case 1:
        if (i + 1 < syllables) {
          s.push_back(pick(cons));
        } else {
          light = true;
        }
        break;
      default: light = true; break;
    }
  }
  if (light && rng() % 2) s.push_back(pick(cons));
  return s;
}

// kernel+residue reproduces the base, at both edges, for `count` bases on
// which Φ succeeds.
inline Failures check_phi_identity(const Phonology& ph, const Grammar& g,
                                   unsigned seed, int count) {
  Failures f;
  std::mt19937 rng(seed);
  int done = 0, attempts = 0;
  while (done < count && attempts < count * 50) {
    ++attempts;
    SymbolString s = random_cv_string(ph, rng);
    const bool extra = rng() % 2;
    SyllabifiedBase base;
    try {
      base = syllabify(ph, s, extra);
    } catch (const ProsodyError& e) {
      f.push_back("syllabify failed on " + g.alphabet.spell(s) + ": " +
                  e.what());
      continue;
    }
    if (base.flatten() != s) {
      f.push_back("flatten differs for " + g.alphabet.spell(s));
    }
    const Constituent c =
        rng() % 2 ? Constituent::kLightSyllable : Constituent::kConsonant;
    const Edge e = rng() % 2 ? Edge::kLeft : Edge::kRight;
    Factoring fac;
    try {
      fac = phi(ph, base, c, e);
    } catch (const ProsodyError&) {
      continue;  // constituent absent at that edge
    }
    ++done;
    SymbolString joined = e == Edge::kLeft ? fac.kernel : fac.residue;
    const auto& tail = e == Edge::kLeft ? fac.residue : fac.kernel;
    joined.insert(joined.end(), tail.begin(), tail.end());
    if (joined != s || fac.reassemble() != s) {
      f.push_back("factoring identity fails for " + g.alphabet.spell(s));
    }
  }
  if (done < count) f.push_back("too few factorable bases generated");
  return f;
}

inline Grammar permuted(const Grammar& g, std::mt19937& rng) {
  Grammar p = g;
  std::shuffle(p.rules.begin(), p.rules.end(), rng);
  return p;
}

// Every generation and recognition of the corpus gives the same result set
// under `permutations` random orderings of the rules.
inline Failures check_rule_order(const Grammar& g,
                                 const std::vector<GoldenCase>& corpus,
                                 unsigned seed, int permutations) {
  Failures f;
  std::mt19937 rng(seed);
  auto results = [&](const Grammar& gr, const GoldenCase& c) {
    std::vector<Analysis> as;
    if (c.direction == CaseDirection::kGenerate) {
      GenerateRequest r;
      r.measure = c.measure;
      for (std::size_t j = 0; j < c.tapes.size(); ++j) {
        r.morphemes.emplace_back(std::to_string(j + 1), c.tapes[j]);
      }
      as = generate(gr, r);
    } else {
      as = analyze(gr, c.expected);
    }
    return as;
  };
  std::vector<std::vector<Analysis>> base;
  for (const auto& c : corpus) base.push_back(results(g, c));
  for (int p = 0; p < permutations; ++p) {
    Grammar shuffled = permuted(g, rng);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (results(shuffled, corpus[i]) != base[i]) {
        f.push_back("permutation " + std::to_string(p) + " changes line " +
                    std::to_string(corpus[i].line));
      }
    }
  }
  return f;
}

inline std::string describe_tapes(const Grammar& g,
                                  const TapeConfiguration& t) {
  std::string out;
  for (const auto& tape : t.tapes) {
    if (!out.empty()) out += " | ";
    SymbolString s;
    for (const auto& c : tape) s.push_back(c.symbol);
    out += g.alphabet.spell_spaced(s);
  }
  return out;
}

// Engine and oracle agree on generation from `tapes` and on recognition of
// every surface in `surfaces` plus those generated.
inline void compare_with_oracle(const Grammar& g, const TapeConfiguration& t,
                                std::vector<SymbolString> surfaces,
                                Failures& f) {
  auto gen = generate_partitions(g, t);
  if (gen != brute_force_generate(g, t)) {
    f.push_back("generation differs on " + describe_tapes(g, t));
  }
  for (const auto& p : gen) surfaces.push_back(p.surface());
  std::sort(surfaces.begin(), surfaces.end());
  surfaces.erase(std::unique(surfaces.begin(), surfaces.end()),
                 surfaces.end());
  for (const auto& s : surfaces) {
    if (find_partitions(g, t, s) != brute_force_partitions(g, t, s)) {
      f.push_back("recognition of '" + g.alphabet.spell(s) +
                  "' differs on " + describe_tapes(g, t));
    }
  }
}

// All corpus inputs: every world of every selection named in the corpus,
// against its expected surface and the rejected surfaces.
inline Failures check_oracle_corpus(const Grammar& g,
                                    const std::vector<GoldenCase>& corpus) {
  Failures f;
  std::vector<SymbolString> rejected;
  for (const auto& c : corpus) {
    if (c.direction == CaseDirection::kReject) {
      rejected.push_back(parse_surface(g, c.expected));
    }
  }
  for (const auto& c : corpus) {
    if (c.direction == CaseDirection::kReject) continue;
    MorphemeSelection sel;
    for (std::size_t j = 0; j < c.tapes.size(); ++j) {
      sel.entries.push_back(entry(g, static_cast<int>(j) + 1, c.tapes[j]));
    }
    auto surfaces = rejected;
    surfaces.push_back(parse_surface(g, c.expected));
    for (const auto& t : instantiate(g, sel)) {
      compare_with_oracle(g, t, surfaces, f);
    }
  }
  return f;
}

// `count` random inputs: half are contiguous pieces (up to 8 symbols) of
// lexicon tapes, half are random symbol tuples; each also tries one random
// surface string.
inline Failures check_oracle_random(const Grammar& g, unsigned seed,
                                    int count) {
  Failures f;
  std::mt19937 rng(seed);
  const std::size_t n = g.tape_count();
  auto all = g.alphabet.all().members();
  auto random_string = [&](std::size_t max_len) {
    SymbolString s;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) s.push_back(all[rng() % all.size()]);
    return s;
  };
  for (int i = 0; i < count; ++i) {
    TapeConfiguration t;
    t.tapes.resize(n);
    if (i % 2 == 0) {
      MorphemeSelection sel;
      sel.entries.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> on_tape;
        for (std::size_t e = 0; e < g.lexicon.size(); ++e) {
          if (g.lexicon[e].tape == static_cast<int>(j) + 1) on_tape.push_back(e);
        }
        if (!on_tape.empty() && rng() % 4 != 0) {
          sel.entries[j] = on_tape[rng() % on_tape.size()];
        }
      }
      auto worlds = instantiate(g, sel);
      const auto& w = worlds[rng() % worlds.size()];
      for (std::size_t j = 0; j < n; ++j) {
        const auto& tape = w.tapes[j];
        const bool whole = rng() % 2 == 0;
        std::size_t from = whole || tape.empty() ? 0 : rng() % tape.size();
        std::size_t len = whole ? tape.size() : rng() % (tape.size() - from + 1);
        len = std::min<std::size_t>(len, 8);
        t.tapes[j].assign(tape.begin() + from, tape.begin() + from + len);
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        for (Symbol s : random_string(3)) t.tapes[j].push_back({s, {}});
      }
    }
    compare_with_oracle(g, t, {random_string(8)}, f);
  }
  return f;
}

}  // namespace twolevel::testing

#endif  // TWOLEVEL_TESTS_PROPERTIES_H_
