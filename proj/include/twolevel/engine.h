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

// The two-level interpreter.
//
// A lexical tape tuple maps to a surface string when both can be cut into a
// sequence of pairs such that every pair is licensed by some rule and no
// pair violates an obligatory rule. Each pair consumes at most one symbol
// per tape. On top of that the search enforces:
//
//  * no pair is empty on both levels, and no two adjacent pairs are both
//    empty on the lexical side;
//  * material on a tape declared `prefix` is exhausted before any pair that
//    consumes only from the other tapes;
//  * a rule that carries a feature structure applies at most once, at the
//    leftmost pair whose lexical side it matches in its lexical context;
//  * a pair licensed by such a rule is exempt from the obligations of rules
//    that carry none;
//  * in obligation checks, a symbol instantiated from a variable in a
//    lexical form (the V of `stV`) matches any value that variable admits.
//
// All functions are pure; a Grammar may be shared across threads.

#ifndef TWOLEVEL_ENGINE_H_
#define TWOLEVEL_ENGINE_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twolevel/features.h"
#include "twolevel/grammar.h"
#include "twolevel/symbols.h"

namespace twolevel {

// Token appended to every non-empty morpheme on its tape.
inline constexpr std::string_view kBoundaryToken = "+";

struct TapeCell {
  Symbol symbol;
  // Name of the lexical-form variable this cell instantiates, if any.
  std::string variable;

  friend auto operator<=>(const TapeCell&, const TapeCell&) = default;
};

struct TapeConfiguration {
  std::vector<std::vector<TapeCell>> tapes;

  static TapeConfiguration from_symbols(const std::vector<SymbolString>& t);
  std::vector<SymbolString> symbols() const;

  friend bool operator==(const TapeConfiguration&,
                         const TapeConfiguration&) = default;
};

struct Pair {
  std::vector<SymbolString> lex;  // one (possibly empty) segment per tape
  SymbolString surf;
  std::string rule;
  Binding binding;

  bool lexically_empty() const;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

struct Partition {
  std::vector<Pair> pairs;

  std::vector<std::string> trace() const;
  SymbolString surface() const;
  std::vector<SymbolString> lexical() const;  // per-tape concatenation

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct Morpheme {
  int tape = 0;
  std::string form;
  std::string category;

  friend auto operator<=>(const Morpheme&, const Morpheme&) = default;
};

struct Analysis {
  SymbolString surface;
  std::vector<Morpheme> morphemes;
  FeatureStructure word_fs;
  std::vector<std::string> trace;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

// One lexicon entry index per tape; nullopt leaves the tape empty.
struct MorphemeSelection {
  std::vector<std::optional<std::size_t>> entries;
};

enum class Direction { kLeft, kRight };

// Matches a lexical context against the tapes. `positions` holds one cut
// point per tape; a left context must end there, a right one start there.
std::optional<Binding> match_context(const Grammar& g, const Rule& rule,
                                     const LexicalContext& context,
                                     const TapeConfiguration& tapes,
                                     std::span<const std::size_t> positions,
                                     Direction direction, Binding binding);

std::optional<Binding> match_context(const Grammar& g, const Rule& rule,
                                     const SurfaceContext& context,
                                     std::span<const Symbol> surface,
                                     std::size_t position, Direction direction,
                                     Binding binding);

struct Violation {
  std::string rule;
  std::size_t pair_index = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Obligatory-rule violations of a partition; empty means it passes.
std::vector<Violation> check_obligatory(const Grammar& g,
                                        const Partition& partition,
                                        const TapeConfiguration& tapes);

// Violations of the at-most-once / leftmost condition on rules that carry a
// feature structure.
std::vector<Violation> check_gated(const Grammar& g,
                                   const Partition& partition,
                                   const TapeConfiguration& tapes);

struct SearchOptions {
  // Indexed like Grammar::rules; empty enables every rule.
  std::vector<bool> enabled;
};

// All valid partitions of (tapes, surface), sorted.
std::vector<Partition> find_partitions(const Grammar& g,
                                       const TapeConfiguration& tapes,
                                       std::span<const Symbol> surface,
                                       const SearchOptions& options = {});

// All valid partitions of the tapes against any surface string, sorted.
std::vector<Partition> generate_partitions(const Grammar& g,
                                           const TapeConfiguration& tapes,
                                           const SearchOptions& options = {});

// Lays the selected morphemes out on their tapes, one configuration per
// assignment of the lexical-form variables.
std::vector<TapeConfiguration> instantiate(const Grammar& g,
                                           const MorphemeSelection& selection);

// Fills the tapes left open in `chosen` (indexed by tape): the one entry
// compatible with `goal`, else the null-form entry among several, else an
// empty tape. Throws ConfigError when the choice stays ambiguous.
MorphemeSelection complete_selection(
    const Grammar& g, std::vector<std::optional<std::size_t>> chosen,
    const FeatureStructure& goal);

// Surface forms of the selected morphemes under `goal`. Analyses whose word
// structure (entries, fired rules and goal unified) fails are dropped, as
// are those that skip a rule whose structure the word structure entails.
// Throws ConfigError for an undeclared goal attribute or a malformed
// selection.
std::vector<Analysis> generate(const Grammar& g,
                               const MorphemeSelection& selection,
                               const FeatureStructure& goal);

// Generation from raw tapes; the analyses carry no morphemes.
std::vector<Analysis> generate(const Grammar& g,
                               const TapeConfiguration& tapes,
                               const FeatureStructure& goal);

// Every analysis of `surface`: one lexicon entry per tape (tapes without
// entries stay empty), or no morphemes at all for the empty string.
std::vector<Analysis> recognize(const Grammar& g,
                                std::span<const Symbol> surface);

// Sorts by surface spelling, then trace, and removes duplicates.
void sort_canonical(const Grammar& g, std::vector<Analysis>& analyses);

}  // namespace twolevel

#endif  // TWOLEVEL_ENGINE_H_
