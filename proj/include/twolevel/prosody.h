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

// Moraic syllabification, the parsing function, and prosodic
// circumscription. Used as an independent check on the rule grammar.

#ifndef TWOLEVEL_PROSODY_H_
#define TWOLEVEL_PROSODY_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twolevel/grammar.h"
#include "twolevel/symbols.h"

namespace twolevel {

class ProsodyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Phonology {
  SymbolSet consonants;
  SymbolSet vowels;

  bool consonant(Symbol s) const { return consonants.contains(s); }
  bool vowel(Symbol s) const { return vowels.contains(s); }

  // Uses the classes `consonant` and `vowel`.
  static Phonology from_grammar(const Grammar& g);
};

enum class Weight { kLight, kHeavy };

struct Syllable {
  Symbol onset;
  std::vector<Symbol> morae;  // first is a vowel

  Weight weight() const {
    return morae.size() == 1 ? Weight::kLight : Weight::kHeavy;
  }
  SymbolString symbols() const;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct SyllabifiedBase {
  // Word-initial consonants that cannot be syllabified (the n of nkutib).
  SymbolString appendix;
  std::vector<Syllable> syllables;
  std::optional<Symbol> extrametrical;

  SymbolString flatten() const;
  friend bool operator==(const SyllabifiedBase&,
                         const SyllabifiedBase&) = default;
};

// Greedy left-to-right parse. CV is preferred; a following vowel makes CVV,
// and a consonant that cannot begin the next syllable closes CVC. With
// `extrametrical_final` a word-final consonant is set aside.
SyllabifiedBase syllabify(const Phonology& ph, std::span<const Symbol> s,
                          bool extrametrical_final);

enum class Constituent { kLightSyllable, kConsonant, kFoot, kProsodicWord };
enum class Edge { kLeft, kRight };

struct Factoring {
  SymbolString kernel;
  SymbolString residue;
  Edge edge = Edge::kLeft;

  // kernel+residue at the left edge, residue+kernel at the right.
  SymbolString reassemble() const;
};

// Φ(C, E). At the right edge an extrametrical consonant travels with the
// kernel. Feet and prosodic words are rejected as unsupported.
Factoring phi(const Phonology& ph, const SyllabifiedBase& base,
              Constituent constituent, Edge edge);

struct MorphOp {
  enum class Kind { kPrefixString, kSuffixString, kPrefixMoraSpread };
  Kind kind = Kind::kPrefixString;
  SymbolString symbols;

  static MorphOp prefix(SymbolString s) { return {Kind::kPrefixString, s}; }
  static MorphOp suffix(SymbolString s) { return {Kind::kSuffixString, s}; }
  static MorphOp spread() { return {Kind::kPrefixMoraSpread, {}}; }
};

// A prefixed mora is filled by spreading the operand's first consonant.
SymbolString apply_op(const Phonology& ph, const MorphOp& op,
                      std::span<const Symbol> operand);

// kernel + O(residue) at the left edge; O(residue) + kernel at the right.
SymbolString apply_npc(const Phonology& ph, const MorphOp& op,
                       const SyllabifiedBase& base, Constituent constituent,
                       Edge edge);
// O(kernel) + residue at the left edge; residue + O(kernel) at the right.
SymbolString apply_ppc(const Phonology& ph, const MorphOp& op,
                       const SyllabifiedBase& base, Constituent constituent,
                       Edge edge);

enum class TemplateNode { kLight, kHeavy, kExtrametrical };

std::string to_string(TemplateNode n);

// Left-to-right association: a syllable node takes a consonant, a mora a
// vowel; the second mora of a heavy node copies the first.
SymbolString associate(const Phonology& ph,
                       std::span<const TemplateNode> templ,
                       std::span<const Symbol> root,
                       std::span<const Symbol> vocalism);

inline constexpr int kOracleMeasures[] = {1, 2, 3, 8};

// The stem of measure 1, 2, 3 or 8 built from the lexicon's root and
// vocalism. Throws ProsodyError for any other measure.
SymbolString oracle_measure(const Grammar& g, int measure);

}  // namespace twolevel

#endif  // TWOLEVEL_PROSODY_H_
