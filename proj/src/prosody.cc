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

#include "twolevel/prosody.h"

#include <algorithm>

namespace twolevel {

Phonology Phonology::from_grammar(const Grammar& g) {
  const SymbolClass* c = g.find_class("consonant");
  const SymbolClass* v = g.find_class("vowel");
  if (!c || !v) {
    throw ConfigError("grammar lacks the classes 'consonant' and 'vowel'");
  }
  return {c->set, v->set};
}

SymbolString Syllable::symbols() const {
  SymbolString out{onset};
  out.insert(out.end(), morae.begin(), morae.end());
  return out;
}

SymbolString SyllabifiedBase::flatten() const {
  SymbolString out = appendix;
  for (const auto& s : syllables) {
    auto sy = s.symbols();
    out.insert(out.end(), sy.begin(), sy.end());
  }
  if (extrametrical) out.push_back(*extrametrical);
  return out;
}

SyllabifiedBase syllabify(const Phonology& ph, std::span<const Symbol> s,
                          bool extrametrical_final) {
  if (s.empty()) throw ProsodyError("empty base");
  const std::size_t n = s.size();
  auto fail = [](std::size_t i, const std::string& why) {
    return ProsodyError("cannot syllabify at position " + std::to_string(i) +
                        ": " + why);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!ph.consonant(s[i]) && !ph.vowel(s[i])) {
      throw fail(i, "neither consonant nor vowel");
    }
  }

  SyllabifiedBase out;
  std::size_t end = n;
  if (extrametrical_final && n > 1 && ph.consonant(s[n - 1])) {
    out.extrametrical = s[n - 1];
    end = n - 1;
  }
  std::size_t i = 0;
  while (i + 1 < end && ph.consonant(s[i]) && ph.consonant(s[i + 1])) {
    out.appendix.push_back(s[i++]);
  }
  while (i < end) {
    if (!ph.consonant(s[i])) throw fail(i, "vowel without onset");
    if (i + 1 >= end || !ph.vowel(s[i + 1])) {
      throw fail(i, "onset without vowel");
    }
    Syllable syl{s[i], {s[i + 1]}};
    i += 2;
    if (i < end && ph.vowel(s[i])) {
      syl.morae.push_back(s[i++]);
    } else if (i < end && (i + 1 >= end || ph.consonant(s[i + 1]))) {
      syl.morae.push_back(s[i++]);
    }
    out.syllables.push_back(std::move(syl));
  }
  if (out.syllables.empty()) throw fail(0, "no syllable");
  return out;
}

SymbolString Factoring::reassemble() const {
  SymbolString out = edge == Edge::kLeft ? kernel : residue;
  const auto& tail = edge == Edge::kLeft ? residue : kernel;
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Factoring phi(const Phonology& ph, const SyllabifiedBase& base,
              Constituent constituent, Edge edge) {
  if (constituent == Constituent::kFoot ||
      constituent == Constituent::kProsodicWord) {
    throw ProsodyError("unsupported constituent: only light syllables and "
                       "consonants are parsed");
  }
  const SymbolString flat = base.flatten();
  Factoring f;
  f.edge = edge;
  std::size_t cut = 0;  // kernel length (left) or residue length (right)
  if (constituent == Constituent::kConsonant) {
    if (edge == Edge::kLeft) {
      cut = 1;  // every parsed base starts with a consonant
    } else {
      if (!ph.consonant(flat.back())) {
        throw ProsodyError("no consonant at the right edge");
      }
      cut = flat.size() - 1;
    }
  } else if (edge == Edge::kLeft) {
    if (!base.appendix.empty()) {
      throw ProsodyError("no light syllable at the left edge");
    }
    const Syllable& first = base.syllables.front();
    if (first.weight() != Weight::kLight) {
      throw ProsodyError("left-edge syllable is heavy");
    }
    cut = 2;
  } else {
    const Syllable& last = base.syllables.back();
    if (last.weight() != Weight::kLight) {
      throw ProsodyError("right-edge syllable is heavy");
    }
    cut = flat.size() - 2 - (base.extrametrical ? 1 : 0);
  }
  if (edge == Edge::kLeft) {
    f.kernel.assign(flat.begin(), flat.begin() + cut);
    f.residue.assign(flat.begin() + cut, flat.end());
  } else {
    f.residue.assign(flat.begin(), flat.begin() + cut);
    f.kernel.assign(flat.begin() + cut, flat.end());
  }
  return f;
}

SymbolString apply_op(const Phonology& ph, const MorphOp& op,
                      std::span<const Symbol> operand) {
  SymbolString out;
  switch (op.kind) {
    case MorphOp::Kind::kPrefixString:
      out = op.symbols;
      out.insert(out.end(), operand.begin(), operand.end());
      break;
    case MorphOp::Kind::kSuffixString:
      out.assign(operand.begin(), operand.end());
      out.insert(out.end(), op.symbols.begin(), op.symbols.end());
      break;
    case MorphOp::Kind::kPrefixMoraSpread:
      if (operand.empty() || !ph.consonant(operand.front())) {
        throw ProsodyError("mora cannot spread onto a vowel-initial operand");
      }
      out.push_back(operand.front());
      out.insert(out.end(), operand.begin(), operand.end());
      break;
  }
  return out;
}

SymbolString apply_npc(const Phonology& ph, const MorphOp& op,
                       const SyllabifiedBase& base, Constituent constituent,
                       Edge edge) {
  Factoring f = phi(ph, base, constituent, edge);
  f.residue = apply_op(ph, op, f.residue);
  return f.reassemble();
}

SymbolString apply_ppc(const Phonology& ph, const MorphOp& op,
                       const SyllabifiedBase& base, Constituent constituent,
                       Edge edge) {
  Factoring f = phi(ph, base, constituent, edge);
  f.kernel = apply_op(ph, op, f.kernel);
  return f.reassemble();
}

std::string to_string(TemplateNode n) {
  switch (n) {
    case TemplateNode::kLight: return "light syllable";
    case TemplateNode::kHeavy: return "heavy syllable";
    case TemplateNode::kExtrametrical: return "extrametrical consonant";
  }
  return "?";
}

SymbolString associate(const Phonology& ph,
                       std::span<const TemplateNode> templ,
                       std::span<const Symbol> root,
                       std::span<const Symbol> vocalism) {
  (void)ph;
  SymbolString out;
  std::size_t c = 0, v = 0;
  for (std::size_t i = 0; i < templ.size(); ++i) {
    const std::string where =
        " of node " + std::to_string(i + 1) + " (" + to_string(templ[i]) + ")";
    if (c >= root.size()) throw ProsodyError("unfilled consonant" + where);
    out.push_back(root[c++]);
    if (templ[i] == TemplateNode::kExtrametrical) continue;
    if (v >= vocalism.size()) throw ProsodyError("unfilled mora" + where);
    out.push_back(vocalism[v++]);
    if (templ[i] == TemplateNode::kHeavy) out.push_back(out.back());
  }
  return out;
}

namespace {

SymbolString first_form(const Grammar& g, const std::string& category) {
  for (const auto& e : g.lexicon) {
    if (e.category != category) continue;
    SymbolString out;
    for (const auto& el : e.form) {
      if (el.kind != PatternElement::Kind::kLiteral) {
        throw ConfigError("the " + category + " must be fully specified");
      }
      out.push_back(el.symbol);
    }
    return out;
  }
  throw ConfigError("lexicon has no " + category);
}

}  // namespace

SymbolString oracle_measure(const Grammar& g, int measure) {
  if (std::find(std::begin(kOracleMeasures), std::end(kOracleMeasures),
                measure) == std::end(kOracleMeasures)) {
    throw ProsodyError("unsupported measure " + std::to_string(measure) +
                       "; the oracle covers 1, 2, 3 and 8");
  }
  const Phonology ph = Phonology::from_grammar(g);
  const SymbolString root = first_form(g, "root");
  const SymbolString vocalism = first_form(g, "vocalism");
  using N = TemplateNode;
  const N base_template[] = {N::kLight, N::kLight, N::kExtrametrical};
  const N long_template[] = {N::kHeavy, N::kLight, N::kExtrametrical};
  if (measure == 3) return associate(ph, long_template, root, vocalism);
  SymbolString stem = associate(ph, base_template, root, vocalism);
  if (measure == 1) return stem;
  const SyllabifiedBase base = syllabify(ph, stem, true);
  if (measure == 2) {
    return apply_npc(ph, MorphOp::spread(), base, Constituent::kLightSyllable,
                     Edge::kLeft);
  }
  auto t = g.alphabet.find("t");
  if (!t) throw ConfigError("alphabet lacks 't'");
  return apply_npc(ph, MorphOp::prefix({*t}), base, Constituent::kConsonant,
                   Edge::kLeft);
}

}  // namespace twolevel
