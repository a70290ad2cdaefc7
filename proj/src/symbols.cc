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

#include "twolevel/symbols.h"

#include <algorithm>

namespace twolevel {

void SymbolSet::insert(Symbol s) {
  if (s.id >= bits_.size()) bits_.resize(s.id + 1, false);
  bits_[s.id] = true;
}

void SymbolSet::erase(Symbol s) {
  if (s.id < bits_.size()) bits_[s.id] = false;
}

bool SymbolSet::empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

std::size_t SymbolSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

SymbolSet SymbolSet::intersect(const SymbolSet& other) const {
  SymbolSet out(std::max(bits_.size(), other.bits_.size()));
  for (std::size_t i = 0; i < std::min(bits_.size(), other.bits_.size()); ++i) {
    if (bits_[i] && other.bits_[i]) out.bits_[i] = true;
  }
  return out;
}

std::vector<Symbol> SymbolSet::members() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(Symbol{static_cast<std::uint16_t>(i)});
  }
  return out;
}

std::optional<Symbol> Binding::get(std::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool Binding::try_bind(const Variable& v, Symbol s) {
  auto it = values_.find(v.name);
  if (it != values_.end()) return it->second == s;
  if (!v.admits(s)) return false;
  values_.emplace(v.name, s);
  return true;
}

std::optional<Binding> bind(const Binding& binding, const Variable& v,
                            Symbol s) {
  Binding out = binding;
  if (!out.try_bind(v, s)) return std::nullopt;
  return out;
}

Symbol Alphabet::add(std::string_view token, std::string_view group) {
  if (token.empty()) throw ConfigError("empty symbol token");
  if (token == kEpsilonToken || token == "*") {
    throw ConfigError("token '" + std::string(token) + "' is reserved");
  }
  if (index_.contains(token)) {
    throw ConfigError("symbol '" + std::string(token) +
                      "' declared in more than one alphabet");
  }
  if (names_.size() >= 0xffff) throw ConfigError("alphabet too large");
  Symbol s{static_cast<std::uint16_t>(names_.size())};
  names_.emplace_back(token);
  index_.emplace(std::string(token), s);
  auto g = std::find_if(groups_.begin(), groups_.end(),
                        [&](const Group& x) { return x.name == group; });
  if (g == groups_.end()) {
    groups_.push_back(Group{std::string(group), {}});
    g = std::prev(groups_.end());
  }
  g->symbols.push_back(s);
  return s;
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolSet Alphabet::all() const {
  SymbolSet out(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out.insert(Symbol{static_cast<std::uint16_t>(i)});
  }
  return out;
}

std::size_t Alphabet::longest_match(std::string_view text) const {
  std::size_t best = 0;
  for (const auto& n : names_) {
    if (n.size() > best && text.starts_with(n)) best = n.size();
  }
  return best;
}

std::optional<SymbolString> Alphabet::tokenize(std::string_view text) const {
  SymbolString out;
  while (!text.empty()) {
    std::size_t n = longest_match(text);
    if (n == 0) return std::nullopt;
    out.push_back(*find(text.substr(0, n)));
    text.remove_prefix(n);
  }
  return out;
}

std::string Alphabet::spell(std::span<const Symbol> symbols) const {
  std::string out;
  for (Symbol s : symbols) out += name(s);
  return out;
}

std::string Alphabet::spell_spaced(std::span<const Symbol> symbols) const {
  std::string out;
  for (Symbol s : symbols) {
    if (!out.empty()) out += ' ';
    out += name(s);
  }
  return out;
}

}  // namespace twolevel
