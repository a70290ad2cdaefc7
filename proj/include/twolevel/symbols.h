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

#ifndef TWOLEVEL_SYMBOLS_H_
#define TWOLEVEL_SYMBOLS_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twolevel {

// Raised for malformed configuration: undeclared attributes, values outside a
// declared domain, unknown morphemes. Distinct from a failed unification,
// which is an ordinary empty result.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The epsilon token. Never a member of any alphabet or class.
inline constexpr std::string_view kEpsilonToken = "0";

// An interned alphabet token.
struct Symbol {
  std::uint16_t id = 0;
  friend auto operator<=>(Symbol, Symbol) = default;
};

using SymbolString = std::vector<Symbol>;

// Membership bitmap over the symbols of one alphabet.
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::size_t universe) : bits_(universe, false) {}

  bool contains(Symbol s) const {
    return s.id < bits_.size() && bits_[s.id];
  }
  void insert(Symbol s);
  void erase(Symbol s);
  bool empty() const;
  std::size_t count() const;
  std::size_t universe() const { return bits_.size(); }
  SymbolSet intersect(const SymbolSet& other) const;
  std::vector<Symbol> members() const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

 private:
  std::vector<bool> bits_;
};

struct SymbolClass {
  std::string name;
  std::vector<Symbol> members;  // declaration order
  SymbolSet set;

  friend bool operator==(const SymbolClass&, const SymbolClass&) = default;
};

// A capitalised pattern variable. `admitted` is the resolved range: the class
// members (or every symbol, when unclassed) minus the exclusions.
struct Variable {
  std::string name;
  std::optional<std::string> class_name;
  std::vector<Symbol> exclusions;
  SymbolSet admitted;

  bool admits(Symbol s) const { return admitted.contains(s); }

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Variable -> Symbol assignments, keyed by variable name.
class Binding {
 public:
  std::optional<Symbol> get(std::string_view name) const;
  bool contains(std::string_view name) const {
    return values_.find(name) != values_.end();
  }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Extends the binding in place. Returns false, leaving the binding
  // unchanged, on a clash or when `s` is outside the variable's range.
  bool try_bind(const Variable& v, Symbol s);

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Binding&, const Binding&) = default;
  friend auto operator<=>(const Binding& a, const Binding& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::map<std::string, Symbol, std::less<>> values_;
};

// Functional form of Binding::try_bind.
std::optional<Binding> bind(const Binding& binding, const Variable& v,
                            Symbol s);

// Named groups of declared tokens. Every token belongs to exactly one group.
class Alphabet {
 public:
  struct Group {
    std::string name;
    std::vector<Symbol> symbols;
    friend bool operator==(const Group&, const Group&) = default;
  };

  // Throws ConfigError on a duplicate or reserved token.
  Symbol add(std::string_view token, std::string_view group);

  std::optional<Symbol> find(std::string_view token) const;
  const std::string& name(Symbol s) const { return names_.at(s.id); }
  std::size_t size() const { return names_.size(); }
  const std::vector<Group>& groups() const { return groups_; }
  SymbolSet all() const;

  // Longest-match tokenisation; nullopt names no position, callers that need
  // one use tokenize_prefix.
  std::optional<SymbolString> tokenize(std::string_view text) const;
  // Length of the longest declared token at the start of `text` (0 if none).
  std::size_t longest_match(std::string_view text) const;

  std::string spell(std::span<const Symbol> symbols) const;
  std::string spell_spaced(std::span<const Symbol> symbols) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.groups_ == b.groups_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol, std::less<>> index_;
  std::vector<Group> groups_;
};

}  // namespace twolevel

#endif  // TWOLEVEL_SYMBOLS_H_
