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

#ifndef TWOLEVEL_FEATURES_H_
#define TWOLEVEL_FEATURES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twolevel {

// Bit i set <=> the i-th declared value of the attribute is allowed.
using ValueMask = std::uint64_t;

inline constexpr std::size_t kMaxDomainSize = 64;

// Declared attributes and their finite value domains.
class FeatureSchema {
 public:
  // Throws ConfigError on redeclaration, an empty domain or more than
  // kMaxDomainSize values.
  void declare(std::string attribute, std::vector<std::string> values);

  bool has(std::string_view attribute) const;
  const std::vector<std::string>& values(std::string_view attribute) const;
  ValueMask full(std::string_view attribute) const;
  // Mask of the named values. Throws ConfigError naming the first value
  // outside the domain ("value 9 outside domain of measure").
  ValueMask mask_of(std::string_view attribute,
                    const std::vector<std::string>& values) const;
  std::vector<std::string> values_in(std::string_view attribute,
                                     ValueMask mask) const;
  const std::vector<std::string>& attributes() const { return order_; }

  friend bool operator==(const FeatureSchema&, const FeatureSchema&) = default;

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> domains_;
  std::vector<std::string> order_;
};

// Flat attribute -> value-set map. An absent attribute is unconstrained; a
// full-domain set is stored as absent so that equal denotations compare
// equal. Stored masks are never empty.
class FeatureStructure {
 public:
  // Intersects the attribute's current set with `mask`. Returns false when
  // the intersection is empty (the structure is then left unchanged).
  bool constrain(const FeatureSchema& schema, std::string_view attribute,
                 ValueMask mask);

  std::optional<ValueMask> get(std::string_view attribute) const;
  // The attribute's set, or its full domain when unconstrained.
  ValueMask effective(const FeatureSchema& schema,
                      std::string_view attribute) const;
  const std::map<std::string, ValueMask, std::less<>>& attributes() const {
    return attrs_;
  }
  bool empty() const { return attrs_.empty(); }

  friend bool operator==(const FeatureStructure&,
                         const FeatureStructure&) = default;

 private:
  std::map<std::string, ValueMask, std::less<>> attrs_;
};

// Per-attribute intersection; nullopt when any intersection is empty.
// Throws ConfigError when either side uses an undeclared attribute.
std::optional<FeatureStructure> unify(const FeatureSchema& schema,
                                      const FeatureStructure& a,
                                      const FeatureStructure& b);

// True iff every assignment allowed by `a` is allowed by `b`.
bool subsumed_by(const FeatureSchema& schema, const FeatureStructure& a,
                 const FeatureStructure& b);

// Parses `attr=v1,v2; attr2=v3`. Numeric ranges `1-8` expand against the
// declared domain. Throws ConfigError on undeclared attributes or values.
FeatureStructure parse_features(const FeatureSchema& schema,
                                std::string_view text);

// Inverse of parse_features, values listed in domain order, attributes in
// declaration order: `measure=2,5;voice=pass`.
std::string format_features(const FeatureSchema& schema,
                            const FeatureStructure& fs);

}  // namespace twolevel

#endif  // TWOLEVEL_FEATURES_H_
