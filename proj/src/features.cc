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

#include "twolevel/features.h"

#include <algorithm>
#include <charconv>

#include "twolevel/symbols.h"
#include "text_util.h"

namespace twolevel {

void FeatureSchema::declare(std::string attribute,
                            std::vector<std::string> values) {
  if (domains_.contains(attribute)) {
    throw ConfigError("attribute '" + attribute + "' declared twice");
  }
  if (values.empty()) {
    throw ConfigError("attribute '" + attribute + "' has an empty domain");
  }
  if (values.size() > kMaxDomainSize) {
    throw ConfigError("attribute '" + attribute + "' has more than 64 values");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::find(values.begin(), values.begin() + i, values[i]) !=
        values.begin() + i) {
      throw ConfigError("value '" + values[i] + "' repeated in domain of " +
                        attribute);
    }
  }
  order_.push_back(attribute);
  domains_.emplace(std::move(attribute), std::move(values));
}

bool FeatureSchema::has(std::string_view attribute) const {
  return domains_.find(attribute) != domains_.end();
}

const std::vector<std::string>& FeatureSchema::values(
    std::string_view attribute) const {
  auto it = domains_.find(attribute);
  if (it == domains_.end()) {
    throw ConfigError("undeclared attribute '" + std::string(attribute) + "'");
  }
  return it->second;
}

ValueMask FeatureSchema::full(std::string_view attribute) const {
  std::size_t n = values(attribute).size();
  return n == 64 ? ~ValueMask{0} : ((ValueMask{1} << n) - 1);
}

ValueMask FeatureSchema::mask_of(std::string_view attribute,
                                 const std::vector<std::string>& vals) const {
  const auto& domain = values(attribute);
  ValueMask mask = 0;
  for (const auto& v : vals) {
    auto it = std::find(domain.begin(), domain.end(), v);
    if (it == domain.end()) {
      throw ConfigError("value " + v + " outside domain of " +
                        std::string(attribute));
    }
    mask |= ValueMask{1} << (it - domain.begin());
  }
  return mask;
}

std::vector<std::string> FeatureSchema::values_in(std::string_view attribute,
                                                  ValueMask mask) const {
  const auto& domain = values(attribute);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (mask & (ValueMask{1} << i)) out.push_back(domain[i]);
  }
  return out;
}

bool FeatureStructure::constrain(const FeatureSchema& schema,
                                 std::string_view attribute, ValueMask mask) {
  const ValueMask full = schema.full(attribute);
  const ValueMask current = effective(schema, attribute);
  const ValueMask next = current & mask & full;
  if (next == 0) return false;
  if (next == full) {
    if (auto it = attrs_.find(attribute); it != attrs_.end()) attrs_.erase(it);
  } else {
    attrs_.insert_or_assign(std::string(attribute), next);
  }
  return true;
}

std::optional<ValueMask> FeatureStructure::get(
    std::string_view attribute) const {
  auto it = attrs_.find(attribute);
  if (it == attrs_.end()) return std::nullopt;
  return it->second;
}

ValueMask FeatureStructure::effective(const FeatureSchema& schema,
                                      std::string_view attribute) const {
  if (auto m = get(attribute)) return *m;
  return schema.full(attribute);
}

std::optional<FeatureStructure> unify(const FeatureSchema& schema,
                                      const FeatureStructure& a,
                                      const FeatureStructure& b) {
  for (const auto& [attr, mask] : a.attributes()) schema.values(attr);
  FeatureStructure out = a;
  for (const auto& [attr, mask] : b.attributes()) {
    if (!out.constrain(schema, attr, mask)) return std::nullopt;
  }
  return out;
}

bool subsumed_by(const FeatureSchema& schema, const FeatureStructure& a,
                 const FeatureStructure& b) {
  for (const auto& [attr, mask] : b.attributes()) {
    if ((a.effective(schema, attr) & ~mask) != 0) return false;
  }
  return true;
}

namespace {

std::optional<int> as_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

FeatureStructure parse_features(const FeatureSchema& schema,
                                std::string_view text) {
  FeatureStructure fs;
  for (std::string_view clause : detail::split(text, ';')) {
    clause = detail::trim(clause);
    if (clause.empty()) continue;
    auto eq = clause.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected attr=values in '" + std::string(clause) +
                        "'");
    }
    std::string attr(detail::trim(clause.substr(0, eq)));
    if (!schema.has(attr)) {
      throw ConfigError("undeclared attribute '" + attr + "'");
    }
    const auto& domain = schema.values(attr);
    std::vector<std::string> vals;
    for (std::string_view item : detail::split(clause.substr(eq + 1), ',')) {
      item = detail::trim(item);
      if (item.empty()) continue;
      auto dash = item.find('-');
      auto lo = dash == std::string_view::npos ? std::nullopt
                                                : as_int(item.substr(0, dash));
      auto hi = dash == std::string_view::npos ? std::nullopt
                                                : as_int(item.substr(dash + 1));
      if (lo && hi) {
        schema.mask_of(attr, {std::string(item.substr(0, dash)),
                              std::string(item.substr(dash + 1))});
        for (const auto& v : domain) {
          auto n = as_int(v);
          if (n && *n >= *lo && *n <= *hi) vals.push_back(v);
        }
      } else {
        vals.emplace_back(item);
      }
    }
    if (vals.empty()) {
      throw ConfigError("attribute '" + attr + "' given no values");
    }
    if (!fs.constrain(schema, attr, schema.mask_of(attr, vals))) {
      throw ConfigError("attribute '" + attr + "' constrained to no values");
    }
  }
  return fs;
}

std::string format_features(const FeatureSchema& schema,
                            const FeatureStructure& fs) {
  std::string out;
  for (const auto& attr : schema.attributes()) {
    auto mask = fs.get(attr);
    if (!mask) continue;
    if (!out.empty()) out += ';';
    out += attr;
    out += '=';
    out += detail::join(schema.values_in(attr, *mask), ",");
  }
  return out;
}

}  // namespace twolevel
