/*
 * Copyright 2026 the maxstar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "maxstar/function.hpp"

#include <fmt/format.h>

namespace maxstar {

UnitFunction::UnitFunction(FiniteSpace space, std::vector<UnitValue> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw ValidationError("function must assign every point");
  for (std::size_t i = 1; i < values_.size(); ++i)
    require_same_policy(values_.front(), values_[i]);
}

UnitFunction UnitFunction::constant(const FiniteSpace& space, const UnitValue& c) {
  return UnitFunction(space, std::vector<UnitValue>(space.size(), c));
}

UnitFunction UnitFunction::indicator(const FiniteSpace& space, Mask subset,
                                     const Policy& policy) {
  std::vector<UnitValue> values(space.size(), UnitValue::zero(policy));
  for (std::size_t i = 0; i < space.size(); ++i)
    if (mask_contains(subset, i)) values[i] = UnitValue::one(policy);
  return UnitFunction(space, std::move(values));
}

bool UnitFunction::operator==(const UnitFunction& o) const {
  if (!(space_ == o.space_)) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!values_[i].eq(o.values_[i])) return false;
  return true;
}

std::string UnitFunction::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].str();
  }
  return out + ")";
}

namespace {

void require_shared_space(const UnitFunction& f, const UnitFunction& g) {
  if (!(f.space() == g.space()))
    throw ValidationError("functions live on different spaces");
}

} // namespace

UnitFunction pointwise_max(const UnitFunction& f, const UnitFunction& g) {
  require_shared_space(f, g);
  std::vector<UnitValue> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(join(f[i], g[i]));
  return UnitFunction(f.space(), std::move(values));
}

UnitFunction pointwise_min(const UnitFunction& f, const UnitFunction& g) {
  require_shared_space(f, g);
  std::vector<UnitValue> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(meet(f[i], g[i]));
  return UnitFunction(f.space(), std::move(values));
}

UnitFunction scale(const TNorm& op, const UnitValue& c, const UnitFunction& f) {
  std::vector<UnitValue> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(op.apply(c, f[i]));
  return UnitFunction(f.space(), std::move(values));
}

bool pointwise_leq(const UnitFunction& f, const UnitFunction& g) {
  require_shared_space(f, g);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].leq(g[i])) return false;
  return true;
}

} // namespace maxstar
