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

#include "maxstar/unit_value.hpp"

#include <cmath>

#include <fmt/format.h>

namespace maxstar {

Policy Policy::exact_grid(int n) {
  if (n < 1) throw ValidationError("grid resolution must be >= 1");
  Policy p;
  p.kind = PolicyKind::ExactGrid;
  p.grid_n = n;
  p.eps = 0.0;
  return p;
}

Policy Policy::float_tol(double eps) {
  if (!(eps >= 0.0)) throw ValidationError("tolerance must be >= 0");
  Policy p;
  p.kind = PolicyKind::FloatTol;
  p.grid_n = 0;
  p.eps = eps;
  return p;
}

std::string Policy::describe() const {
  if (is_exact()) return fmt::format("exact-grid({})", grid_n);
  return fmt::format("float({:g})", eps);
}

UnitValue UnitValue::zero(const Policy& p) { return UnitValue(0.0, 0, p); }

UnitValue UnitValue::one(const Policy& p) {
  return UnitValue(1.0, p.is_exact() ? p.grid_n : 0, p);
}

UnitValue UnitValue::from_double(double v, const Policy& p) {
  if (!(v >= 0.0 && v <= 1.0))
    throw ValidationError(fmt::format("value {} outside [0,1]", v));
  if (p.is_exact()) {
    const double scaled = v * static_cast<double>(p.grid_n);
    const auto k = static_cast<std::int64_t>(std::llround(scaled));
    if (std::fabs(scaled - static_cast<double>(k)) >
        1e-9 * static_cast<double>(p.grid_n))
      throw ValidationError(
          fmt::format("value {} is not on the 1/{} grid", v, p.grid_n));
    return from_numerator(k, p);
  }
  return UnitValue(v, 0, p);
}

UnitValue UnitValue::from_numerator(std::int64_t k, const Policy& p) {
  if (!p.is_exact())
    throw ValidationError("numerator construction requires an exact-grid policy");
  if (k < 0 || k > p.grid_n)
    throw ValidationError(
        fmt::format("numerator {} outside 0..{}", k, p.grid_n));
  return UnitValue(static_cast<double>(k) / static_cast<double>(p.grid_n), k, p);
}

std::int64_t UnitValue::numerator() const {
  if (!is_exact())
    throw PolicyMismatchError("numerator() requires an exact-grid value");
  return num_;
}

UnitValue UnitValue::to_float(double eps) const {
  return UnitValue(val_, 0, Policy::float_tol(eps));
}

UnitValue UnitValue::complement() const {
  if (is_exact()) return from_numerator(policy_.grid_n - num_, policy_);
  return UnitValue(1.0 - val_, 0, policy_);
}

void require_same_policy(const UnitValue& a, const UnitValue& b) {
  if (!(a.policy() == b.policy()))
    throw PolicyMismatchError(
        fmt::format("mixed arithmetic policies: {} vs {}",
                    a.policy().describe(), b.policy().describe()));
}

bool UnitValue::eq(const UnitValue& o) const {
  require_same_policy(*this, o);
  if (is_exact()) return num_ == o.num_;
  return std::fabs(val_ - o.val_) <= policy_.eps;
}

bool UnitValue::leq(const UnitValue& o) const {
  require_same_policy(*this, o);
  if (is_exact()) return num_ <= o.num_;
  return val_ <= o.val_ + policy_.eps;
}

bool UnitValue::lt(const UnitValue& o) const {
  require_same_policy(*this, o);
  if (is_exact()) return num_ < o.num_;
  return val_ < o.val_ - policy_.eps;
}

std::string UnitValue::str() const {
  if (is_exact()) return fmt::format("{}/{}", num_, policy_.grid_n);
  return fmt::format("{}", val_);
}

UnitValue join(const UnitValue& a, const UnitValue& b) {
  require_same_policy(a, b);
  return a.val_ < b.val_ ? b : a;
}

UnitValue meet(const UnitValue& a, const UnitValue& b) {
  require_same_policy(a, b);
  return a.val_ < b.val_ ? a : b;
}

} // namespace maxstar
