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

#ifndef MAXSTAR_UNIT_VALUE_HPP
#define MAXSTAR_UNIT_VALUE_HPP

#include <cstdint>
#include <string>

#include "maxstar/errors.hpp"

namespace maxstar {

enum class PolicyKind : std::uint8_t { ExactGrid, FloatTol };

/// Arithmetic policy for scalars in [0,1].
///
/// Exact-grid arithmetic keeps every value on the uniform grid
/// {0, 1/n, ..., 1} and compares numerators exactly; it is the policy the
/// law-verification suites run under, and it is only available for
/// operations that map the grid into itself.  Float arithmetic stores
/// plain doubles and compares with an absolute tolerance.
struct Policy {
  PolicyKind kind = PolicyKind::FloatTol;
  int grid_n = 0;      // grid denominator (ExactGrid)
  double eps = 1e-9;   // comparison tolerance (FloatTol)

  static Policy exact_grid(int n);
  static Policy float_tol(double eps = 1e-9);

  bool is_exact() const noexcept { return kind == PolicyKind::ExactGrid; }
  bool operator==(const Policy&) const noexcept = default;
  std::string describe() const;
};

/// A scalar in the unit interval under a declared arithmetic policy.
///
/// Under an exact-grid policy the value is the fraction numerator()/n and
/// all lattice operations are integer-exact.  Under a float policy the
/// value is a double and eq/leq/lt compare with the policy tolerance.
class UnitValue {
public:
  UnitValue() : UnitValue(0.0, 0, Policy::float_tol()) {}

  static UnitValue zero(const Policy& p);
  static UnitValue one(const Policy& p);

  /// Interprets `v` under `p`.  For exact grids `v` must lie on the grid
  /// (within a 1e-9 snap used only to absorb decimal-text rounding).
  static UnitValue from_double(double v, const Policy& p);

  /// Grid value k/n; requires an exact-grid policy and 0 <= k <= n.
  static UnitValue from_numerator(std::int64_t k, const Policy& p);

  double value() const noexcept { return val_; }
  std::int64_t numerator() const;
  const Policy& policy() const noexcept { return policy_; }
  bool is_exact() const noexcept { return policy_.is_exact(); }

  /// Same numeric value reinterpreted under a float policy.
  UnitValue to_float(double eps = 1e-9) const;

  UnitValue complement() const; // 1 - v

  // Policy-aware comparisons; mixing policies throws PolicyMismatchError.
  bool eq(const UnitValue& o) const;
  bool leq(const UnitValue& o) const;
  bool lt(const UnitValue& o) const;
  bool geq(const UnitValue& o) const { return o.leq(*this); }
  bool is_zero() const { return eq(zero(policy_)); }
  bool is_one() const { return eq(one(policy_)); }

  bool operator==(const UnitValue& o) const { return eq(o); }
  bool operator!=(const UnitValue& o) const { return !eq(o); }

  std::string str() const;

  friend UnitValue join(const UnitValue& a, const UnitValue& b);
  friend UnitValue meet(const UnitValue& a, const UnitValue& b);

  /// Raw numeric order, independent of tolerance; suitable for sorting.
  friend bool raw_less(const UnitValue& a, const UnitValue& b) {
    return a.val_ < b.val_;
  }
  friend bool raw_eq(const UnitValue& a, const UnitValue& b) {
    return a.val_ == b.val_;
  }

private:
  UnitValue(double v, std::int64_t num, const Policy& p)
      : val_(v), num_(num), policy_(p) {}

  double val_;
  std::int64_t num_; // numerator when exact
  Policy policy_;
};

/// Throws PolicyMismatchError unless both values share one policy.
void require_same_policy(const UnitValue& a, const UnitValue& b);

/// Pointwise maximum (the lattice join).
UnitValue join(const UnitValue& a, const UnitValue& b);
/// Pointwise minimum (the lattice meet).
UnitValue meet(const UnitValue& a, const UnitValue& b);

} // namespace maxstar

#endif
