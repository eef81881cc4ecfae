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

#ifndef MAXSTAR_TNORM_HPP
#define MAXSTAR_TNORM_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxstar/report.hpp"
#include "maxstar/unit_value.hpp"

namespace maxstar {

enum class TNormKind : std::uint8_t { Minimum, Product, Lukasiewicz, Table };

/// A continuous triangular norm on [0,1]: associative, commutative,
/// monotone in each argument, with unit 1.
///
/// The three named kinds are built in.  Custom norms are given as a value
/// table on a uniform grid and evaluated off-grid by bilinear
/// interpolation, so continuity and monotonicity are inherited from the
/// table; associativity is only as good as the table and is left to the
/// law checks.
class TNorm {
public:
  static TNorm minimum();
  static TNorm product();
  static TNorm lukasiewicz();

  /// Table of (resolution+1)^2 node values, row-major; node (i,j) is the
  /// value at (i/resolution, j/resolution).  With `validate` the table is
  /// rejected unless it is symmetric, monotone, inside [0,1] and has the
  /// unit boundary; pass false to build deliberately broken tables for
  /// fault-injection checks.
  static TNorm from_table(int resolution, std::vector<double> nodes,
                          bool validate = true);

  /// "min" | "product" | "lukasiewicz" (with a few aliases).
  static TNorm by_name(std::string_view name);

  TNormKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  /// Whether the operation maps the 1/n grid into itself.
  bool grid_closed(int n) const;

  /// a * b under the common policy of the operands.  Exact-grid operands
  /// require a grid-closed kind; product on a grid throws GridClosureError.
  UnitValue apply(const UnitValue& a, const UnitValue& b) const;

  /// Plain double evaluation, no policy bookkeeping.
  double apply_raw(double a, double b) const;

  /// Least s with s * l >= t.  Defined only for t <= l; returns nullopt
  /// otherwise.  Analytic for the named kinds; table kinds use a grid
  /// scan (exact policy) or 64-step bisection (float policy).
  std::optional<UnitValue> residuum(const UnitValue& t, const UnitValue& l) const;

  /// Greatest s with s * l <= t (always defined; 0 qualifies).  This is
  /// the principal-solution step used by hull membership.
  UnitValue implication(const UnitValue& l, const UnitValue& t) const;

private:
  TNorm(TNormKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  double table_lookup_raw(double a, double b) const;
  UnitValue grid_apply(const UnitValue& a, const UnitValue& b) const;

  TNormKind kind_;
  std::string name_;
  int table_n_ = 0;
  std::vector<double> table_;
};

/// All grid points 0/n .. n/n as UnitValues of the given policy (for a
/// float policy an explicit resolution is required).
std::vector<UnitValue> grid_points(const Policy& policy, int resolution = -1);

/// Law sweep over all (t, s, l) triples drawn from `values`: unit,
/// commutativity, associativity and monotonicity.
CheckReport check_tnorm_axioms(const TNorm& op, std::span<const UnitValue> values);

/// Checks (t v s) * l == (t * l) v (s * l) on all triples from `values`.
CheckReport check_distributivity(const TNorm& op, std::span<const UnitValue> values);

/// Residuation laws over all pairs/triples from `values`:
/// l * b(t,l) == t for t <= l, and the adjunction k * l >= t iff k >= b(t,l).
CheckReport check_residuation(const TNorm& op, std::span<const UnitValue> values);

} // namespace maxstar

#endif
