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

#ifndef MAXSTAR_INTEGRAL_HPP
#define MAXSTAR_INTEGRAL_HPP

#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "maxstar/capacity.hpp"
#include "maxstar/function.hpp"

namespace maxstar {

/// Value of a t-normed integral together with the threshold and superlevel
/// set where the maximum was attained.
struct IntegralReport {
  UnitValue value;
  UnitValue threshold;
  Mask superlevel = 0;
};

/// Mask of points with f(x) >= t.
Mask superlevel(const UnitFunction& f, const UnitValue& t);

/// The t-normed integral: max over thresholds t of value(f_t) * t.
///
/// The superlevel map t -> f_t is a right-continuous step function that
/// only jumps at values of f, and t -> value(f_t) * t is monotone between
/// jumps, so scanning the distinct values of f (plus 0) is exact.
IntegralReport integrate(const Capacity& nu, const UnitFunction& f, const TNorm& op);

/// Convenience: just the value.
UnitValue integrate_value(const Capacity& nu, const UnitFunction& f, const TNorm& op);

/// Closed form for possibility capacities: max over points of
/// density(x) * f(x).  Agrees with integrate over the induced capacity.
UnitValue integrate_possibility_fast(const PossibilityDistribution& d,
                                     const UnitFunction& f, const TNorm& op);

/// No two points are ordered oppositely by f and g.
bool comonotone(const UnitFunction& f, const UnitFunction& g);

/// Axioms of the integral functional mu = integrate(nu, -, op) on a sample:
/// mu(1_X) = 1, max-preservation on comonotone sample pairs, and
/// *-homogeneity mu(c * f) = c * mu(f) for sampled constants.
CheckReport check_tstar_axioms(const Capacity& nu, const TNorm& op,
                               std::span<const UnitFunction> samples,
                               std::span<const UnitValue> constants);

/// Max-preservation over arbitrary (not only comonotone) sampled pairs.
bool is_star_measure(const Capacity& nu, const TNorm& op,
                     std::span<const std::pair<UnitFunction, UnitFunction>> pairs);

/// Default sample: all pairs of subset indicators.
bool is_star_measure(const Capacity& nu, const TNorm& op);

/// For a non-possibility capacity, a pair of indicators whose pointwise
/// maximum integrates to strictly more than the maximum of the two
/// integrals; empty when nu is a possibility capacity.
std::optional<std::pair<UnitFunction, UnitFunction>>
characterization_witness(const Capacity& nu, const TNorm& op);

/// Reads a capacity back off a black-box functional via indicators:
/// value(A) = mu(indicator of A).  Throws ValidationError when the
/// recovered table violates the capacity axioms.
Capacity capacity_from_functional(
    const std::function<UnitValue(const UnitFunction&)>& mu,
    const FiniteSpace& space, const Policy& policy);

} // namespace maxstar

#endif
