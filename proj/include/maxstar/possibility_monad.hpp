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

#ifndef MAXSTAR_POSSIBILITY_MONAD_HPP
#define MAXSTAR_POSSIBILITY_MONAD_HPP

#include <span>

#include "maxstar/capacity.hpp"
#include "maxstar/integral.hpp"
#include "maxstar/star_measure.hpp"

namespace maxstar {

/// A finitely supported possibility capacity over possibility
/// distributions: inner distributions nu_i with weights attaining 1.
/// Entries are kept canonical (sorted, merged, zero weights pruned).
class OuterPossibility {
public:
  struct Entry {
    UnitValue weight;
    PossibilityDistribution dist;
  };

  OuterPossibility(FiniteSpace base, std::vector<Entry> entries);

  static OuterPossibility dirac(const PossibilityDistribution& nu);

  const FiniteSpace& base() const noexcept { return base_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Policy& policy() const { return entries_.front().weight.policy(); }

  std::string str() const;

private:
  FiniteSpace base_;
  std::vector<Entry> entries_;
};

/// Two-level nesting: weighted outer possibilities, for the associativity law.
class OuterPossibility2 {
public:
  struct Entry {
    UnitValue weight;
    OuterPossibility outer;
  };

  OuterPossibility2(FiniteSpace base, std::vector<Entry> entries);

  const FiniteSpace& base() const noexcept { return base_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
  FiniteSpace base_;
  std::vector<Entry> entries_;
};

/// Monad unit: the Dirac density at a point.
PossibilityDistribution eta(const FiniteSpace& space, std::size_t point,
                            const Policy& policy);

/// Monad multiplication at one subset, closed form
/// max_i weight_i * nu_i(F).
UnitValue mu_value(const OuterPossibility& c, Mask f, const TNorm& op);

/// Same value by the defining threshold sweep: max over candidate
/// thresholds t of c{nu : nu(F) >= t} * t.  The sweep over t in (0,1]
/// restricts to the inner values nu_i(F); all other thresholds are
/// dominated.  Kept as the second route for closed-form validation.
UnitValue mu_value_by_threshold(const OuterPossibility& c, Mask f, const TNorm& op);

/// Density of the multiplied capacity: x -> max_i weight_i * nu_i(x).
PossibilityDistribution mu_distribution(const OuterPossibility& c, const TNorm& op);

/// Full table assembled from the per-subset closed form.
Capacity mu_capacity(const OuterPossibility& c, const TNorm& op);

/// Multiplication of the two outer levels, leaving inner distributions
/// as atoms (the monad multiplication at the space of distributions).
OuterPossibility outer_multiplication(const OuterPossibility2& d, const TNorm& op);

/// Elementwise multiplication of the inner levels (the functor applied
/// to the monad multiplication).
OuterPossibility map_multiplication(const OuterPossibility2& d, const TNorm& op);

/// The integral transcription of a distribution: support = points of
/// positive density, weights = densities.  Its evaluations against any
/// function reproduce the t-normed integral for every t-norm, which is
/// why no operation parameter appears here.
PointMeasure iso_l(const PossibilityDistribution& nu);

/// Reads densities back off the normal form.
PossibilityDistribution iso_l_inverse(const PointMeasure& mu, const FiniteSpace& space);

/// Unit laws and associativity, as capacity-table equality.
CheckReport check_monad_laws(std::span<const PossibilityDistribution> units,
                             std::span<const OuterPossibility2> nested,
                             const TNorm& op);

/// Both morphism squares: the unit square at every point of the space
/// and the multiplication square on the given instances, compared
/// structurally and by evaluation on the test functions.
CheckReport check_morphism_laws(const FiniteSpace& space,
                                std::span<const OuterPossibility> instances,
                                const TNorm& op,
                                std::span<const UnitFunction> test_functions);

} // namespace maxstar

#endif
