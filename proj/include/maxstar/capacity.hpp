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

#ifndef MAXSTAR_CAPACITY_HPP
#define MAXSTAR_CAPACITY_HPP

#include <vector>

#include "maxstar/report.hpp"
#include "maxstar/space.hpp"
#include "maxstar/unit_value.hpp"

namespace maxstar {

/// A normalized monotone set function on all subsets of a finite space,
/// stored as a dense table indexed by subset bitmask.
class Capacity {
public:
  /// Validating constructor: requires value(empty) = 0, value(X) = 1,
  /// monotonicity along subset inclusion and one shared policy.
  Capacity(FiniteSpace space, std::vector<UnitValue> values);

  /// Axiom check without construction; cites every violating entry.
  static CheckReport validate(const FiniteSpace& space,
                              const std::vector<UnitValue>& values);

  /// Constructs without validation.  Harness-only escape hatch for
  /// fault-injection tests; everything else goes through the checked
  /// constructor.
  static Capacity unchecked(FiniteSpace space, std::vector<UnitValue> values);

  const FiniteSpace& space() const noexcept { return space_; }
  const Policy& policy() const { return values_.front().policy(); }
  const UnitValue& value(Mask subset) const { return values_.at(subset); }
  const std::vector<UnitValue>& values() const noexcept { return values_; }

  bool operator==(const Capacity& o) const;

  std::string str() const;

private:
  struct Unchecked {};
  Capacity(FiniteSpace space, std::vector<UnitValue> values, Unchecked);

  FiniteSpace space_;
  std::vector<UnitValue> values_; // size 2^n
};

/// A density on points attaining 1 somewhere; generates a possibility
/// capacity by suprema over subsets.
class PossibilityDistribution {
public:
  PossibilityDistribution(FiniteSpace space, std::vector<UnitValue> density);

  static PossibilityDistribution dirac(const FiniteSpace& space, std::size_t point,
                                       const Policy& policy);

  const FiniteSpace& space() const noexcept { return space_; }
  const Policy& policy() const { return density_.front().policy(); }
  const UnitValue& density(std::size_t point) const { return density_.at(point); }
  const std::vector<UnitValue>& densities() const noexcept { return density_; }

  /// max over the subset of the density; 0 on the empty set.
  UnitValue value(Mask subset) const;

  bool operator==(const PossibilityDistribution& o) const;

  std::string str() const;

private:
  FiniteSpace space_;
  std::vector<UnitValue> density_;
};

/// The capacity A -> max_{x in A} density(x).
Capacity capacity_from_distribution(const PossibilityDistribution& d);

/// Union-to-max capacities, decided by singleton reconstruction:
/// value(A) equals the max of the singleton values over A.
bool is_possibility(const Capacity& nu);

/// Intersection-to-min capacities, decided by the dual reconstruction:
/// value(A) equals the min of the co-singleton values over the complement.
bool is_necessity(const Capacity& nu);

/// Reads the density back off the singletons; empty if nu is not a
/// possibility capacity.
std::optional<PossibilityDistribution> distribution_of(const Capacity& nu);

/// The conjugate capacity F -> 1 - nu(complement of F); an involution.
Capacity dual(const Capacity& nu);

/// Image capacity A -> nu(preimage of A).
Capacity pushforward(const PointMap& f, const Capacity& nu);

/// Image density y -> max of the density over the fiber of y.
PossibilityDistribution pushforward(const PointMap& f, const PossibilityDistribution& d);

} // namespace maxstar

#endif
