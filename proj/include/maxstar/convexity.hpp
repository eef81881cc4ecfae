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

#ifndef MAXSTAR_CONVEXITY_HPP
#define MAXSTAR_CONVEXITY_HPP

#include <optional>
#include <span>

#include "maxstar/star_measure.hpp"

namespace maxstar {

/// A coordinate vector in [0,1]^T for a finite index set T.
struct MaxStarPoint {
  std::vector<UnitValue> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  const Policy& policy() const { return coords.front().policy(); }

  bool operator==(const MaxStarPoint& o) const;
  bool operator!=(const MaxStarPoint& o) const { return !(*this == o); }

  std::string str() const;
};

bool carrier_less(const MaxStarPoint& a, const MaxStarPoint& b);
bool carrier_eq(const MaxStarPoint& a, const MaxStarPoint& b);

/// A finite set of points over a shared index set, kept sorted and
/// deduplicated.  An optional grid tag n asserts that every coordinate
/// lies on the 1/n grid, which the exact enumeration procedures require.
class PointCloud {
public:
  explicit PointCloud(std::vector<MaxStarPoint> points,
                      std::optional<int> grid = std::nullopt);

  /// The full grid cube: all points of {0, 1/n, ..., 1}^dim.
  static PointCloud grid_cube(std::size_t dim, int resolution, const Policy& policy);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<MaxStarPoint>& points() const noexcept { return points_; }
  const MaxStarPoint& operator[](std::size_t i) const { return points_.at(i); }
  std::optional<int> grid() const noexcept { return grid_; }
  const Policy& policy() const { return points_.front().policy(); }

  bool contains(const MaxStarPoint& p) const;
  bool contains_all(const PointCloud& other) const;

  bool operator==(const PointCloud& o) const;

  std::string str() const;

private:
  std::size_t dim_;
  std::vector<MaxStarPoint> points_;
  std::optional<int> grid_;
};

/// Coordinatewise max of weight_i * x_i; weights must attain 1.
MaxStarPoint combine(std::span<const MaxStarPoint> points,
                     std::span<const UnitValue> weights, const TNorm& op);

/// Closure under lambda * a v b for all members and all grid lambdas.
/// Requires a grid-tagged cloud and a grid-closed operation.
bool is_convex(const PointCloud& c, const TNorm& op);

/// Principal-solution decision procedure: the coordinatewise-greatest
/// subsolution weights are computed by residual implication; membership
/// holds iff they are normalized and reproduce the query exactly.
/// Returns the certificate weights (one per generator) on success.
std::optional<std::vector<UnitValue>> hull_membership(const MaxStarPoint& y,
                                                      const PointCloud& generators,
                                                      const TNorm& op);

/// Normal form over coordinate vectors.
using PointFormMeasure = StarMeasure<MaxStarPoint>;

/// The point whose t-th coordinate is the measure evaluated at the t-th
/// coordinate projection.
MaxStarPoint barycenter(const PointFormMeasure& mu, const TNorm& op);

/// The set of barycenters of all grid-weighted normal forms supported on
/// `a`: every coordinatewise max of grid-weighted members with weight
/// maximum 1.  `ambient` supplies the grid and must contain `a`.
PointCloud monad_hull(const PointCloud& a, const PointCloud& ambient, const TNorm& op);

/// Unit law (barycenter of a Dirac is the point) exhaustively over K and
/// the associativity law on the nested instances.
CheckReport check_algebra_laws(const PointCloud& k, const TNorm& op,
                               std::span<const StarMeasure<PointFormMeasure>> nested);

/// For every subset C of K: the hull fixes C iff C is convex.
/// Requires |K| <= 9 for the subset enumeration.
CheckReport check_convexity_equivalence(const PointCloud& k, const TNorm& op);

} // namespace maxstar

#endif
