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

#include "maxstar/convexity.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace maxstar {

bool MaxStarPoint::operator==(const MaxStarPoint& o) const {
  if (coords.size() != o.coords.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].eq(o.coords[i])) return false;
  return true;
}

std::string MaxStarPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].str();
  }
  return out + ")";
}

bool carrier_less(const MaxStarPoint& a, const MaxStarPoint& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (raw_less(a.coords[i], b.coords[i])) return true;
    if (raw_less(b.coords[i], a.coords[i])) return false;
  }
  return a.coords.size() < b.coords.size();
}

bool carrier_eq(const MaxStarPoint& a, const MaxStarPoint& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!raw_eq(a.coords[i], b.coords[i])) return false;
  return true;
}

namespace {

bool on_grid(const MaxStarPoint& p, int n) {
  for (const UnitValue& c : p.coords) {
    const double scaled = c.value() * n;
    if (std::abs(scaled - std::llround(scaled)) > 1e-9 * n) return false;
  }
  return true;
}

} // namespace

PointCloud::PointCloud(std::vector<MaxStarPoint> points, std::optional<int> grid)
    : dim_(0), points_(std::move(points)), grid_(grid) {
  if (points_.empty()) throw ValidationError("a point cloud needs at least one point");
  dim_ = points_.front().dim();
  if (dim_ == 0) throw ValidationError("points need at least one coordinate");
  for (const MaxStarPoint& p : points_) {
    if (p.dim() != dim_)
      throw ValidationError("points of a cloud must share the index set");
    for (const UnitValue& c : p.coords)
      require_same_policy(points_.front().coords.front(), c);
    if (grid_ && !on_grid(p, *grid_))
      throw ValidationError(
          fmt::format("point {} is off the declared 1/{} grid", p.str(), *grid_));
  }
  std::sort(points_.begin(), points_.end(), [](const MaxStarPoint& a, const MaxStarPoint& b) {
    return carrier_less(a, b);
  });
  points_.erase(std::unique(points_.begin(), points_.end(),
                            [](const MaxStarPoint& a, const MaxStarPoint& b) {
                              return carrier_eq(a, b);
                            }),
                points_.end());
}

PointCloud PointCloud::grid_cube(std::size_t dim, int resolution, const Policy& policy) {
  if (dim == 0) throw ValidationError("the cube needs a positive dimension");
  const std::vector<UnitValue> axis = grid_points(policy, resolution);
  std::size_t total = 1;
  for (std::size_t t = 0; t < dim; ++t) {
    total *= axis.size();
    if (total > (std::size_t{1} << 24))
      throw ResourceLimitError("grid cube too large to enumerate");
  }
  std::vector<MaxStarPoint> points;
  points.reserve(total);
  std::vector<std::size_t> odo(dim, 0);
  for (;;) {
    MaxStarPoint p;
    p.coords.reserve(dim);
    for (std::size_t t = 0; t < dim; ++t) p.coords.push_back(axis[odo[t]]);
    points.push_back(std::move(p));
    std::size_t t = 0;
    while (t < dim && ++odo[t] == axis.size()) odo[t++] = 0;
    if (t == dim) break;
  }
  return PointCloud(std::move(points), resolution);
}

bool PointCloud::contains(const MaxStarPoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p,
                             [](const MaxStarPoint& a, const MaxStarPoint& b) {
                               return carrier_less(a, b);
                             });
  return it != points_.end() && carrier_eq(*it, p);
}

bool PointCloud::contains_all(const PointCloud& other) const {
  for (const MaxStarPoint& p : other.points())
    if (!contains(p)) return false;
  return true;
}

bool PointCloud::operator==(const PointCloud& o) const {
  if (dim_ != o.dim_ || points_.size() != o.points_.size()) return false;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!carrier_eq(points_[i], o.points_[i])) return false;
  return true;
}

std::string PointCloud::str() const {
  std::string out;
  for (const MaxStarPoint& p : points_) {
    if (!out.empty()) out += ' ';
    out += p.str();
  }
  return out;
}

MaxStarPoint combine(std::span<const MaxStarPoint> points,
                     std::span<const UnitValue> weights, const TNorm& op) {
  if (points.empty() || points.size() != weights.size())
    throw ValidationError("combine needs one weight per point");
  const std::size_t dim = points.front().dim();
  UnitValue top = weights.front();
  for (const UnitValue& w : weights) top = join(top, w);
  if (!top.is_one())
    throw ValidationError(
        fmt::format("combination weights must attain 1 (max is {})", top.str()));
  MaxStarPoint out;
  out.coords.assign(dim, UnitValue::zero(points.front().policy()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim)
      throw ValidationError("combined points must share the index set");
    for (std::size_t t = 0; t < dim; ++t)
      out.coords[t] = join(out.coords[t], op.apply(weights[i], points[i].coords[t]));
  }
  return out;
}

namespace {

struct GridContext {
  std::vector<UnitValue> lambdas; // all grid weights
  int resolution = 0;
};

GridContext require_grid(const PointCloud& c, const TNorm& op, const char* what) {
  if (!c.grid())
    throw GridClosureError(fmt::format("{} requires a grid-tagged cloud", what));
  if (!op.grid_closed(*c.grid()))
    throw GridClosureError(fmt::format(
        "{} requires a t-norm closed on the 1/{} grid; {} is not", what,
        *c.grid(), op.name()));
  return GridContext{grid_points(c.policy(), *c.grid()), *c.grid()};
}

MaxStarPoint binary_combine(const TNorm& op, const UnitValue& lambda,
                            const MaxStarPoint& a, const MaxStarPoint& b) {
  MaxStarPoint out;
  out.coords.reserve(a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t)
    out.coords.push_back(join(op.apply(lambda, a.coords[t]), b.coords[t]));
  return out;
}

bool sorted_contains(const std::vector<MaxStarPoint>& sorted, const MaxStarPoint& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p,
                             [](const MaxStarPoint& x, const MaxStarPoint& y) {
                               return carrier_less(x, y);
                             });
  return it != sorted.end() && carrier_eq(*it, p);
}

bool subset_convex(const std::vector<MaxStarPoint>& sorted, const TNorm& op,
                   const GridContext& ctx, std::string* witness) {
  for (const MaxStarPoint& a : sorted) {
    for (const MaxStarPoint& b : sorted) {
      for (const UnitValue& lambda : ctx.lambdas) {
        const MaxStarPoint combined = binary_combine(op, lambda, a, b);
        if (!sorted_contains(sorted, combined)) {
          if (witness)
            *witness = fmt::format("{}*{} v {} = {}", lambda.str(), a.str(), b.str(),
                                   combined.str());
          return false;
        }
      }
    }
  }
  return true;
}

// All barycenters of grid-weighted normal forms over `base`.
std::vector<MaxStarPoint> hull_points(const std::vector<MaxStarPoint>& base,
                                      const TNorm& op, const GridContext& ctx) {
  const std::size_t n = base.size();
  const std::size_t steps = ctx.lambdas.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(steps);
  if (total > 2.0e7)
    throw ResourceLimitError("hull enumeration over grid weights is too large");

  std::vector<MaxStarPoint> out;
  std::vector<std::size_t> odo(n, 0);
  const std::size_t top = steps - 1; // index of weight 1
  for (;;) {
    bool normalized = false;
    for (std::size_t i = 0; i < n; ++i)
      if (odo[i] == top) { normalized = true; break; }
    if (normalized) {
      MaxStarPoint p;
      p.coords.assign(base.front().dim(), UnitValue::zero(base.front().policy()));
      for (std::size_t i = 0; i < n; ++i) {
        const UnitValue& w = ctx.lambdas[odo[i]];
        for (std::size_t t = 0; t < p.coords.size(); ++t)
          p.coords[t] = join(p.coords[t], op.apply(w, base[i].coords[t]));
      }
      out.push_back(std::move(p));
    }
    std::size_t i = 0;
    while (i < n && ++odo[i] == steps) odo[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const MaxStarPoint& a, const MaxStarPoint& b) {
    return carrier_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const MaxStarPoint& a, const MaxStarPoint& b) {
                          return carrier_eq(a, b);
                        }),
            out.end());
  return out;
}

} // namespace

bool is_convex(const PointCloud& c, const TNorm& op) {
  const GridContext ctx = require_grid(c, op, "is_convex");
  return subset_convex(c.points(), op, ctx, nullptr);
}

std::optional<std::vector<UnitValue>> hull_membership(const MaxStarPoint& y,
                                                      const PointCloud& generators,
                                                      const TNorm& op) {
  if (y.dim() != generators.dim())
    throw ValidationError("query point and generators must share the index set");
  const std::size_t dim = y.dim();
  std::vector<UnitValue> weights;
  weights.reserve(generators.size());
  for (const MaxStarPoint& x : generators.points()) {
    // Greatest weight keeping w * x below y in every coordinate.
    UnitValue w = UnitValue::one(y.policy());
    for (std::size_t t = 0; t < dim; ++t)
      w = meet(w, op.implication(x.coords[t], y.coords[t]));
    weights.push_back(w);
  }
  UnitValue top = weights.front();
  for (const UnitValue& w : weights) top = join(top, w);
  if (!top.is_one()) return std::nullopt;
  const MaxStarPoint reproduced = combine(generators.points(), weights, op);
  if (!(reproduced == y)) return std::nullopt;
  return weights;
}

MaxStarPoint barycenter(const PointFormMeasure& mu, const TNorm& op) {
  const std::size_t dim = mu.entries().front().carrier.dim();
  for (const auto& e : mu.entries())
    if (e.carrier.dim() != dim)
      throw ValidationError("support points must share the index set");
  MaxStarPoint out;
  out.coords.reserve(dim);
  for (std::size_t t = 0; t < dim; ++t)
    out.coords.push_back(mu.evaluate_with(
        op, [&](const MaxStarPoint& p) { return p.coords[t]; }));
  return out;
}

PointCloud monad_hull(const PointCloud& a, const PointCloud& ambient, const TNorm& op) {
  if (a.dim() != ambient.dim())
    throw ValidationError("hull: generator and ambient index sets differ");
  if (!ambient.contains_all(a))
    throw ValidationError("hull: generators must lie inside the ambient cloud");
  const GridContext ctx = require_grid(ambient, op, "monad_hull");
  return PointCloud(hull_points(a.points(), op, ctx), ambient.grid());
}

CheckReport check_algebra_laws(const PointCloud& k, const TNorm& op,
                               std::span<const StarMeasure<PointFormMeasure>> nested) {
  CheckReport report;
  report.name = fmt::format("algebra-laws[{}]", op.name());

  for (const MaxStarPoint& x : k.points()) {
    ++report.checked;
    const MaxStarPoint back = barycenter(PointFormMeasure::dirac(x, x.policy()), op);
    if (!(back == x)) report.add("unit-law", x.str(), back.str(), x.str());
  }

  for (const auto& lambda : nested) {
    ++report.checked;
    const MaxStarPoint via_map = barycenter(
        lambda.map([&](const PointFormMeasure& inner) { return barycenter(inner, op); }),
        op);
    const MaxStarPoint via_mul = barycenter(multiply(lambda, op), op);
    if (!(via_map == via_mul))
      report.add("structure-map",
                 fmt::format("{} nested entries", lambda.support_size()),
                 via_map.str(), via_mul.str());
  }
  return report;
}

CheckReport check_convexity_equivalence(const PointCloud& k, const TNorm& op) {
  CheckReport report;
  report.name = fmt::format("convexity-equivalence[{}]", op.name());
  if (k.size() > 9)
    throw ResourceLimitError("subset enumeration is capped at 9 ambient points");
  const GridContext ctx = require_grid(k, op, "check_convexity_equivalence");

  const std::size_t n = k.size();
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    std::vector<MaxStarPoint> members;
    for (std::size_t i = 0; i < n; ++i)
      if ((subset >> i) & 1u) members.push_back(k[i]);

    ++report.checked;
    std::string witness;
    const bool convex = subset_convex(members, op, ctx, &witness);
    const std::vector<MaxStarPoint> hull = hull_points(members, op, ctx);
    bool fixed = hull.size() == members.size();
    for (std::size_t i = 0; fixed && i < hull.size(); ++i)
      fixed = carrier_eq(hull[i], members[i]);

    if (convex != fixed) {
      std::string set;
      for (const MaxStarPoint& p : members) set += p.str();
      report.add("hull-fixed-iff-convex", set,
                 fixed ? "hull fixes C" : "hull grows C",
                 convex ? fmt::format("convex") : fmt::format("not convex: {}", witness));
    }
  }
  return report;
}

} // namespace maxstar
