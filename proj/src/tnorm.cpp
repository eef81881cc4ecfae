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

#include "maxstar/tnorm.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace maxstar {

TNorm TNorm::minimum() { return TNorm(TNormKind::Minimum, "min"); }
TNorm TNorm::product() { return TNorm(TNormKind::Product, "product"); }
TNorm TNorm::lukasiewicz() { return TNorm(TNormKind::Lukasiewicz, "lukasiewicz"); }

TNorm TNorm::from_table(int resolution, std::vector<double> nodes, bool validate) {
  if (resolution < 1) throw ValidationError("table resolution must be >= 1");
  const std::size_t side = static_cast<std::size_t>(resolution) + 1;
  if (nodes.size() != side * side)
    throw ValidationError(fmt::format("table needs {} nodes, got {}",
                                      side * side, nodes.size()));
  auto at = [&](int i, int j) -> double {
    return nodes[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)];
  };
  if (validate) {
    const int m = resolution;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        const double v = at(i, j);
        if (!(v >= 0.0 && v <= 1.0))
          throw ValidationError(fmt::format("table node ({},{}) = {} outside [0,1]", i, j, v));
        if (std::fabs(v - at(j, i)) > 1e-12)
          throw ValidationError(fmt::format("table not symmetric at ({},{})", i, j));
        if (j > 0 && at(i, j - 1) > v + 1e-15)
          throw ValidationError(fmt::format("table decreasing at ({},{})", i, j));
        if (i > 0 && at(i - 1, j) > v + 1e-15)
          throw ValidationError(fmt::format("table decreasing at ({},{})", i, j));
      }
      if (std::fabs(at(i, m) - static_cast<double>(i) / m) > 1e-9)
        throw ValidationError(fmt::format("table violates the unit axiom at ({},{})", i, m));
    }
  }
  TNorm op(TNormKind::Table, fmt::format("table({})", resolution));
  op.table_n_ = resolution;
  op.table_ = std::move(nodes);
  return op;
}

TNorm TNorm::by_name(std::string_view name) {
  if (name == "min" || name == "minimum") return minimum();
  if (name == "product" || name == "prod") return product();
  if (name == "lukasiewicz" || name == "luka") return lukasiewicz();
  throw ValidationError(fmt::format("unknown t-norm \"{}\"", name));
}

bool TNorm::grid_closed(int n) const {
  switch (kind_) {
    case TNormKind::Minimum:
    case TNormKind::Lukasiewicz:
      return true;
    case TNormKind::Product:
      return false;
    case TNormKind::Table: {
      if (table_n_ != n) return false;
      for (double v : table_)
        if (std::fabs(v * n - std::round(v * n)) > 1e-9 * n) return false;
      return true;
    }
  }
  return false;
}

double TNorm::table_lookup_raw(double a, double b) const {
  const int m = table_n_;
  const double x = a * m;
  const double y = b * m;
  const int i = std::min(static_cast<int>(x), m - 1);
  const int j = std::min(static_cast<int>(y), m - 1);
  const double fx = x - i;
  const double fy = y - j;
  const std::size_t side = static_cast<std::size_t>(m) + 1;
  auto at = [&](int r, int c) -> double {
    return table_[static_cast<std::size_t>(r) * side + static_cast<std::size_t>(c)];
  };
  return (1 - fx) * (1 - fy) * at(i, j) + fx * (1 - fy) * at(i + 1, j) +
         (1 - fx) * fy * at(i, j + 1) + fx * fy * at(i + 1, j + 1);
}

double TNorm::apply_raw(double a, double b) const {
  switch (kind_) {
    case TNormKind::Minimum: return std::min(a, b);
    case TNormKind::Product: return a * b;
    case TNormKind::Lukasiewicz: return std::max(0.0, a + b - 1.0);
    case TNormKind::Table: return table_lookup_raw(a, b);
  }
  return 0.0;
}

UnitValue TNorm::grid_apply(const UnitValue& a, const UnitValue& b) const {
  const Policy& pol = a.policy();
  switch (kind_) {
    case TNormKind::Minimum:
      return meet(a, b);
    case TNormKind::Lukasiewicz:
      return UnitValue::from_numerator(
          std::max<std::int64_t>(0, a.numerator() + b.numerator() - pol.grid_n), pol);
    case TNormKind::Table: {
      const std::size_t side = static_cast<std::size_t>(table_n_) + 1;
      const double v = table_[static_cast<std::size_t>(a.numerator()) * side +
                              static_cast<std::size_t>(b.numerator())];
      return UnitValue::from_double(v, pol);
    }
    default:
      throw GridClosureError("not grid closed");
  }
}

UnitValue TNorm::apply(const UnitValue& a, const UnitValue& b) const {
  require_same_policy(a, b);
  const Policy& pol = a.policy();
  if (pol.is_exact()) {
    if (!grid_closed(pol.grid_n))
      throw GridClosureError(fmt::format(
          "t-norm {} does not map the 1/{} grid into itself", name_, pol.grid_n));
    return grid_apply(a, b);
  }
  return UnitValue::from_double(
      std::clamp(apply_raw(a.value(), b.value()), 0.0, 1.0), pol);
}

std::optional<UnitValue> TNorm::residuum(const UnitValue& t, const UnitValue& l) const {
  require_same_policy(t, l);
  if (!t.leq(l)) return std::nullopt;
  const Policy& pol = t.policy();
  const UnitValue zero = UnitValue::zero(pol);
  if (t.eq(zero)) return zero; // every s satisfies s * l >= 0
  switch (kind_) {
    case TNormKind::Minimum:
      return t;
    case TNormKind::Lukasiewicz:
      if (pol.is_exact())
        return UnitValue::from_numerator(pol.grid_n - l.numerator() + t.numerator(), pol);
      return UnitValue::from_double(
          std::clamp(1.0 - l.value() + t.value(), 0.0, 1.0), pol);
    case TNormKind::Product: {
      // t > 0 and t <= l, hence l > 0
      if (pol.is_exact()) {
        const std::int64_t num = t.numerator() * pol.grid_n;
        if (num % l.numerator() != 0)
          throw GridClosureError(
              fmt::format("residuum b({}, {}) leaves the 1/{} grid",
                          t.str(), l.str(), pol.grid_n));
        return UnitValue::from_numerator(num / l.numerator(), pol);
      }
      return UnitValue::from_double(std::min(1.0, t.value() / l.value()), pol);
    }
    case TNormKind::Table: {
      if (pol.is_exact()) {
        if (!grid_closed(pol.grid_n))
          throw GridClosureError("table residuum requires a grid-closed table");
        for (std::int64_t k = 0; k <= pol.grid_n; ++k) {
          const UnitValue s = UnitValue::from_numerator(k, pol);
          if (t.leq(apply(s, l))) return s;
        }
        return std::nullopt; // unreachable for valid tables: 1 * l = l >= t
      }
      double lo = 0.0, hi = 1.0; // invariant: hi * l >= t
      for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (apply_raw(mid, l.value()) >= t.value()) hi = mid; else lo = mid;
      }
      if (std::fabs(apply_raw(hi, l.value()) - t.value()) > 1e-6)
        throw ConvergenceError("residuum bisection did not reach its tolerance");
      return UnitValue::from_double(hi, pol);
    }
  }
  return std::nullopt;
}

UnitValue TNorm::implication(const UnitValue& l, const UnitValue& t) const {
  require_same_policy(l, t);
  const Policy& pol = l.policy();
  if (l.leq(t)) return UnitValue::one(pol); // 1 * l = l <= t
  // t < l from here on, so l > 0
  switch (kind_) {
    case TNormKind::Minimum:
      return t;
    case TNormKind::Lukasiewicz:
      if (pol.is_exact())
        return UnitValue::from_numerator(pol.grid_n - l.numerator() + t.numerator(), pol);
      return UnitValue::from_double(
          std::clamp(1.0 - l.value() + t.value(), 0.0, 1.0), pol);
    case TNormKind::Product: {
      if (pol.is_exact()) {
        const std::int64_t num = t.numerator() * pol.grid_n;
        if (num % l.numerator() != 0)
          throw GridClosureError(
              fmt::format("implication ({} -> {}) leaves the 1/{} grid",
                          l.str(), t.str(), pol.grid_n));
        return UnitValue::from_numerator(num / l.numerator(), pol);
      }
      return UnitValue::from_double(std::min(1.0, t.value() / l.value()), pol);
    }
    case TNormKind::Table: {
      if (pol.is_exact()) {
        if (!grid_closed(pol.grid_n))
          throw GridClosureError("table implication requires a grid-closed table");
        for (std::int64_t k = pol.grid_n; k >= 0; --k) {
          const UnitValue s = UnitValue::from_numerator(k, pol);
          if (apply(s, l).leq(t)) return s;
        }
        return UnitValue::zero(pol);
      }
      double lo = 0.0, hi = 1.0; // invariant: lo * l <= t
      for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (apply_raw(mid, l.value()) <= t.value()) lo = mid; else hi = mid;
      }
      return UnitValue::from_double(lo, pol);
    }
  }
  return UnitValue::zero(pol);
}

std::vector<UnitValue> grid_points(const Policy& policy, int resolution) {
  std::vector<UnitValue> out;
  if (policy.is_exact()) {
    out.reserve(static_cast<std::size_t>(policy.grid_n) + 1);
    for (std::int64_t k = 0; k <= policy.grid_n; ++k)
      out.push_back(UnitValue::from_numerator(k, policy));
    return out;
  }
  if (resolution < 1)
    throw ValidationError("grid_points under a float policy needs a resolution");
  out.reserve(static_cast<std::size_t>(resolution) + 1);
  for (int k = 0; k <= resolution; ++k)
    out.push_back(UnitValue::from_double(
        static_cast<double>(k) / resolution, policy));
  return out;
}

CheckReport check_tnorm_axioms(const TNorm& op, std::span<const UnitValue> values) {
  CheckReport report;
  report.name = fmt::format("tnorm-axioms[{}]", op.name());
  if (values.empty()) return report;
  const Policy pol = values.front().policy();
  const UnitValue one = UnitValue::one(pol);

  for (const UnitValue& v : values) {
    ++report.checked;
    const UnitValue r = op.apply(v, one);
    if (!r.eq(v))
      report.add("unit", fmt::format("s={}", v.str()), r.str(), v.str());
  }
  for (const UnitValue& t : values) {
    for (const UnitValue& s : values) {
      ++report.checked;
      const UnitValue a = op.apply(t, s);
      const UnitValue b = op.apply(s, t);
      if (!a.eq(b))
        report.add("commutativity", fmt::format("t={}, s={}", t.str(), s.str()),
                   a.str(), b.str());
      for (const UnitValue& l : values) {
        ++report.checked;
        const UnitValue left = op.apply(op.apply(t, s), l);
        const UnitValue right = op.apply(t, op.apply(s, l));
        if (!left.eq(right))
          report.add("associativity",
                     fmt::format("t={}, s={}, l={}", t.str(), s.str(), l.str()),
                     left.str(), right.str());
        if (t.leq(s)) {
          const UnitValue tl = op.apply(t, l);
          const UnitValue sl = op.apply(s, l);
          if (!tl.leq(sl))
            report.add("monotonicity",
                       fmt::format("t={} <= s={}, l={}", t.str(), s.str(), l.str()),
                       tl.str(), sl.str());
        }
      }
    }
  }
  return report;
}

CheckReport check_distributivity(const TNorm& op, std::span<const UnitValue> values) {
  CheckReport report;
  report.name = fmt::format("distributivity[{}]", op.name());
  for (const UnitValue& t : values) {
    for (const UnitValue& s : values) {
      for (const UnitValue& l : values) {
        ++report.checked;
        const UnitValue left = op.apply(join(t, s), l);
        const UnitValue right = join(op.apply(t, l), op.apply(s, l));
        if (!left.eq(right))
          report.add("distributivity",
                     fmt::format("t={}, s={}, l={}", t.str(), s.str(), l.str()),
                     left.str(), right.str());
      }
    }
  }
  return report;
}

CheckReport check_residuation(const TNorm& op, std::span<const UnitValue> values) {
  CheckReport report;
  report.name = fmt::format("residuation[{}]", op.name());
  for (const UnitValue& t : values) {
    for (const UnitValue& l : values) {
      const auto b = op.residuum(t, l);
      if (!t.leq(l)) {
        ++report.checked;
        if (b.has_value())
          report.add("residuum-domain",
                     fmt::format("t={} > l={}", t.str(), l.str()),
                     b->str(), "no-solution");
        continue;
      }
      if (!b.has_value()) {
        report.add("residuum-domain", fmt::format("t={} <= l={}", t.str(), l.str()),
                   "no-solution", "defined");
        continue;
      }
      ++report.checked;
      const UnitValue lb = op.apply(*b, l);
      if (!lb.eq(t))
        report.add("l*b(t,l)=t", fmt::format("t={}, l={}", t.str(), l.str()),
                   lb.str(), t.str());
      for (const UnitValue& k : values) {
        ++report.checked;
        const UnitValue kl = op.apply(k, l);
        if (t.policy().is_exact()) {
          if (kl.geq(t) != k.geq(*b))
            report.add("adjunction",
                       fmt::format("k={}, l={}, t={}, b={}", k.str(), l.str(),
                                   t.str(), b->str()),
                       kl.geq(t) ? "k*l>=t" : "k*l<t",
                       k.geq(*b) ? "k>=b" : "k<b");
        } else {
          if (t.lt(kl) && k.lt(*b))
            report.add("adjunction",
                       fmt::format("k={}, l={}, t={}, b={}", k.str(), l.str(),
                                   t.str(), b->str()),
                       "k*l>t", "k<b");
          if (b->lt(k) && kl.lt(t))
            report.add("adjunction",
                       fmt::format("k={}, l={}, t={}, b={}", k.str(), l.str(),
                                   t.str(), b->str()),
                       "k>b", "k*l<t");
        }
      }
    }
  }
  return report;
}

} // namespace maxstar
