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

#include "maxstar/possibility_monad.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace maxstar {

namespace {

bool density_raw_less(const PossibilityDistribution& a, const PossibilityDistribution& b) {
  for (std::size_t i = 0; i < a.densities().size(); ++i) {
    if (raw_less(a.density(i), b.density(i))) return true;
    if (raw_less(b.density(i), a.density(i))) return false;
  }
  return false;
}

bool density_raw_eq(const PossibilityDistribution& a, const PossibilityDistribution& b) {
  for (std::size_t i = 0; i < a.densities().size(); ++i)
    if (!raw_eq(a.density(i), b.density(i))) return false;
  return true;
}

} // namespace

OuterPossibility::OuterPossibility(FiniteSpace base, std::vector<Entry> entries)
    : base_(std::move(base)), entries_(std::move(entries)) {
  if (entries_.empty())
    throw ValidationError("an outer possibility needs at least one entry");
  for (const Entry& e : entries_) {
    if (!(e.dist.space() == base_))
      throw ValidationError("inner distributions must share the base space");
    require_same_policy(entries_.front().weight, e.weight);
    require_same_policy(e.weight, e.dist.density(0));
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return density_raw_less(a.dist, b.dist);
  });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (Entry& e : entries_) {
    if (!merged.empty() && density_raw_eq(merged.back().dist, e.dist))
      merged.back().weight = join(merged.back().weight, e.weight);
    else
      merged.push_back(std::move(e));
  }
  const UnitValue zero = UnitValue::zero(merged.front().weight.policy());
  std::erase_if(merged, [&](const Entry& e) { return e.weight.eq(zero); });
  if (merged.empty())
    throw ValidationError("all outer weights vanish");
  UnitValue top = merged.front().weight;
  for (const Entry& e : merged) top = join(top, e.weight);
  if (!top.is_one())
    throw ValidationError("outer weights must attain 1 (max is " + top.str() + ")");
  entries_ = std::move(merged);
}

OuterPossibility OuterPossibility::dirac(const PossibilityDistribution& nu) {
  std::vector<Entry> e;
  e.push_back({UnitValue::one(nu.policy()), nu});
  return OuterPossibility(nu.space(), std::move(e));
}

std::string OuterPossibility::str() const {
  std::string out;
  for (const Entry& e : entries_) {
    if (!out.empty()) out += " v ";
    out += fmt::format("{}*{}", e.weight.str(), e.dist.str());
  }
  return out;
}

OuterPossibility2::OuterPossibility2(FiniteSpace base, std::vector<Entry> entries)
    : base_(std::move(base)), entries_(std::move(entries)) {
  if (entries_.empty())
    throw ValidationError("a nested outer possibility needs at least one entry");
  UnitValue top = entries_.front().weight;
  for (const Entry& e : entries_) {
    if (!(e.outer.base() == base_))
      throw ValidationError("nested entries must share the base space");
    require_same_policy(entries_.front().weight, e.weight);
    top = join(top, e.weight);
  }
  if (!top.is_one())
    throw ValidationError("nested outer weights must attain 1");
}

PossibilityDistribution eta(const FiniteSpace& space, std::size_t point,
                            const Policy& policy) {
  return PossibilityDistribution::dirac(space, point, policy);
}

UnitValue mu_value(const OuterPossibility& c, Mask f, const TNorm& op) {
  UnitValue acc = UnitValue::zero(c.policy());
  for (const auto& e : c.entries()) acc = join(acc, op.apply(e.weight, e.dist.value(f)));
  return acc;
}

UnitValue mu_value_by_threshold(const OuterPossibility& c, Mask f, const TNorm& op) {
  // Candidate thresholds: the inner values nu_i(F).  Between consecutive
  // candidates c{nu : nu(F) >= t} is constant and t -> c(...) * t is
  // monotone, so the maximum sits on a candidate.
  std::vector<UnitValue> thresholds;
  thresholds.reserve(c.entries().size());
  for (const auto& e : c.entries()) thresholds.push_back(e.dist.value(f));
  std::sort(thresholds.begin(), thresholds.end(),
            [](const UnitValue& a, const UnitValue& b) { return raw_less(a, b); });
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end(),
                               [](const UnitValue& a, const UnitValue& b) {
                                 return raw_eq(a, b);
                               }),
                   thresholds.end());

  UnitValue best = UnitValue::zero(c.policy());
  for (const UnitValue& t : thresholds) {
    if (raw_eq(t, UnitValue::zero(c.policy()))) continue; // 0 * level = 0

    UnitValue level = UnitValue::zero(c.policy()); // c(F_t) on the finite support
    for (const auto& e : c.entries())
      if (!raw_less(e.dist.value(f), t)) level = join(level, e.weight);
    best = join(best, op.apply(level, t));
  }
  return best;
}

PossibilityDistribution mu_distribution(const OuterPossibility& c, const TNorm& op) {
  std::vector<UnitValue> density(c.base().size(), UnitValue::zero(c.policy()));
  for (std::size_t x = 0; x < c.base().size(); ++x)
    for (const auto& e : c.entries())
      density[x] = join(density[x], op.apply(e.weight, e.dist.density(x)));
  return PossibilityDistribution(c.base(), std::move(density));
}

Capacity mu_capacity(const OuterPossibility& c, const TNorm& op) {
  std::vector<UnitValue> values;
  values.reserve(c.base().subset_count());
  for (Mask m = 0; m <= c.base().full_mask(); ++m)
    values.push_back(mu_value(c, m, op));
  return Capacity::unchecked(c.base(), std::move(values));
}

OuterPossibility outer_multiplication(const OuterPossibility2& d, const TNorm& op) {
  std::vector<OuterPossibility::Entry> out;
  for (const auto& outer : d.entries())
    for (const auto& inner : outer.outer.entries())
      out.push_back({op.apply(outer.weight, inner.weight), inner.dist});
  return OuterPossibility(d.base(), std::move(out));
}

OuterPossibility map_multiplication(const OuterPossibility2& d, const TNorm& op) {
  std::vector<OuterPossibility::Entry> out;
  for (const auto& outer : d.entries())
    out.push_back({outer.weight, mu_distribution(outer.outer, op)});
  return OuterPossibility(d.base(), std::move(out));
}

PointMeasure iso_l(const PossibilityDistribution& nu) {
  std::vector<PointMeasure::Entry> entries;
  entries.reserve(nu.space().size());
  for (std::size_t x = 0; x < nu.space().size(); ++x)
    entries.push_back({nu.density(x), x});
  return PointMeasure(std::move(entries)); // zero densities are pruned
}

PossibilityDistribution iso_l_inverse(const PointMeasure& mu, const FiniteSpace& space) {
  std::vector<UnitValue> density(space.size(), UnitValue::zero(mu.policy()));
  for (const auto& e : mu.entries()) {
    if (e.carrier >= space.size())
      throw ValidationError("support point outside the space");
    density[e.carrier] = e.weight;
  }
  return PossibilityDistribution(space, std::move(density));
}

CheckReport check_monad_laws(std::span<const PossibilityDistribution> units,
                             std::span<const OuterPossibility2> nested,
                             const TNorm& op) {
  CheckReport report;
  report.name = fmt::format("monad-laws[{}]", op.name());

  for (const PossibilityDistribution& nu : units) {
    const Capacity expected = capacity_from_distribution(nu);

    ++report.checked;
    const Capacity right = mu_capacity(OuterPossibility::dirac(nu), op);
    if (!(right == expected))
      report.add("unit-right", nu.str(), right.str(), expected.str());

    // Pushing nu along the unit gives weight d(x) on the Dirac at x.
    std::vector<OuterPossibility::Entry> lifted;
    for (std::size_t x = 0; x < nu.space().size(); ++x)
      lifted.push_back({nu.density(x), eta(nu.space(), x, nu.policy())});
    ++report.checked;
    const Capacity left =
        mu_capacity(OuterPossibility(nu.space(), std::move(lifted)), op);
    if (!(left == expected))
      report.add("unit-left", nu.str(), left.str(), expected.str());
  }

  for (const OuterPossibility2& d : nested) {
    ++report.checked;
    const Capacity collapsed_outer = mu_capacity(outer_multiplication(d, op), op);
    const Capacity collapsed_inner = mu_capacity(map_multiplication(d, op), op);
    if (!(collapsed_outer == collapsed_inner))
      report.add("associativity", fmt::format("{} nested entries", d.entries().size()),
                 collapsed_outer.str(), collapsed_inner.str());
  }
  return report;
}

CheckReport check_morphism_laws(const FiniteSpace& space,
                                std::span<const OuterPossibility> instances,
                                const TNorm& op,
                                std::span<const UnitFunction> test_functions) {
  CheckReport report;
  report.name = fmt::format("morphism-laws[{}]", op.name());
  const Policy pol = test_functions.empty()
                         ? (instances.empty() ? Policy::float_tol() : instances[0].policy())
                         : test_functions[0].policy();

  for (std::size_t x = 0; x < space.size(); ++x) {
    ++report.checked;
    const PointMeasure lhs = iso_l(eta(space, x, pol));
    const PointMeasure rhs = unit_measure(x, pol);
    if (lhs != rhs)
      report.add("unit-square", fmt::format("point {}", space.label(x)),
                 format_measure(lhs, space), format_measure(rhs, space));
    for (const UnitFunction& f : test_functions) {
      ++report.checked;
      const UnitValue le = evaluate(lhs, f, op);
      const UnitValue re = evaluate(rhs, f, op);
      if (!le.eq(re))
        report.add("unit-square-eval",
                   fmt::format("point {}, f={}", space.label(x), f.str()), le.str(),
                   re.str());
    }
  }

  for (const OuterPossibility& c : instances) {
    const PointMeasure lhs = iso_l(mu_distribution(c, op));

    std::vector<StarMeasure<PointMeasure>::Entry> lifted;
    lifted.reserve(c.entries().size());
    for (const auto& e : c.entries()) lifted.push_back({e.weight, iso_l(e.dist)});
    const PointMeasure rhs = multiply(StarMeasure<PointMeasure>(std::move(lifted)), op);

    ++report.checked;
    if (lhs != rhs)
      report.add("multiplication-square", c.str(), format_measure(lhs, space),
                 format_measure(rhs, space));
    for (const UnitFunction& f : test_functions) {
      ++report.checked;
      const UnitValue le = evaluate(lhs, f, op);
      const UnitValue re = evaluate(rhs, f, op);
      if (!le.eq(re))
        report.add("multiplication-square-eval",
                   fmt::format("C={}, f={}", c.str(), f.str()), le.str(), re.str());
    }
  }
  return report;
}

} // namespace maxstar
