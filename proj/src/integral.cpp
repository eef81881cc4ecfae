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

#include "maxstar/integral.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace maxstar {

Mask superlevel(const UnitFunction& f, const UnitValue& t) {
  Mask out = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].geq(t)) out |= singleton_mask(i);
  return out;
}

IntegralReport integrate(const Capacity& nu, const UnitFunction& f, const TNorm& op) {
  if (!(nu.space() == f.space()))
    throw ValidationError("integral: capacity and function live on different spaces");
  const Policy pol = f.policy();
  require_same_policy(nu.value(0), f.size() ? f[0] : nu.value(0));

  std::vector<UnitValue> thresholds(f.values());
  std::sort(thresholds.begin(), thresholds.end(),
            [](const UnitValue& a, const UnitValue& b) { return raw_less(a, b); });
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end(),
                               [](const UnitValue& a, const UnitValue& b) {
                                 return raw_eq(a, b);
                               }),
                   thresholds.end());

  // Threshold 0 contributes value(X) * 0 = 0 and seeds the scan.
  IntegralReport best{UnitValue::zero(pol), UnitValue::zero(pol), f.space().full_mask()};
  for (const UnitValue& t : thresholds) {
    if (raw_eq(t, UnitValue::zero(pol))) continue;
    const Mask level = superlevel(f, t);
    const UnitValue term = op.apply(nu.value(level), t);
    if (raw_less(best.value, term)) best = IntegralReport{term, t, level};
  }
  return best;
}

UnitValue integrate_value(const Capacity& nu, const UnitFunction& f, const TNorm& op) {
  return integrate(nu, f, op).value;
}

UnitValue integrate_possibility_fast(const PossibilityDistribution& d,
                                     const UnitFunction& f, const TNorm& op) {
  if (!(d.space() == f.space()))
    throw ValidationError("integral: density and function live on different spaces");
  UnitValue acc = UnitValue::zero(f.policy());
  for (std::size_t i = 0; i < f.size(); ++i)
    acc = join(acc, op.apply(d.density(i), f[i]));
  return acc;
}

bool comonotone(const UnitFunction& f, const UnitFunction& g) {
  if (!(f.space() == g.space()))
    throw ValidationError("comonotonicity needs a shared space");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i].lt(f[j]) && g[j].lt(g[i])) return false;
      if (f[j].lt(f[i]) && g[i].lt(g[j])) return false;
    }
  }
  return true;
}

CheckReport check_tstar_axioms(const Capacity& nu, const TNorm& op,
                               std::span<const UnitFunction> samples,
                               std::span<const UnitValue> constants) {
  CheckReport report;
  report.name = "tstar-axioms";
  const Policy pol = nu.policy();

  ++report.checked;
  const UnitValue top =
      integrate_value(nu, UnitFunction::constant(nu.space(), UnitValue::one(pol)), op);
  if (!top.is_one()) report.add("normalization", "f=1_X", top.str(), "1");

  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i; j < samples.size(); ++j) {
      const UnitFunction& f = samples[i];
      const UnitFunction& g = samples[j];
      if (!comonotone(f, g)) continue;
      ++report.checked;
      const UnitValue lhs = integrate_value(nu, pointwise_max(f, g), op);
      const UnitValue rhs = join(integrate_value(nu, f, op), integrate_value(nu, g, op));
      if (!lhs.eq(rhs))
        report.add("comonotone-max",
                   fmt::format("f={}, g={}", f.str(), g.str()), lhs.str(), rhs.str());
    }
  }

  for (const UnitValue& c : constants) {
    for (const UnitFunction& f : samples) {
      ++report.checked;
      const UnitValue lhs = integrate_value(nu, scale(op, c, f), op);
      const UnitValue rhs = op.apply(c, integrate_value(nu, f, op));
      if (!lhs.eq(rhs))
        report.add("homogeneity", fmt::format("c={}, f={}", c.str(), f.str()),
                   lhs.str(), rhs.str());
    }
  }
  return report;
}

bool is_star_measure(const Capacity& nu, const TNorm& op,
                     std::span<const std::pair<UnitFunction, UnitFunction>> pairs) {
  for (const auto& [f, g] : pairs) {
    const UnitValue lhs = integrate_value(nu, pointwise_max(f, g), op);
    const UnitValue rhs = join(integrate_value(nu, f, op), integrate_value(nu, g, op));
    if (!lhs.eq(rhs)) return false;
  }
  return true;
}

bool is_star_measure(const Capacity& nu, const TNorm& op) {
  const Policy pol = nu.policy();
  const Mask full = nu.space().full_mask();
  for (Mask a = 0; a <= full; ++a) {
    const UnitFunction fa = UnitFunction::indicator(nu.space(), a, pol);
    for (Mask b = a; b <= full; ++b) {
      const UnitFunction fb = UnitFunction::indicator(nu.space(), b, pol);
      const UnitValue lhs = integrate_value(nu, pointwise_max(fa, fb), op);
      const UnitValue rhs = join(integrate_value(nu, fa, op), integrate_value(nu, fb, op));
      if (!lhs.eq(rhs)) return false;
    }
  }
  return true;
}

namespace {

std::optional<std::pair<Mask, Mask>> minimal_union_violation(const Capacity& nu) {
  const FiniteSpace& space = nu.space();
  const Mask full = space.full_mask();
  for (std::size_t size = 2; size <= space.size(); ++size) {
    for (Mask m = 1; m <= full; ++m) {
      if (mask_size(m) != size) continue;
      UnitValue singletons = UnitValue::zero(nu.policy());
      for (std::size_t i = 0; i < space.size(); ++i)
        if (mask_contains(m, i)) singletons = join(singletons, nu.value(singleton_mask(i)));
      if (!nu.value(m).eq(singletons)) {
        const Mask x = m & (~m + 1); // lowest point of the violating set
        return std::make_pair(static_cast<Mask>(m ^ x), x);
      }
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<std::pair<UnitFunction, UnitFunction>>
characterization_witness(const Capacity& nu, const TNorm& op) {
  if (is_possibility(nu)) return std::nullopt;
  const FiniteSpace& space = nu.space();
  const Policy pol = nu.policy();

  auto verified = [&](Mask a, Mask b) -> bool {
    const UnitFunction fa = UnitFunction::indicator(space, a, pol);
    const UnitFunction fb = UnitFunction::indicator(space, b, pol);
    const UnitValue united = integrate_value(nu, pointwise_max(fa, fb), op);
    const UnitValue split = join(integrate_value(nu, fa, op), integrate_value(nu, fb, op));
    return split.lt(united);
  };

  // A minimal set violating singleton reconstruction splits into a verified
  // pair; under float tolerance fall back to the widest-margin pair.
  if (const auto split = minimal_union_violation(nu)) {
    const auto [a, b] = *split;
    if (verified(a, b))
      return std::make_pair(UnitFunction::indicator(space, a, pol),
                            UnitFunction::indicator(space, b, pol));
  }

  if (space.size() > 12)
    throw ResourceLimitError("witness pair search is capped at 12 points");
  const Mask full = space.full_mask();
  std::optional<std::pair<Mask, Mask>> best;
  double best_margin = 0.0;
  for (Mask a = 1; a <= full; ++a) {
    for (Mask b = a + 1; b <= full; ++b) {
      const double margin =
          nu.value(a | b).value() -
          std::max(nu.value(a).value(), nu.value(b).value());
      if (margin > best_margin) {
        best_margin = margin;
        best = std::make_pair(a, b);
      }
    }
  }
  if (best && verified(best->first, best->second))
    return std::make_pair(UnitFunction::indicator(space, best->first, pol),
                          UnitFunction::indicator(space, best->second, pol));
  return std::nullopt;
}

Capacity capacity_from_functional(
    const std::function<UnitValue(const UnitFunction&)>& mu,
    const FiniteSpace& space, const Policy& policy) {
  std::vector<UnitValue> values;
  values.reserve(space.subset_count());
  for (Mask m = 0; m <= space.full_mask(); ++m)
    values.push_back(mu(UnitFunction::indicator(space, m, policy)));
  const CheckReport report = Capacity::validate(space, values);
  if (!report.ok())
    throw ValidationError(fmt::format(
        "functional does not restrict to a capacity: {} ({} vs {})",
        report.counterexamples.front().input, report.counterexamples.front().lhs,
        report.counterexamples.front().rhs));
  return Capacity::unchecked(space, std::move(values));
}

} // namespace maxstar
