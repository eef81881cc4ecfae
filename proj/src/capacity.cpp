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

#include "maxstar/capacity.hpp"

#include <fmt/format.h>

namespace maxstar {

namespace {

void require_uniform_policy(const std::vector<UnitValue>& values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    require_same_policy(values.front(), values[i]);
}

} // namespace

Capacity::Capacity(FiniteSpace space, std::vector<UnitValue> values, Unchecked)
    : space_(std::move(space)), values_(std::move(values)) {}

Capacity::Capacity(FiniteSpace space, std::vector<UnitValue> values)
    : Capacity(std::move(space), std::move(values), Unchecked{}) {
  const CheckReport report = validate(space_, values_);
  if (!report.ok())
    throw ValidationError(
        fmt::format("not a capacity: {}", report.counterexamples.front().input));
}

Capacity Capacity::unchecked(FiniteSpace space, std::vector<UnitValue> values) {
  return Capacity(std::move(space), std::move(values), Unchecked{});
}

CheckReport Capacity::validate(const FiniteSpace& space,
                               const std::vector<UnitValue>& values) {
  CheckReport report;
  report.name = "capacity-axioms";
  if (values.size() != space.subset_count()) {
    report.add("table-size",
               fmt::format("expected {} entries, got {}", space.subset_count(),
                           values.size()),
               "", "");
    return report;
  }
  require_uniform_policy(values);
  const Policy pol = values.front().policy();

  ++report.checked;
  if (!values[0].eq(UnitValue::zero(pol)))
    report.add("normalization", "value({}) must be 0", values[0].str(), "0");
  ++report.checked;
  if (!values[space.full_mask()].eq(UnitValue::one(pol)))
    report.add("normalization",
               fmt::format("value({}) must be 1", space.format_mask(space.full_mask())),
               values[space.full_mask()].str(), "1");

  // Monotonicity along covering pairs F < F + {x} implies the full order.
  for (Mask m = 0; m <= space.full_mask(); ++m) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (mask_contains(m, i)) continue;
      const Mask up = m | singleton_mask(i);
      ++report.checked;
      if (!values[m].leq(values[up]))
        report.add("monotonicity",
                   fmt::format("{} subset of {}", space.format_mask(m),
                               space.format_mask(up)),
                   values[m].str(), values[up].str());
    }
  }
  return report;
}

bool Capacity::operator==(const Capacity& o) const {
  if (!(space_ == o.space_)) return false;
  for (Mask m = 0; m <= space_.full_mask(); ++m)
    if (!values_[m].eq(o.values_[m])) return false;
  return true;
}

std::string Capacity::str() const {
  std::string out;
  for (Mask m = 0; m <= space_.full_mask(); ++m) {
    if (m) out += ' ';
    out += fmt::format("{}={}", space_.format_mask(m), values_[m].str());
  }
  return out;
}

PossibilityDistribution::PossibilityDistribution(FiniteSpace space,
                                                 std::vector<UnitValue> density)
    : space_(std::move(space)), density_(std::move(density)) {
  if (density_.size() != space_.size())
    throw ValidationError("density must assign every point");
  require_uniform_policy(density_);
  UnitValue top = density_.front();
  for (const auto& v : density_) top = join(top, v);
  if (!top.is_one())
    throw ValidationError(
        fmt::format("density does not attain 1 (max is {})", top.str()));
}

PossibilityDistribution PossibilityDistribution::dirac(const FiniteSpace& space,
                                                       std::size_t point,
                                                       const Policy& policy) {
  if (point >= space.size()) throw ValidationError("dirac point outside the space");
  std::vector<UnitValue> d(space.size(), UnitValue::zero(policy));
  d[point] = UnitValue::one(policy);
  return PossibilityDistribution(space, std::move(d));
}

UnitValue PossibilityDistribution::value(Mask subset) const {
  UnitValue acc = UnitValue::zero(policy());
  for (std::size_t i = 0; i < space_.size(); ++i)
    if (mask_contains(subset, i)) acc = join(acc, density_[i]);
  return acc;
}

bool PossibilityDistribution::operator==(const PossibilityDistribution& o) const {
  if (!(space_ == o.space_)) return false;
  for (std::size_t i = 0; i < density_.size(); ++i)
    if (!density_[i].eq(o.density_[i])) return false;
  return true;
}

std::string PossibilityDistribution::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < density_.size(); ++i) {
    if (i) out += ", ";
    out += density_[i].str();
  }
  return out + ")";
}

Capacity capacity_from_distribution(const PossibilityDistribution& d) {
  const std::size_t n = d.space().size();
  std::vector<UnitValue> values(d.space().subset_count(), UnitValue::zero(d.policy()));
  for (Mask m = 1; m <= d.space().full_mask(); ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    (void)n;
    values[m] = join(values[m & (m - 1)], d.density(low));
  }
  return Capacity::unchecked(d.space(), std::move(values));
}

bool is_possibility(const Capacity& nu) {
  const FiniteSpace& space = nu.space();
  for (Mask m = 1; m <= space.full_mask(); ++m) {
    UnitValue singletons = UnitValue::zero(nu.policy());
    for (std::size_t i = 0; i < space.size(); ++i)
      if (mask_contains(m, i)) singletons = join(singletons, nu.value(singleton_mask(i)));
    if (!nu.value(m).eq(singletons)) return false;
  }
  return true;
}

bool is_necessity(const Capacity& nu) {
  // A = intersection of the co-singletons over the complement of A, so on a
  // finite space it is enough that value(A) = min over x outside A of
  // value(X minus {x}).
  const FiniteSpace& space = nu.space();
  const Mask full = space.full_mask();
  for (Mask m = 0; m < full; ++m) {
    UnitValue cosingletons = UnitValue::one(nu.policy());
    for (std::size_t i = 0; i < space.size(); ++i)
      if (!mask_contains(m, i))
        cosingletons = meet(cosingletons, nu.value(full ^ singleton_mask(i)));
    if (!nu.value(m).eq(cosingletons)) return false;
  }
  return true;
}

std::optional<PossibilityDistribution> distribution_of(const Capacity& nu) {
  if (!is_possibility(nu)) return std::nullopt;
  std::vector<UnitValue> density;
  density.reserve(nu.space().size());
  for (std::size_t i = 0; i < nu.space().size(); ++i)
    density.push_back(nu.value(singleton_mask(i)));
  return PossibilityDistribution(nu.space(), std::move(density));
}

Capacity dual(const Capacity& nu) {
  const Mask full = nu.space().full_mask();
  std::vector<UnitValue> values(nu.space().subset_count(), UnitValue::zero(nu.policy()));
  for (Mask m = 0; m <= full; ++m) values[m] = nu.value(full ^ m).complement();
  return Capacity::unchecked(nu.space(), std::move(values));
}

Capacity pushforward(const PointMap& f, const Capacity& nu) {
  if (!(f.source() == nu.space()))
    throw ValidationError("pushforward: map source must match the capacity space");
  std::vector<UnitValue> values(f.target().subset_count(), UnitValue::zero(nu.policy()));
  for (Mask a = 0; a <= f.target().full_mask(); ++a)
    values[a] = nu.value(f.preimage(a));
  return Capacity::unchecked(f.target(), std::move(values));
}

PossibilityDistribution pushforward(const PointMap& f, const PossibilityDistribution& d) {
  if (!(f.source() == d.space()))
    throw ValidationError("pushforward: map source must match the density space");
  std::vector<UnitValue> out(f.target().size(), UnitValue::zero(d.policy()));
  for (std::size_t i = 0; i < d.space().size(); ++i)
    out[f(i)] = join(out[f(i)], d.density(i));
  return PossibilityDistribution(f.target(), std::move(out));
}

} // namespace maxstar
