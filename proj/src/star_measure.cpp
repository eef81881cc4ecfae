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

#include "maxstar/star_measure.hpp"

#include <fmt/format.h>

namespace maxstar {

UnitValue evaluate(const PointMeasure& mu, const UnitFunction& f, const TNorm& op) {
  for (const auto& e : mu.entries())
    if (e.carrier >= f.size())
      throw ValidationError("support point outside the function's space");
  return mu.evaluate_with(op, [&](std::size_t p) { return f[p]; });
}

PointMeasure functor_map(const PointMap& g, const PointMeasure& mu) {
  for (const auto& e : mu.entries())
    if (e.carrier >= g.source().size())
      throw ValidationError("support point outside the map's source space");
  return mu.map([&](std::size_t p) { return g(p); });
}

PointMeasure unit_measure(std::size_t point, const Policy& policy) {
  return PointMeasure::dirac(point, policy);
}

Mask support_mask(const PointMeasure& mu) {
  Mask m = 0;
  for (const auto& e : mu.entries()) {
    if (e.carrier >= kMaxSpaceSize)
      throw ValidationError("support point outside the subset range");
    m |= singleton_mask(e.carrier);
  }
  return m;
}

bool is_supported_on(const PointMeasure& mu, Mask k) {
  return (support_mask(mu) & ~k) == 0;
}

std::string format_measure(const PointMeasure& mu, const FiniteSpace& space) {
  std::string out;
  for (const auto& e : mu.entries()) {
    if (!out.empty()) out += " v ";
    out += fmt::format("{}@{}", e.weight.str(),
                       e.carrier < space.size() ? space.label(e.carrier) : "?");
  }
  return out;
}

} // namespace maxstar
