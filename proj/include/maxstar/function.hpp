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

#ifndef MAXSTAR_FUNCTION_HPP
#define MAXSTAR_FUNCTION_HPP

#include <vector>

#include "maxstar/space.hpp"
#include "maxstar/tnorm.hpp"
#include "maxstar/unit_value.hpp"

namespace maxstar {

/// A [0,1]-valued function on the points of a finite space.
class UnitFunction {
public:
  UnitFunction(FiniteSpace space, std::vector<UnitValue> values);

  static UnitFunction constant(const FiniteSpace& space, const UnitValue& c);
  static UnitFunction indicator(const FiniteSpace& space, Mask subset,
                                const Policy& policy);

  const FiniteSpace& space() const noexcept { return space_; }
  const Policy& policy() const { return values_.front().policy(); }
  std::size_t size() const noexcept { return values_.size(); }
  const UnitValue& operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<UnitValue>& values() const noexcept { return values_; }

  bool operator==(const UnitFunction& o) const;

  std::string str() const;

private:
  FiniteSpace space_;
  std::vector<UnitValue> values_;
};

/// Pointwise maximum.
UnitFunction pointwise_max(const UnitFunction& f, const UnitFunction& g);
/// Pointwise minimum.
UnitFunction pointwise_min(const UnitFunction& f, const UnitFunction& g);
/// Pointwise c * f(x).
UnitFunction scale(const TNorm& op, const UnitValue& c, const UnitFunction& f);
/// f <= g at every point.
bool pointwise_leq(const UnitFunction& f, const UnitFunction& g);

} // namespace maxstar

#endif
