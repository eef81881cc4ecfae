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

#ifndef MAXSTAR_STAR_MEASURE_HPP
#define MAXSTAR_STAR_MEASURE_HPP

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "maxstar/function.hpp"
#include "maxstar/space.hpp"
#include "maxstar/tnorm.hpp"
#include "maxstar/unit_value.hpp"

namespace maxstar {

// Carrier ordering used for canonical forms.  Carriers are compared by raw
// numeric order so canonicalization is independent of comparison tolerance.
inline bool carrier_less(std::size_t a, std::size_t b) { return a < b; }
inline bool carrier_eq(std::size_t a, std::size_t b) { return a == b; }

/// Finite normal form of a max-preserving, *-homogeneous normalized
/// functional: a weighted join of point evaluations with weight maximum 1.
///
/// The carrier type is generic so the same representation serves base
/// measures (carriers are point indices), nested measures (carriers are
/// normal forms) and measures over coordinate vectors.  Entries are kept
/// canonical: sorted by carrier, distinct carriers, zero weights pruned.
template <typename P>
class StarMeasure {
public:
  struct Entry {
    UnitValue weight;
    P carrier;
  };

  explicit StarMeasure(std::vector<Entry> entries) : entries_(std::move(entries)) {
    canonicalize();
  }

  static StarMeasure dirac(P carrier, const Policy& policy) {
    std::vector<Entry> e;
    e.push_back({UnitValue::one(policy), std::move(carrier)});
    return StarMeasure(std::move(e));
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  const Policy& policy() const { return entries_.front().weight.policy(); }

  /// Joint evaluation: max over entries of weight * f(carrier).
  template <typename F>
  UnitValue evaluate_with(const TNorm& op, F&& f) const {
    UnitValue acc = UnitValue::zero(policy());
    for (const Entry& e : entries_) acc = join(acc, op.apply(e.weight, f(e.carrier)));
    return acc;
  }

  /// Functorial action: pushes every carrier through g; collisions keep
  /// the weight maximum.
  template <typename G>
  auto map(G&& g) const {
    using Q = std::decay_t<std::invoke_result_t<G, const P&>>;
    std::vector<typename StarMeasure<Q>::Entry> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back({e.weight, g(e.carrier)});
    return StarMeasure<Q>(std::move(out));
  }

  /// Canonical structural equality: identical supports, weights equal
  /// under the arithmetic policy.
  bool operator==(const StarMeasure& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!carrier_eq(entries_[i].carrier, o.entries_[i].carrier)) return false;
      if (!entries_[i].weight.eq(o.entries_[i].weight)) return false;
    }
    return true;
  }
  bool operator!=(const StarMeasure& o) const { return !(*this == o); }

  friend bool carrier_less(const StarMeasure& a, const StarMeasure& b) {
    const std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (carrier_less(a.entries_[i].carrier, b.entries_[i].carrier)) return true;
      if (carrier_less(b.entries_[i].carrier, a.entries_[i].carrier)) return false;
      if (raw_less(a.entries_[i].weight, b.entries_[i].weight)) return true;
      if (raw_less(b.entries_[i].weight, a.entries_[i].weight)) return false;
    }
    return a.entries_.size() < b.entries_.size();
  }
  friend bool carrier_eq(const StarMeasure& a, const StarMeasure& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (!carrier_eq(a.entries_[i].carrier, b.entries_[i].carrier)) return false;
      if (!raw_eq(a.entries_[i].weight, b.entries_[i].weight)) return false;
    }
    return true;
  }

private:
  void canonicalize() {
    if (entries_.empty())
      throw ValidationError("a normal form needs at least one entry");
    for (std::size_t i = 1; i < entries_.size(); ++i)
      require_same_policy(entries_.front().weight, entries_[i].weight);
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return carrier_less(a.carrier, b.carrier);
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (Entry& e : entries_) {
      if (!merged.empty() && carrier_eq(merged.back().carrier, e.carrier))
        merged.back().weight = join(merged.back().weight, e.weight);
      else
        merged.push_back(std::move(e));
    }
    const UnitValue zero = UnitValue::zero(merged.front().weight.policy());
    std::erase_if(merged, [&](const Entry& e) { return e.weight.eq(zero); });
    if (merged.empty())
      throw ValidationError("all weights vanish; normal forms must attain 1");
    UnitValue top = merged.front().weight;
    for (const Entry& e : merged) top = join(top, e.weight);
    if (!top.is_one())
      throw ValidationError("normal-form weights must attain 1 (max is " + top.str() + ")");
    entries_ = std::move(merged);
  }

  std::vector<Entry> entries_;
};

/// Monad multiplication on normal forms: weights multiply through the
/// levels, collided carriers keep the maximum.
template <typename P>
StarMeasure<P> multiply(const StarMeasure<StarMeasure<P>>& nested, const TNorm& op) {
  std::vector<typename StarMeasure<P>::Entry> out;
  for (const auto& outer : nested.entries())
    for (const auto& inner : outer.carrier.entries())
      out.push_back({op.apply(outer.weight, inner.weight), inner.carrier});
  return StarMeasure<P>(std::move(out));
}

/// Normal form over the points of a finite space.
using PointMeasure = StarMeasure<std::size_t>;

/// max over the support of weight * f(point).
UnitValue evaluate(const PointMeasure& mu, const UnitFunction& f, const TNorm& op);

/// Pushforward along a point map.
PointMeasure functor_map(const PointMap& g, const PointMeasure& mu);

/// The Dirac normal form at a point: evaluation there.
PointMeasure unit_measure(std::size_t point, const Policy& policy);

/// Bitmask of the (positive-weight) support.
Mask support_mask(const PointMeasure& mu);

/// Every positively weighted support point lies in K; equivalently the
/// measure vanishes on functions that vanish on K.
bool is_supported_on(const PointMeasure& mu, Mask k);

std::string format_measure(const PointMeasure& mu, const FiniteSpace& space);

} // namespace maxstar

#endif
