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

#ifndef MAXSTAR_SPACE_HPP
#define MAXSTAR_SPACE_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxstar/errors.hpp"

namespace maxstar {

/// Subsets of a finite space, one bit per point.
using Mask = std::uint32_t;

constexpr std::size_t kMaxSpaceSize = 20; // enumeration bound: 2^20 subsets

inline bool mask_contains(Mask m, std::size_t i) {
  return (m >> i) & 1u;
}
inline Mask singleton_mask(std::size_t i) { return Mask{1} << i; }
inline std::size_t mask_size(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

/// A finite discrete space: an ordered list of distinct point labels.
class FiniteSpace {
public:
  explicit FiniteSpace(std::vector<std::string> labels);

  /// Convenience space with labels x0, x1, ...
  static FiniteSpace of_size(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Mask full_mask() const noexcept {
    return static_cast<Mask>((std::uint64_t{1} << labels_.size()) - 1);
  }
  std::size_t subset_count() const noexcept {
    return std::size_t{1} << labels_.size();
  }

  /// "{a b}" in point order; "{}" for the empty set.
  std::string format_mask(Mask m) const;

  bool operator==(const FiniteSpace& o) const noexcept { return labels_ == o.labels_; }

private:
  std::vector<std::string> labels_;
};

/// A total map between finite spaces, stored point by point.
class PointMap {
public:
  PointMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> image);

  static PointMap identity(const FiniteSpace& space);

  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  /// Mask of source points mapped into the target subset.
  Mask preimage(Mask target_subset) const;

  friend PointMap compose(const PointMap& g, const PointMap& f); // g after f

private:
  FiniteSpace source_;
  FiniteSpace target_;
  std::vector<std::size_t> image_;
};

} // namespace maxstar

#endif
