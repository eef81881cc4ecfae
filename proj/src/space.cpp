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

#include "maxstar/space.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

namespace maxstar {

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("a finite space needs at least one point");
  if (labels_.size() > kMaxSpaceSize)
    throw ValidationError(fmt::format("space size {} exceeds the enumeration bound {}",
                                      labels_.size(), kMaxSpaceSize));
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("point labels must be nonempty");
    if (!seen.insert(l).second)
      throw ValidationError(fmt::format("duplicate point label \"{}\"", l));
  }
}

FiniteSpace FiniteSpace::of_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(fmt::format("x{}", i));
  return FiniteSpace(std::move(labels));
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string FiniteSpace::format_mask(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!mask_contains(m, i)) continue;
    if (!first) out += ' ';
    out += labels_[i];
    first = false;
  }
  out += '}';
  return out;
}

PointMap::PointMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size())
    throw ValidationError("point map must assign every source point");
  for (std::size_t v : image_)
    if (v >= target_.size())
      throw ValidationError("point map image outside the target space");
}

PointMap PointMap::identity(const FiniteSpace& space) {
  std::vector<std::size_t> image(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) image[i] = i;
  return PointMap(space, space, std::move(image));
}

Mask PointMap::preimage(Mask target_subset) const {
  Mask out = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (mask_contains(target_subset, image_[i])) out |= singleton_mask(i);
  return out;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (!(f.target() == g.source()))
    throw ValidationError("composition needs matching intermediate spaces");
  std::vector<std::size_t> image(f.source().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = g(f(i));
  return PointMap(f.source(), g.target(), std::move(image));
}

} // namespace maxstar
