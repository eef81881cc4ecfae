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

#include "maxstar/report.hpp"

#include <fmt/format.h>

namespace maxstar {

std::string CheckReport::summary() const {
  std::string out = fmt::format("{}: {} ({} instances checked)", name,
                                ok() ? "pass" : "FAIL", checked);
  for (const Counterexample& c : counterexamples)
    out += fmt::format("\n  [{}] {} :: {} != {}", c.law, c.input, c.lhs, c.rhs);
  return out;
}

} // namespace maxstar
