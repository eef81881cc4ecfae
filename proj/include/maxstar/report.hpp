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

#ifndef MAXSTAR_REPORT_HPP
#define MAXSTAR_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace maxstar {

/// One failed law instance: the inputs and both computed sides.
struct Counterexample {
  std::string law;
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Outcome of a law check: number of instances tried plus every violation.
/// An empty counterexample list means the check passed.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }

  void add(std::string law, std::string input, std::string lhs, std::string rhs) {
    counterexamples.push_back(
        {std::move(law), std::move(input), std::move(lhs), std::move(rhs)});
  }

  void merge(const CheckReport& other) {
    checked += other.checked;
    counterexamples.insert(counterexamples.end(),
                           other.counterexamples.begin(),
                           other.counterexamples.end());
  }

  std::string summary() const;
};

} // namespace maxstar

#endif
