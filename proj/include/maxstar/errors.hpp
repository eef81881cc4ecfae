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

#ifndef MAXSTAR_ERRORS_HPP
#define MAXSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxstar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Values with different arithmetic policies were combined.
class PolicyMismatchError : public Error {
public:
  using Error::Error;
};

/// An exact-grid operation would produce a value off the grid.
class GridClosureError : public Error {
public:
  using Error::Error;
};

/// A domain invariant was violated (construction or recovered data).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A numeric fallback did not reach its tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// Model text is not well formed.  Reports a 1-based source line.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace maxstar

#endif
