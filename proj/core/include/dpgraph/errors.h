//
// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPGRAPH_ERRORS_H_
#define DPGRAPH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpgraph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (mismatched node counts, negative
// epsilon, too few samples, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A linear-domain quantity that would overflow double precision.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Work that exceeds a configured cap (e.g. exhaustive enumeration).
class ResourceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A spectral accuracy metric that is undefined for the given input, e.g. the
// relative error of a disconnected graph's spectrum.
class MetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpgraph

#endif  // DPGRAPH_ERRORS_H_
