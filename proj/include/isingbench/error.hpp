// Copyright 2026 The isingbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isingbench {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or configuration (bad sizes, inverted bounds, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A state or assignment does not match the model it is evaluated against.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A coefficient lies outside the model's admissible energy range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A problem is larger than the configured work cap of an exact method.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A metric is mathematically undefined for the given inputs.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}
  double estimate() const { return estimate_; }
  double error_estimate() const { return error_; }

 private:
  double estimate_;
  double error_;
};

// An external solver process failed or produced unusable output.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace isingbench
