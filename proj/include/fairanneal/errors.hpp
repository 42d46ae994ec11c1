// Copyright 2026 The fairanneal Authors
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

#include <stdexcept>
#include <string>

namespace fairanneal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable category, e.g. "malformed-problem".
  virtual const char* kind() const noexcept { return "error"; }
};

class MalformedProblem : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "malformed-problem"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "size-limit"; }
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension-mismatch"; }
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "convergence"; }
};

/// Raised when the time integrator cannot meet its tolerances.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double norm_drift, double probability_change)
      : Error(what), norm_drift_(norm_drift), probability_change_(probability_change) {}
  const char* kind() const noexcept override { return "accuracy"; }
  double norm_drift() const noexcept { return norm_drift_; }
  double probability_change() const noexcept { return probability_change_; }

 private:
  double norm_drift_;
  double probability_change_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

class SchemaError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "schema"; }
};

}  // namespace fairanneal
