// Copyright 2026 The Phasekit Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace phasekit {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong matrix shape, odd phase-space dimension, n = 0, split mismatch.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (not positive
/// definite, not symplectic, not quantum-valid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation called without a required piece of context (e.g. no split).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Numerical precondition failed (unnormalized window, negative density,
/// off-grid displacement, mismatched grids).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Gaussian state with a symplectic eigenvalue at or below hbar/2 + margin.
class NotStrictlyToeplitz : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Accuracy warnings are collected rather than thrown. Functions that can
/// detect a loss of accuracy take an optional sink.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message) {
  if (sink != nullptr) sink->push_back(std::move(message));
}

}  // namespace phasekit
