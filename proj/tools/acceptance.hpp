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

// The end-to-end acceptance suite. Every check compares library output with
// an independent oracle (closed form, brute-force eigensolver, direct
// quadrature) and records one pass/fail verdict with a measured figure.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace phasekit::acceptance {

struct Options {
  double hbar = 1.0;
  std::uint64_t seed = 42;
};

struct Result {
  /// "1" … "11"; companion checks use a suffix ("10-product").
  std::string id;
  std::string title;
  bool passed = false;
  /// Measured figures behind the verdict.
  std::string detail;
  double seconds = 0.0;
  /// Companion checks are reported but do not stand in for a criterion.
  bool companion = false;
};

/// One line per result: "PASS criterion 3: ... (detail) [0.41 s]".
std::string format_line(const Result& result);

/// Runs the numbered criteria 1–11 plus companion checks, reporting each
/// result to `sink` as soon as it is known.
std::vector<Result> run_all(const Options& options,
                            const std::function<void(const Result&)>& sink = {});

/// True iff every numbered (non-companion) result passed.
bool all_criteria_passed(const std::vector<Result>& results);

}  // namespace phasekit::acceptance
