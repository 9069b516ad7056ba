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

#include <map>
#include <string>

namespace phasekit {

/// Named numerical tolerances. Every entry can be overridden from the CLI
/// with `--tol <name>=<value>`.
struct Tolerances {
  /// max |SᵀJS − J| accepted as symplectic.
  double sym = 1e-9;
  /// Relative reconstruction residual for Williamson and friends.
  double recon = 1e-8;
  /// Positive-definite threshold, relative to trace/2n.
  double pd_rel = 1e-12;
  /// Symmetry check for covariance input, relative to max |Σ|.
  double symmetric = 1e-10;
  /// Semidefiniteness slack for positivity and certificate checks.
  double psd = 1e-9;
  /// Strict-inequality margin for the Gaussian Toeplitz decomposition.
  double toeplitz_margin = 1e-10;
  /// Purity: symplectic eigenvalues within this of hbar/2.
  double purity = 1e-9;
  /// Grid numerics default.
  double numerics = 1e-6;
  /// Normalization of windows and densities.
  double norm = 1e-8;

  /// Sets a tolerance by name; returns false for an unknown name.
  bool set(const std::string& name, double value);
  std::map<std::string, double> as_map() const;
};

}  // namespace phasekit
