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

// Seeded random generators for symplectic matrices, covariances and
// windows, shared by the self-test and the test suites.

#pragma once

#include <random>

#include <Eigen/Dense>

#include "phasekit/gaussian.hpp"
#include "phasekit/symplectic.hpp"

namespace phasekit::fixtures {

using Rng = std::mt19937_64;

/// Matrix with i.i.d. standard normal entries.
Eigen::MatrixXd gaussian_matrix(Rng& rng, int rows, int cols);

/// Random symmetric matrix with entries of size ~scale.
Eigen::MatrixXd random_symmetric(Rng& rng, int n, double scale);

/// Product diag(A, A⁻ᵀ)·[[I, 0], [C, I]]·[[I, B], [0, I]] with B, C
/// symmetric; `strength` sets the size of the random parts (xp-block).
Eigen::MatrixXd random_symplectic(Rng& rng, int n, double strength = 0.4);

/// S·diag(Λ, Λ)·Sᵀ with Λ drawn uniformly from [lambda_lo, lambda_hi].
CovarianceMatrix random_covariance_with_spectrum(Rng& rng, int n, double lambda_lo,
                                                 double lambda_hi, double strength = 0.4);

/// A·Aᵀ + ε·I with Gaussian A (generic SPD, not necessarily quantum).
CovarianceMatrix random_spd(Rng& rng, int n, double scale = 1.0, double eps = 0.05);

/// Window (X, Y) with X ⪰ 0.3·I; for n = 1, X ∈ [0.3, 3] and Y ∈ [−1.5, 1.5].
GaussianWindow random_window(Rng& rng, int n);

}  // namespace phasekit::fixtures
