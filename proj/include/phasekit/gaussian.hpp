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

// Centered Gaussian phase-space distributions
//
//   ρ_Σ(z) = (2π)^{-n} (det Σ)^{-1/2} exp(-½ Σ⁻¹z·z)
//
// and the operator-level facts about (2πħ)^n Op_W(ρ_Σ): positivity,
// purity, and the split ρ_Σ = ρ_{Σ″} ∗ W(Ŝφ₀) that makes it a Toeplitz
// density operator. Generalized Gaussian windows φ_{X,Y} live here too.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "phasekit/symplectic.hpp"
#include "phasekit/tolerances.hpp"

namespace phasekit {

/// Throws DomainError unless hbar > 0 and finite.
double checked_hbar(double hbar);

struct GaussianState {
  CovarianceMatrix sigma;
  double hbar = 1.0;

  int n() const { return sigma.n(); }
};

/// φ_{X,Y}(x) = (πħ)^{-n/4} (det X)^{1/4} exp(-(X + iY)x·x / 2ħ).
struct GaussianWindow {
  Eigen::MatrixXd x;
  Eigen::MatrixXd y;

  int n() const { return static_cast<int>(x.rows()); }
};

void validate_window(const GaussianWindow& window);

/// ρ_Σ at z (z given in the state's ordering).
double gaussian_wigner_eval(const GaussianState& state, const Eigen::VectorXd& z);

struct PositivityReport {
  bool valid = false;
  /// Smallest eigenvalue of the Hermitian matrix Σ + (iħ/2)J.
  double min_eig = 0.0;
};

PositivityReport quantum_positivity(const GaussianState& state, double tol);

/// min symplectic eigenvalue ≥ ħ/2 − tol.psd.
bool lemma2_check(const GaussianState& state, const Tolerances& tol = {});

bool is_pure(const GaussianState& state, double tol);

/// ρ_{Σ′} ∗ ρ_{Σ″} = ρ_{Σ′+Σ″}. The result uses the ordering of `a`.
CovarianceMatrix gaussian_convolve(const CovarianceMatrix& a, const CovarianceMatrix& b);

struct GaussianToeplitzSplit {
  /// Σ″ = Σ − Σ₀, the covariance of the Toeplitz weight μ = ρ_{Σ″}.
  CovarianceMatrix sigma_mu;
  /// Σ₀ = (ħ/2) S Sᵀ, the covariance of W(Ŝφ₀).
  CovarianceMatrix sigma_window;
  /// Williamson symplectic matrix of Σ.
  SymplecticMatrix s;
  /// φ_{X,Y} with Wφ_{X,Y} = ρ_{Σ₀}, i.e. Gramian G = (S Sᵀ)⁻¹.
  GaussianWindow window;
};

/// Requires every symplectic eigenvalue > ħ/2 + margin; throws
/// NotStrictlyToeplitz otherwise (the pure boundary case is refused).
GaussianToeplitzSplit gaussian_toeplitz_decompose(const GaussianState& state, double margin,
                                                  const Tolerances& tol = {});

/// G = [[X + YX⁻¹Y, YX⁻¹], [X⁻¹Y, X⁻¹]] (xp-block).
/// Wφ_{X,Y}(z) = (πħ)^{-n} exp(-Gz·z / ħ).
Eigen::MatrixXd window_gramian(const GaussianWindow& window);

/// Inverse of window_gramian: X = G_pp⁻¹, Y = G_xp G_pp⁻¹.
GaussianWindow window_from_gramian(const Eigen::MatrixXd& g, const Tolerances& tol = {});

std::complex<double> gaussian_window_eval(const GaussianWindow& window,
                                          const Eigen::VectorXd& x, double hbar);

}  // namespace phasekit
