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

// Partial transposition and separability tests for Gaussian states on an
// A|B bipartition. Subsystem covariances (Σ_A, Σ_B, Δ_A, Δ_B) are always
// expressed per mode, (x_1, p_1, x_2, p_2, ...).

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "phasekit/gaussian.hpp"
#include "phasekit/grid.hpp"
#include "phasekit/symplectic.hpp"
#include "phasekit/tolerances.hpp"

namespace phasekit {

struct SplitSpec {
  int n_a = 1;
  int n_b = 1;

  int n() const { return n_a + n_b; }
  PhaseDim dim() const { return PhaseDim::bipartite(n_a, n_b); }
};

/// Throws InvalidDimension unless the split covers exactly `n` modes.
void require_split(const SplitSpec& split, int n);

/// M Σ M with M = partial_reflection_matrix in Σ's own ordering.
CovarianceMatrix partial_transpose_cov(const CovarianceMatrix& sigma, const SplitSpec& split);

struct PptReport {
  bool ppt = false;
  /// min eigenvalue of Σ̃ + (iħ/2)J for the transposed covariance Σ̃.
  double min_eig = 0.0;
  /// min symplectic eigenvalue of Σ̃ (entangled iff < ħ/2 for 1|1 splits).
  double min_symplectic = 0.0;
};

/// Positivity of the partial transpose. Throws DomainError if Σ itself is
/// not a quantum covariance. ppt = false proves entanglement.
PptReport ppt_check(const CovarianceMatrix& sigma, const SplitSpec& split, double hbar,
                    const Tolerances& tol = {});

struct CertificateCheck {
  bool valid = false;
  double min_eig_a = 0.0;     // Σ_A + (iħ/2)J_A
  double min_eig_b = 0.0;     // Σ_B + (iħ/2)J_B
  double min_eig_diff = 0.0;  // Σ − Σ_A ⊕ Σ_B
};

/// Σ_A + (iħ/2)J_A ⪰ 0, Σ_B + (iħ/2)J_B ⪰ 0 and Σ ⪰ Σ_A ⊕ Σ_B, each
/// within tol.psd. A valid result certifies separability.
CertificateCheck check_ww_certificate(const CovarianceMatrix& sigma, const Eigen::MatrixXd& sigma_a,
                                      const Eigen::MatrixXd& sigma_b, const SplitSpec& split,
                                      double hbar, const Tolerances& tol = {});

bool verify_ww_certificate(const CovarianceMatrix& sigma, const Eigen::MatrixXd& sigma_a,
                           const Eigen::MatrixXd& sigma_b, const SplitSpec& split, double hbar,
                           const Tolerances& tol = {});

struct SeparabilityCertificate {
  /// Symplectic rotation, xp-block.
  SymplecticMatrix u;
  /// Diagonals of Δ_A and Δ_B in per-mode ordering; each mode (λ, 1/λ).
  Eigen::VectorXd delta_a;
  Eigen::VectorXd delta_b;
  /// min eig(UΣUᵀ − (ħ/2)(Δ_A ⊕ Δ_B)).
  double residual_min_eig = 0.0;
  double hbar = 1.0;
  SplitSpec split;
  /// UΣUᵀ in xp-block ordering.
  CovarianceMatrix rotated;
};

/// Constructive disentangler: Σ₀ = (ħ/2)SSᵀ from Williamson, SSᵀ = UᵀΔU,
/// and UΣUᵀ ⪰ (ħ/2)Δ is a product bound.
SeparabilityCertificate disentangle_by_rotation(const CovarianceMatrix& sigma, const SplitSpec& split,
                                                double hbar, const Tolerances& tol = {});

/// Partial transpose of a Gaussian window: Wφ_{X,Y} ∘ Ī_B = Wφ_{X,Y′}.
/// Only product windows (X, Y block-diagonal across A|B) have a Gaussian
/// partial transpose; there Y′ = Y_AA ⊕ (−Y_BB). Other windows throw
/// DomainError.
GaussianWindow gaussian_window_partial_transpose(const GaussianWindow& window, const SplitSpec& split);

/// Sampled tensor window φ_A ⊗ conj(φ_B): entry (i, k) is
/// φ_A(x_i)·conj(φ_B(x_k)). Both factors must share one grid.
Eigen::MatrixXcd product_window_partial_transpose(const WaveFunction& phi_a,
                                                  const WaveFunction& phi_b);

/// Samples of φ_A ⊗ φ_B on the same product grid, for comparison.
Eigen::MatrixXcd product_window(const WaveFunction& phi_a, const WaveFunction& phi_b);

/// Two-mode squeezed vacuum (ħ/2)[[cI, sZ], [sZ, cI]], c = cosh 2r,
/// s = sinh 2r, Z = diag(1, −1), ab-interleaved.
CovarianceMatrix two_mode_squeezed(double r, double hbar);

}  // namespace phasekit
