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

#include "phasekit/separability.hpp"

#include <cmath>

#include <fmt/format.h>

#include "phasekit/errors.hpp"
#include "phasekit/transforms.hpp"

namespace phasekit {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

void require_quantum(const CovarianceMatrix& sigma, double hbar, const Tolerances& tol) {
  const PositivityReport report = quantum_positivity(GaussianState{sigma, hbar}, tol.psd);
  if (!report.valid) {
    throw DomainError(fmt::format(
        "not a quantum covariance: min eig of Σ + (iħ/2)J is {:.6g} < -{:.1g}", report.min_eig,
        tol.psd));
  }
}

void require_square(const MatrixXd& m, int size, std::string_view what) {
  if (m.rows() != size || m.cols() != size) {
    throw InvalidDimension(
        fmt::format("{} must be {}×{}, got {}×{}", what, size, size, m.rows(), m.cols()));
  }
}

}  // namespace

void require_split(const SplitSpec& split, int n) {
  if (split.n_a < 1 || split.n_b < 1 || split.n() != n) {
    throw InvalidDimension(
        fmt::format("split ({}, {}) does not cover n = {} modes", split.n_a, split.n_b, n));
  }
}

CovarianceMatrix partial_transpose_cov(const CovarianceMatrix& sigma, const SplitSpec& split) {
  linalg::require_phase_space_shape(sigma.matrix);
  require_split(split, sigma.n());
  const MatrixXd m = partial_reflection_matrix(split.dim(), sigma.ordering);
  return CovarianceMatrix{m * sigma.matrix * m, sigma.ordering};
}

PptReport ppt_check(const CovarianceMatrix& sigma, const SplitSpec& split, double hbar,
                    const Tolerances& tol) {
  require_quantum(sigma, hbar, tol);
  const CovarianceMatrix transposed = partial_transpose_cov(sigma, split);
  const PositivityReport positivity =
      quantum_positivity(GaussianState{transposed, hbar}, tol.psd);
  PptReport report;
  report.ppt = positivity.valid;
  report.min_eig = positivity.min_eig;
  report.min_symplectic = symplectic_eigenvalues(transposed, tol).min();
  return report;
}

CertificateCheck check_ww_certificate(const CovarianceMatrix& sigma, const MatrixXd& sigma_a,
                                      const MatrixXd& sigma_b, const SplitSpec& split,
                                      double hbar, const Tolerances& tol) {
  linalg::require_phase_space_shape(sigma.matrix);
  require_split(split, sigma.n());
  require_square(sigma_a, 2 * split.n_a, "Σ_A");
  require_square(sigma_b, 2 * split.n_b, "Σ_B");
  const MatrixXd full = reorder(sigma, Ordering::kAbInterleaved).matrix;

  CertificateCheck check;
  check.min_eig_a =
      quantum_positivity(GaussianState{{sigma_a, Ordering::kAbInterleaved}, hbar}, tol.psd).min_eig;
  check.min_eig_b =
      quantum_positivity(GaussianState{{sigma_b, Ordering::kAbInterleaved}, hbar}, tol.psd).min_eig;
  const MatrixXd diff = full - linalg::direct_sum(sigma_a, sigma_b);
  check.min_eig_diff = linalg::min_eigenvalue(MatrixXd(0.5 * (diff + diff.transpose())));
  check.valid = check.min_eig_a >= -tol.psd && check.min_eig_b >= -tol.psd &&
                check.min_eig_diff >= -tol.psd;
  return check;
}

bool verify_ww_certificate(const CovarianceMatrix& sigma, const MatrixXd& sigma_a,
                           const MatrixXd& sigma_b, const SplitSpec& split, double hbar,
                           const Tolerances& tol) {
  return check_ww_certificate(sigma, sigma_a, sigma_b, split, hbar, tol).valid;
}

SeparabilityCertificate disentangle_by_rotation(const CovarianceMatrix& sigma,
                                                const SplitSpec& split, double hbar,
                                                const Tolerances& tol) {
  linalg::require_phase_space_shape(sigma.matrix);
  require_split(split, sigma.n());
  require_quantum(sigma, hbar, tol);
  const CovarianceMatrix xp = reorder(sigma, Ordering::kXpBlock);
  const int n = xp.n();

  // Σ ⪰ Σ₀ = (ħ/2)SSᵀ and SSᵀ = UᵀΔU, so UΣUᵀ ⪰ (ħ/2)Δ, a product of
  // one-mode pure states.
  const WilliamsonDecomposition w = williamson(xp, tol);
  const MatrixXd p = w.s.matrix * w.s.matrix.transpose();
  const PdsDiagonalization pds = diagonalize_pds(0.5 * (p + p.transpose()), tol);
  const MatrixXd& u = pds.u.matrix;

  SeparabilityCertificate cert;
  cert.u = pds.u;
  cert.hbar = hbar;
  cert.split = split;
  cert.rotated = CovarianceMatrix{u * xp.matrix * u.transpose(), Ordering::kXpBlock};
  cert.rotated.matrix = 0.5 * (cert.rotated.matrix + cert.rotated.matrix.transpose()).eval();
  cert.delta_a.resize(2 * split.n_a);
  cert.delta_b.resize(2 * split.n_b);
  for (int k = 0; k < n; ++k) {
    VectorXd& target = k < split.n_a ? cert.delta_a : cert.delta_b;
    const int local = k < split.n_a ? k : k - split.n_a;
    target(2 * local) = pds.delta(k);
    target(2 * local + 1) = pds.delta(n + k);
  }
  const MatrixXd gap = cert.rotated.matrix - 0.5 * hbar * MatrixXd(pds.delta.asDiagonal());
  cert.residual_min_eig = linalg::min_eigenvalue(gap);
  return cert;
}

GaussianWindow gaussian_window_partial_transpose(const GaussianWindow& window,
                                                 const SplitSpec& split) {
  validate_window(window);
  require_split(split, window.n());
  const int a = split.n_a;
  const int b = split.n_b;
  const double scale = std::max({1.0, window.x.cwiseAbs().maxCoeff(), window.y.cwiseAbs().maxCoeff()});
  const double coupling = std::max(window.x.topRightCorner(a, b).cwiseAbs().maxCoeff(),
                                   window.y.topRightCorner(a, b).cwiseAbs().maxCoeff());
  if (coupling > 1e-12 * scale) {
    throw DomainError(fmt::format(
        "window couples A and B (max |X_AB|, |Y_AB| = {:.3g}); its partial transpose is not a "
        "generalized Gaussian",
        coupling));
  }
  GaussianWindow out = window;
  out.y.bottomRightCorner(b, b) *= -1.0;
  return out;
}

Eigen::MatrixXcd product_window(const WaveFunction& phi_a, const WaveFunction& phi_b) {
  require_same_grid(phi_a, phi_b);
  return phi_a.samples * phi_b.samples.transpose();
}

Eigen::MatrixXcd product_window_partial_transpose(const WaveFunction& phi_a,
                                                  const WaveFunction& phi_b) {
  require_same_grid(phi_a, phi_b);
  return phi_a.samples * phi_b.samples.adjoint();
}

CovarianceMatrix two_mode_squeezed(double r, double hbar) {
  checked_hbar(hbar);
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  MatrixXd m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix{0.5 * hbar * m, Ordering::kAbInterleaved};
}

}  // namespace phasekit
