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

#include "phasekit/gaussian.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "phasekit/errors.hpp"

namespace phasekit {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

double checked_hbar(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw DomainError(fmt::format("hbar must be positive and finite, got {}", hbar));
  }
  return hbar;
}

void validate_window(const GaussianWindow& window) {
  const auto& x = window.x;
  const auto& y = window.y;
  if (x.rows() == 0 || x.rows() != x.cols() || y.rows() != x.rows() || y.cols() != x.cols()) {
    throw InvalidDimension(fmt::format("window blocks must be n×n, got X {}x{} and Y {}x{}",
                                       x.rows(), x.cols(), y.rows(), y.cols()));
  }
  const double sx = std::max(1.0, linalg::max_abs(x));
  const double sy = std::max(1.0, linalg::max_abs(y));
  if (linalg::max_abs(x - x.transpose()) > 1e-12 * sx) throw DomainError("window X is not symmetric");
  if (linalg::max_abs(y - y.transpose()) > 1e-12 * sy) throw DomainError("window Y is not symmetric");
  const double min_eig = linalg::min_eigenvalue(MatrixXd(0.5 * (x + x.transpose())));
  if (!(min_eig > 0.0)) {
    throw DomainError(fmt::format("window X is not positive definite (min eigenvalue {:.3e})", min_eig));
  }
}

double gaussian_wigner_eval(const GaussianState& state, const VectorXd& z) {
  const MatrixXd& sigma = state.sigma.matrix;
  linalg::require_phase_space_shape(sigma);
  if (z.size() != sigma.rows()) {
    throw InvalidDimension(fmt::format("point has {} coordinates, expected {}", z.size(), sigma.rows()));
  }
  Eigen::LLT<MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) throw DomainError("covariance matrix is singular or not positive definite");
  const int n = state.n();
  const VectorXd w = llt.matrixL().solve(z);
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  return std::exp(-0.5 * w.squaredNorm() - 0.5 * log_det -
                  n * std::log(2.0 * std::numbers::pi));
}

PositivityReport quantum_positivity(const GaussianState& state, double tol) {
  const double hbar = checked_hbar(state.hbar);
  const MatrixXd& sigma = state.sigma.matrix;
  linalg::require_phase_space_shape(sigma);
  const MatrixXd j = standard_symplectic_form(state.n(), state.sigma.ordering).matrix;
  const MatrixXcd h = sigma.cast<std::complex<double>>() +
                      std::complex<double>(0.0, 0.5 * hbar) * j.cast<std::complex<double>>();
  PositivityReport report;
  report.min_eig = linalg::min_eigenvalue(MatrixXcd(0.5 * (h + h.adjoint())));
  report.valid = report.min_eig >= -tol;
  return report;
}

bool lemma2_check(const GaussianState& state, const Tolerances& tol) {
  const double hbar = checked_hbar(state.hbar);
  return symplectic_eigenvalues(state.sigma, tol).min() >= 0.5 * hbar - tol.psd;
}

bool is_pure(const GaussianState& state, double tol) {
  const double hbar = checked_hbar(state.hbar);
  for (double lambda : symplectic_eigenvalues(state.sigma).values) {
    if (std::abs(lambda - 0.5 * hbar) > tol) return false;
  }
  return true;
}

CovarianceMatrix gaussian_convolve(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
    throw InvalidDimension(fmt::format("cannot convolve {}x{} with {}x{} covariances",
                                       a.matrix.rows(), a.matrix.cols(), b.matrix.rows(), b.matrix.cols()));
  }
  return CovarianceMatrix{a.matrix + reorder(b, a.ordering).matrix, a.ordering};
}

GaussianToeplitzSplit gaussian_toeplitz_decompose(const GaussianState& state, double margin,
                                                  const Tolerances& tol) {
  const double hbar = checked_hbar(state.hbar);
  const WilliamsonDecomposition w = williamson(state.sigma, tol);
  const double lambda_min = w.spectrum.min();
  if (!(lambda_min > 0.5 * hbar + margin)) {
    throw NotStrictlyToeplitz(fmt::format(
        "smallest symplectic eigenvalue {:.12g} is not above hbar/2 + margin = {:.12g}",
        lambda_min, 0.5 * hbar + margin));
  }
  const MatrixXd ss_t = w.s.matrix * w.s.matrix.transpose();

  GaussianToeplitzSplit out;
  out.s = w.s;
  out.sigma_window = CovarianceMatrix{0.5 * hbar * ss_t, state.sigma.ordering};
  out.sigma_mu = CovarianceMatrix{state.sigma.matrix - out.sigma_window.matrix, state.sigma.ordering};
  out.sigma_mu.matrix = 0.5 * (out.sigma_mu.matrix + out.sigma_mu.matrix.transpose());
  linalg::require_spd(out.sigma_mu.matrix, tol, "Toeplitz weight covariance");

  const MatrixXd ss_t_xp = reorder_matrix(ss_t, state.sigma.ordering, Ordering::kXpBlock);
  MatrixXd g = ss_t_xp.inverse();
  g = 0.5 * (g + g.transpose());
  out.window = window_from_gramian(g, tol);
  return out;
}

MatrixXd window_gramian(const GaussianWindow& window) {
  validate_window(window);
  const int n = window.n();
  const MatrixXd x_inv = window.x.inverse();
  const MatrixXd& y = window.y;
  MatrixXd g(2 * n, 2 * n);
  g.topLeftCorner(n, n) = window.x + y * x_inv * y;
  g.topRightCorner(n, n) = y * x_inv;
  g.bottomLeftCorner(n, n) = x_inv * y;
  g.bottomRightCorner(n, n) = x_inv;
  return 0.5 * (g + g.transpose());
}

GaussianWindow window_from_gramian(const MatrixXd& g, const Tolerances& tol) {
  linalg::require_spd(g, tol, "Gramian");
  const double scale = std::max(1.0, linalg::max_abs(g));
  const double residual = symplectic_residual(g);
  if (residual > tol.sym * scale * scale) {
    throw DomainError(fmt::format(
        "Gramian is not symplectic (residual {:.3e}); it is not the Gramian of any φ_{{X,Y}}",
        residual));
  }
  const int n = static_cast<int>(g.rows() / 2);
  GaussianWindow out;
  out.x = g.bottomRightCorner(n, n).inverse();
  out.x = 0.5 * (out.x + out.x.transpose());
  out.y = g.topRightCorner(n, n) * out.x;
  out.y = 0.5 * (out.y + out.y.transpose());
  validate_window(out);
  return out;
}

std::complex<double> gaussian_window_eval(const GaussianWindow& window, const VectorXd& x,
                                          double hbar) {
  checked_hbar(hbar);
  validate_window(window);
  const int n = window.n();
  if (x.size() != n) throw InvalidDimension(fmt::format("point has {} coordinates, expected {}", x.size(), n));
  const double norm = std::pow(std::numbers::pi * hbar, -0.25 * n) *
                      std::pow(window.x.determinant(), 0.25);
  const double re = x.dot(window.x * x);
  const double im = x.dot(window.y * x);
  return norm * std::exp(std::complex<double>(-re, -im) / (2.0 * hbar));
}

}  // namespace phasekit
