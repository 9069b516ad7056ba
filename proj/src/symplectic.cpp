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

#include "phasekit/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <fmt/format.h>

#include "phasekit/errors.hpp"

namespace phasekit {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string_view to_string(Ordering ordering) {
  return ordering == Ordering::kXpBlock ? "xp-block" : "ab-interleaved";
}

Ordering parse_ordering(std::string_view text) {
  if (text == "xp-block") return Ordering::kXpBlock;
  if (text == "ab-interleaved") return Ordering::kAbInterleaved;
  throw ParseError(fmt::format("unknown ordering '{}'", text));
}

PhaseDim PhaseDim::modes(int n) {
  if (n < 1) throw InvalidDimension(fmt::format("mode count must be >= 1, got {}", n));
  return PhaseDim{n, std::nullopt};
}

PhaseDim PhaseDim::bipartite(int n_a, int n_b) {
  if (n_a < 1 || n_b < 1) {
    throw InvalidDimension(
        fmt::format("split ({}, {}) must have both parts >= 1", n_a, n_b));
  }
  return PhaseDim{n_a + n_b, std::make_pair(n_a, n_b)};
}

int PhaseDim::n_a() const {
  if (!split) throw UsageError("phase dimension has no A|B split");
  return split->first;
}

int PhaseDim::n_b() const {
  if (!split) throw UsageError("phase dimension has no A|B split");
  return split->second;
}

double SymplecticSpectrum::min() const {
  return *std::min_element(values.begin(), values.end());
}

double SymplecticSpectrum::max() const {
  return *std::max_element(values.begin(), values.end());
}

namespace linalg {

double max_abs(const MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const MatrixXd& symmetric) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(symmetric, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double min_eigenvalue(const MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

MatrixXd spd_sqrt(const MatrixXd& spd) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(spd);
  return es.eigenvectors() *
         es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

MatrixXd direct_sum(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out = MatrixXd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

void require_phase_space_shape(const MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw InvalidDimension(fmt::format(
        "expected a square matrix of even size, got {}x{}", m.rows(), m.cols()));
  }
}

void require_spd(const MatrixXd& m, const Tolerances& tol, std::string_view what) {
  require_phase_space_shape(m);
  const double scale = std::max(max_abs(m), 1e-300);
  const double asym = max_abs(m - m.transpose());
  if (asym > tol.symmetric * scale) {
    throw DomainError(fmt::format("{} is not symmetric (max asymmetry {:.3e})", what, asym));
  }
  const MatrixXd sym = 0.5 * (m + m.transpose());
  const double min_eig = min_eigenvalue(sym);
  const double threshold = tol.pd_rel * sym.trace() / static_cast<double>(m.rows());
  if (!(min_eig > threshold) || !(sym.trace() > 0.0)) {
    throw DomainError(fmt::format(
        "{} is not positive definite (min eigenvalue {:.3e}, threshold {:.3e})",
        what, min_eig, threshold));
  }
}

}  // namespace linalg

SymplecticForm standard_symplectic_form(int n, Ordering ordering) {
  if (n < 1) throw InvalidDimension(fmt::format("n must be >= 1, got {}", n));
  MatrixXd j = MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    if (ordering == Ordering::kXpBlock) {
      j(k, n + k) = 1.0;
      j(n + k, k) = -1.0;
    } else {
      j(2 * k, 2 * k + 1) = 1.0;
      j(2 * k + 1, 2 * k) = -1.0;
    }
  }
  return SymplecticForm{n, std::move(j)};
}

double symplectic_residual(const MatrixXd& s, Ordering ordering) {
  linalg::require_phase_space_shape(s);
  const MatrixXd j = standard_symplectic_form(static_cast<int>(s.rows() / 2), ordering).matrix;
  return linalg::max_abs(s.transpose() * j * s - j);
}

bool is_symplectic(const MatrixXd& s, double tol, Ordering ordering) {
  return symplectic_residual(s, ordering) <= tol;
}

namespace {

MatrixXd to_xp(const CovarianceMatrix& sigma) {
  return reorder_matrix(sigma.matrix, sigma.ordering, Ordering::kXpBlock);
}

// Normal form of K = Σ^{1/2} J Σ^{1/2}: an orthogonal R with
// Rᵀ K R = [[0, Λ], [-Λ, 0]], Λ decreasing. Built from the positive
// eigenvectors w = a + ib of the Hermitian matrix iK, for which
// K a = λ b and K b = -λ a.
struct SkewNormalForm {
  MatrixXd sqrt_sigma;
  MatrixXd r;
  VectorXd lambda;
};

SkewNormalForm skew_normal_form(const MatrixXd& sigma_xp) {
  const int n = static_cast<int>(sigma_xp.rows() / 2);
  const MatrixXd sym = 0.5 * (sigma_xp + sigma_xp.transpose());
  SkewNormalForm out;
  out.sqrt_sigma = linalg::spd_sqrt(sym);
  const MatrixXd j = standard_symplectic_form(n).matrix;
  const MatrixXd k = out.sqrt_sigma * j * out.sqrt_sigma;
  const MatrixXcd ik = std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(ik);

  out.r = MatrixXd::Zero(2 * n, 2 * n);
  out.lambda = VectorXd::Zero(n);
  for (int m = 0; m < n; ++m) {
    // eigenvalues ascend; the positive half sits at the end.
    const int col = 2 * n - 1 - m;
    out.lambda(m) = es.eigenvalues()(col);
    const Eigen::VectorXcd w = es.eigenvectors().col(col);
    out.r.col(m) = std::sqrt(2.0) * w.imag();
    out.r.col(n + m) = std::sqrt(2.0) * w.real();
  }
  return out;
}

}  // namespace

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma,
                                          const Tolerances& tol) {
  linalg::require_spd(sigma.matrix, tol, "covariance matrix");
  const SkewNormalForm form = skew_normal_form(to_xp(sigma));
  SymplecticSpectrum spectrum;
  spectrum.values.assign(form.lambda.data(), form.lambda.data() + form.lambda.size());
  return spectrum;
}

MatrixXd WilliamsonDecomposition::normal_form() const {
  const int n = static_cast<int>(spectrum.values.size());
  VectorXd d(2 * n);
  for (int k = 0; k < n; ++k) {
    d(k) = spectrum.values[k];
    d(n + k) = spectrum.values[k];
  }
  return reorder_matrix(MatrixXd(d.asDiagonal()), Ordering::kXpBlock, ordering);
}

WilliamsonDecomposition williamson(const CovarianceMatrix& sigma, const Tolerances& tol) {
  linalg::require_spd(sigma.matrix, tol, "covariance matrix");
  const int n = sigma.n();
  const SkewNormalForm form = skew_normal_form(to_xp(sigma));

  VectorXd inv_sqrt_d(2 * n);
  for (int k = 0; k < n; ++k) {
    inv_sqrt_d(k) = 1.0 / std::sqrt(form.lambda(k));
    inv_sqrt_d(n + k) = inv_sqrt_d(k);
  }
  // S = Σ^{1/2} R D^{-1/2}: S D Sᵀ = Σ and SᵀJS = D^{-1/2}(DJ)D^{-1/2} = J.
  const MatrixXd s_xp = form.sqrt_sigma * form.r * inv_sqrt_d.asDiagonal();

  WilliamsonDecomposition out;
  out.s.matrix = reorder_matrix(s_xp, Ordering::kXpBlock, sigma.ordering);
  out.spectrum.values.assign(form.lambda.data(), form.lambda.data() + n);
  out.ordering = sigma.ordering;
  return out;
}

PdsDiagonalization diagonalize_pds(const MatrixXd& p, const Tolerances& tol) {
  linalg::require_spd(p, tol, "matrix");
  const int n = static_cast<int>(p.rows() / 2);
  const double scale = std::max(1.0, linalg::max_abs(p));
  const double residual = symplectic_residual(p);
  if (residual > tol.sym * scale * scale) {
    throw DomainError(fmt::format("matrix is not symplectic (residual {:.3e})", residual));
  }
  const MatrixXd j = standard_symplectic_form(n).matrix;
  const MatrixXd sym = 0.5 * (p + p.transpose());
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym);
  const VectorXd& w = es.eigenvalues();
  const MatrixXd& v = es.eigenvectors();

  // Eigenvalues pair as (λ, 1/λ) with eigenvectors v and Jv. Walk clusters
  // from the top: every cluster above 1 contributes all of its vectors, the
  // cluster at 1 contributes half (a basis orthogonal to its own J-image).
  // Inside a cluster we take projections of the standard basis, largest
  // first, so diagonal inputs come back with U = I.
  constexpr double kClusterLogTol = 1e-7;
  std::vector<VectorXd> chosen;
  int hi = 2 * n - 1;
  while (hi >= 0 && static_cast<int>(chosen.size()) < n) {
    int lo = hi;
    while (lo > 0 && std::abs(std::log(w(lo - 1)) - std::log(w(hi))) <= kClusterLogTol) --lo;
    const int size = hi - lo + 1;
    const double log_mid = 0.5 * (std::log(w(lo)) + std::log(w(hi)));
    int quota = 0;
    if (log_mid > kClusterLogTol) {
      quota = size;
    } else if (std::abs(log_mid) <= kClusterLogTol) {
      quota = (size + 1) / 2;
    }
    quota = std::min(quota, n - static_cast<int>(chosen.size()));
    const MatrixXd basis = v.middleCols(lo, size);
    for (int q = 0; q < quota; ++q) {
      VectorXd best;
      double best_norm = -1.0;
      for (int i = 0; i < 2 * n; ++i) {
        VectorXd cand = basis * basis.transpose().col(i);
        for (const VectorXd& m : chosen) {
          cand -= m.dot(cand) * m;
          const VectorXd jm = j * m;
          cand -= jm.dot(cand) * jm;
        }
        const double norm = cand.norm();
        if (norm > best_norm + 1e-12) {
          best_norm = norm;
          best = cand;
        }
      }
      if (best_norm < 1e-8) {
        throw DomainError("failed to build a symplectic eigenbasis (degenerate pairing)");
      }
      chosen.push_back(best / best_norm);
    }
    hi = lo - 1;
  }
  if (static_cast<int>(chosen.size()) != n) {
    throw DomainError("eigenvalues of the matrix do not pair as (λ, 1/λ)");
  }

  // Columns of Uᵀ: m_k and -J m_k (so that Uᵀ commutes with J).
  MatrixXd ut(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    ut.col(k) = chosen[k];
    ut.col(n + k) = -(j * chosen[k]);
  }
  PdsDiagonalization out;
  out.u.matrix = ut.transpose();
  out.delta = (out.u.matrix * sym * ut).diagonal();
  return out;
}

std::vector<int> ordering_permutation(int n, Ordering from, Ordering to) {
  std::vector<int> perm(2 * n);
  for (int i = 0; i < 2 * n; ++i) perm[i] = i;
  if (from == to) return perm;
  // xp-block -> ab-interleaved: target 2k <- x_k, target 2k+1 <- p_k.
  std::vector<int> xp_to_ab(2 * n);
  for (int k = 0; k < n; ++k) {
    xp_to_ab[2 * k] = k;
    xp_to_ab[2 * k + 1] = n + k;
  }
  if (from == Ordering::kXpBlock) return xp_to_ab;
  for (int i = 0; i < 2 * n; ++i) perm[xp_to_ab[i]] = i;
  return perm;
}

MatrixXd reorder_matrix(const MatrixXd& m, Ordering from, Ordering to) {
  linalg::require_phase_space_shape(m);
  if (from == to) return m;
  const std::vector<int> perm =
      ordering_permutation(static_cast<int>(m.rows() / 2), from, to);
  MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) out(i, k) = m(perm[i], perm[k]);
  }
  return out;
}

CovarianceMatrix reorder(const CovarianceMatrix& sigma, Ordering target) {
  return CovarianceMatrix{reorder_matrix(sigma.matrix, sigma.ordering, target), target};
}

MatrixXd partial_reflection_matrix(const PhaseDim& dim, Ordering ordering) {
  if (!dim.split) throw UsageError("partial reflection needs an A|B split");
  const int n = dim.n;
  const int n_a = dim.n_a();
  if (n_a + dim.n_b() != n) {
    throw InvalidDimension(fmt::format("split ({}, {}) does not sum to n = {}", n_a, dim.n_b(), n));
  }
  VectorXd d = VectorXd::Ones(2 * n);
  for (int k = n_a; k < n; ++k) {
    d(ordering == Ordering::kXpBlock ? n + k : 2 * k + 1) = -1.0;
  }
  return d.asDiagonal();
}

}  // namespace phasekit
