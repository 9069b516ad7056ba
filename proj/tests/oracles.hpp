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

// Independent reference computations for the unit tests: hand-built forms,
// general eigensolvers, literal double sums and closed forms. None of these
// call the library routine they are used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "phasekit/grid.hpp"

namespace oracle {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using std::numbers::pi;
using cd = std::complex<double>;

inline MatrixXd j_xp(int n) {
  MatrixXd j = MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(k, n + k) = 1.0;
    j(n + k, k) = -1.0;
  }
  return j;
}

/// Moduli of the eigenvalues of JΣ (xp-block), decreasing.
inline std::vector<double> symplectic_spectrum(const MatrixXd& sigma) {
  const int n = static_cast<int>(sigma.rows() / 2);
  Eigen::EigenSolver<MatrixXd> solver(j_xp(n) * sigma);
  std::vector<double> out;
  for (int i = 0; i < 2 * n; ++i) {
    if (solver.eigenvalues()(i).imag() > 0.0) out.push_back(std::abs(solver.eigenvalues()(i)));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.eval().cwiseAbs().maxCoeff();
}

inline double min_eig(const MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> s(0.5 * (h + h.adjoint()));
  return s.eigenvalues().minCoeff();
}

/// W(ψ,φ)(X_h, p_k) = (2πħ)^{-1} Σ_{j+l=h} e^{−ip_k(x_j−x_l)/ħ} ψ_j conj(φ_l)·2dx
/// as a literal double loop over the symbol grid.
inline MatrixXcd cross_wigner(const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi,
                              const phasekit::Grid1D& g, double hbar) {
  const int n = g.n;
  const double dp = pi * hbar / (n * g.dx);
  MatrixXcd w = MatrixXcd::Zero(2 * n, n);
  for (int h = 0; h < 2 * n; ++h) {
    for (int k = 0; k < n; ++k) {
      const double p = (k - n / 2) * dp;
      cd sum = 0.0;
      for (int l = 0; l < n; ++l) {
        const int j = h - l;
        if (j < 0 || j >= n) continue;
        sum += std::polar(1.0, -p * (g.at(j) - g.at(l)) / hbar) * psi(j) * std::conj(phi(l));
      }
      w(h, k) = sum * 2.0 * g.dx / (2.0 * pi * hbar);
    }
  }
  return w;
}

/// T̂(x0, p0)ψ with x0 = shift·dx, written out directly.
inline Eigen::VectorXcd translate(const Eigen::VectorXcd& psi, const phasekit::Grid1D& g, int shift,
                                  double p0, double hbar) {
  const int n = g.n;
  const double x0 = shift * g.dx;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int j = 0; j < n; ++j) {
    const int s = j - shift;
    if (s >= 0 && s < n) out(j) = std::polar(1.0, (p0 * g.at(j) - 0.5 * p0 * x0) / hbar) * psi(s);
  }
  return out;
}

/// Σ_{z0} a(z0)|T̂(z0)φ⟩⟨T̂(z0)φ| dx dp over the quadrature grid, literally.
inline MatrixXcd toeplitz(const MatrixXd& a, const Eigen::VectorXcd& phi, const phasekit::Grid1D& g,
                          double hbar) {
  const int n = g.n;
  const double dp = pi * hbar / (n * g.dx);
  MatrixXcd k = MatrixXcd::Zero(n, n);
  for (int j0 = 0; j0 < n; ++j0) {
    for (int kk = 0; kk < n; ++kk) {
      const Eigen::VectorXcd v = translate(phi, g, j0 - n / 2, (kk - n / 2) * dp, hbar);
      k += a(j0, kk) * g.dx * dp * v * v.adjoint();
    }
  }
  return k;
}

/// Kernel of 2πħ·Op_W(ρ_Σ), Σ = [[a, b], [b, c]] (one mode), in closed form.
inline MatrixXcd gaussian_state_kernel(const phasekit::Grid1D& g, const MatrixXd& sigma, double hbar) {
  const double a = sigma(0, 0);
  const double b = sigma(0, 1);
  const double c = sigma(1, 1);
  MatrixXcd k(g.n, g.n);
  for (int j = 0; j < g.n; ++j) {
    for (int l = 0; l < g.n; ++l) {
      const double mid = 0.5 * (g.at(j) + g.at(l));
      const double u = g.at(j) - g.at(l);
      const double mag =
          std::exp(-mid * mid / (2 * a) - (c - b * b / a) * u * u / (2 * hbar * hbar)) / std::sqrt(2 * pi * a);
      k(j, l) = std::polar(mag, (b / a) * mid * u / hbar);
    }
  }
  return k;
}

/// One-mode ρ_Σ.
inline double rho(const MatrixXd& s, double x, double p) {
  const double det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
  const double q = (s(1, 1) * x * x - 2 * s(0, 1) * x * p + s(0, 0) * p * p) / det;
  return std::exp(-0.5 * q) / (2 * pi * std::sqrt(det));
}

/// Normalized Hermite functions by the three-term recurrence, as columns.
inline MatrixXcd hermite_basis(const phasekit::Grid1D& g, int count, double hbar) {
  MatrixXcd b(g.n, count);
  for (int j = 0; j < g.n; ++j) {
    const double u = g.at(j) / std::sqrt(hbar);
    double prev = 0.0;
    double cur = std::pow(pi * hbar, -0.25) * std::exp(-0.5 * u * u);
    for (int m = 0; m < count; ++m) {
      b(j, m) = cur;
      const double next = std::sqrt(2.0 / (m + 1)) * u * cur - std::sqrt(double(m) / (m + 1)) * prev;
      prev = cur;
      cur = next;
    }
  }
  return b;
}

}  // namespace oracle
