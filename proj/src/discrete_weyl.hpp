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

// The discrete Weyl correspondence on an N-point operator grid.
//
// kernel -> symbol, at half-step node X_h (h = j + l) and p_k:
//   a(X_h, p_k) = Σ_{j+l=h} e^{−ip_k(x_j − x_l)/ħ} K(x_j, x_l) · 2dx
// symbol -> kernel:
//   K(x_j, x_l) = (2πħ)^{-1} Σ_k e^{+ip_k(x_j − x_l)/ħ} a(X_{j+l}, p_k) · dp
//
// With p_k(x_j − x_l)/ħ = π(k − N/2)(h − 2l)/N each half-step row is one
// N-point FFT over l.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "fft.hpp"

namespace phasekit::detail {

/// e^{sign·iπ(k − N/2)h/N}, k = 0..N−1.
inline Eigen::VectorXcd row_twiddle(int n, int h, int sign) {
  Eigen::VectorXcd t(n);
  for (int k = 0; k < n; ++k) {
    t(k) = std::polar(1.0, sign * std::numbers::pi * (k - n / 2) * static_cast<double>(h) / n);
  }
  return t;
}

/// Symbol rows (2N × N) of the kernel given entry-wise by `entry(j, l)`,
/// multiplied by `scale`.
template <typename Entry>
Eigen::MatrixXcd kernel_to_symbol_rows(int n, double dx, double scale, Entry&& entry) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2 * n, n);
  Dft1D backward(n, +1);
  Eigen::VectorXcd g(n);
  for (int h = 0; h < 2 * n - 1; ++h) {
    g.setZero();
    const int l_lo = std::max(0, h - (n - 1));
    const int l_hi = std::min(n - 1, h);
    for (int l = l_lo; l <= l_hi; ++l) {
      g(l) = (l % 2 == 0 ? 1.0 : -1.0) * entry(h - l, l);
    }
    backward.apply(g.data());
    out.row(h) = (2.0 * dx * scale) * row_twiddle(n, h, -1).cwiseProduct(g).transpose();
  }
  return out;
}

inline Eigen::MatrixXcd symbol_rows_to_kernel(const Eigen::MatrixXcd& symbol, int n, double dx,
                                              double hbar) {
  const double dp = std::numbers::pi * hbar / (n * dx);
  const double c = dp / (2.0 * std::numbers::pi * hbar);
  Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(n, n);
  Dft1D forward(n, -1);
  Eigen::VectorXcd b(n);
  for (int h = 0; h < 2 * n - 1; ++h) {
    b = row_twiddle(n, h, +1).cwiseProduct(symbol.row(h).transpose());
    forward.apply(b.data());
    const int l_lo = std::max(0, h - (n - 1));
    const int l_hi = std::min(n - 1, h);
    for (int l = l_lo; l <= l_hi; ++l) {
      kernel(h - l, l) = c * (l % 2 == 0 ? 1.0 : -1.0) * b(l);
    }
  }
  return kernel;
}

}  // namespace phasekit::detail
