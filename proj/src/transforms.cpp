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

#include "phasekit/transforms.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "discrete_weyl.hpp"
#include "fft.hpp"

namespace phasekit {

namespace {

using std::numbers::pi;

/// Y_c = Σ_i y_i e^{s·2πi(i − M/2)(c − M/2)/M}, in place.
void centered_dft(detail::Dft1D& dft, int sign, Eigen::VectorXcd& y) {
  const int m = static_cast<int>(y.size());
  for (int i = 1; i < m; i += 2) y(i) = -y(i);
  dft.apply(y.data());
  const std::complex<double> front = std::polar(1.0, sign * pi * m / 2.0);
  for (int c = 0; c < m; ++c) y(c) *= (c % 2 == 0 ? front : -front);
}

void require_centered(const PhaseGrid& grid) {
  if (!grid.x.is_centered() || !grid.p.is_centered()) {
    throw PreconditionError("phase grid must be centered on the origin");
  }
}

}  // namespace

void require_same_grid(const WaveFunction& a, const WaveFunction& b) {
  if (!a.grid.same_as(b.grid) || a.samples.size() != b.samples.size()) {
    throw PreconditionError(fmt::format("grid mismatch: ({}, {}, {}) vs ({}, {}, {})", a.grid.n,
                                        a.grid.x_min, a.grid.dx, b.grid.n, b.grid.x_min,
                                        b.grid.dx));
  }
}

WaveFunction standard_gaussian(const Grid1D& grid, double hbar, Warnings* warnings) {
  checked_hbar(hbar);
  const double reach = 6.0 * std::sqrt(hbar);
  if (-grid.x_min < reach || grid.at(grid.n - 1) < reach - grid.dx) {
    warn(warnings, fmt::format("grid [{}, {}] covers less than ±6√ħ = ±{}; the Gaussian is truncated",
                               grid.x_min, grid.at(grid.n - 1), reach));
  }
  return hermite_function(grid, 0, hbar);
}

WaveFunction hermite_function(const Grid1D& grid, int order, double hbar) {
  checked_hbar(hbar);
  if (order < 0) throw PreconditionError("Hermite order must be non-negative");
  const double norm0 = std::pow(pi * hbar, -0.25);
  WaveFunction out{grid, Eigen::VectorXcd(grid.n)};
  for (int i = 0; i < grid.n; ++i) {
    const double u = grid.at(i) / std::sqrt(hbar);
    // h_{k+1} = √(2/(k+1))·u·h_k − √(k/(k+1))·h_{k−1}
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * u * u);
    for (int k = 0; k < order; ++k) {
      const double next =
          std::sqrt(2.0 / (k + 1)) * u * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    out.samples(i) = cur;
  }
  return out;
}

WaveFunction sample_window(const GaussianWindow& window, const Grid1D& grid, double hbar) {
  validate_window(window);
  if (window.n() != 1) {
    throw InvalidDimension(fmt::format("grid windows are one-mode, got n = {}", window.n()));
  }
  return sample(grid, [&](double x) {
    return gaussian_window_eval(window, Eigen::VectorXd::Constant(1, x), hbar);
  });
}

WaveFunction heisenberg_translate(const WaveFunction& psi, double x0, double p0, double hbar) {
  checked_hbar(hbar);
  const double steps = x0 / psi.grid.dx;
  const long shift = std::lround(steps);
  if (std::abs(steps - static_cast<double>(shift)) > 1e-9 * std::max(1.0, std::abs(steps))) {
    throw PreconditionError(
        fmt::format("displacement x0 = {} is not a multiple of dx = {}", x0, psi.grid.dx));
  }
  const int n = psi.grid.n;
  WaveFunction out{psi.grid, Eigen::VectorXcd::Zero(n)};
  for (int j = 0; j < n; ++j) {
    const long src = j - shift;
    if (src < 0 || src >= n) continue;
    const double x = psi.grid.at(j);
    out.samples(j) = std::polar(1.0, (p0 * x - 0.5 * p0 * x0) / hbar) * psi.samples(src);
  }
  return out;
}

PhaseFunction cross_wigner(const WaveFunction& psi, const WaveFunction& phi, double hbar) {
  checked_hbar(hbar);
  require_same_grid(psi, phi);
  const Grid1D& g = psi.grid;
  const auto& a = psi.samples;
  const auto& b = phi.samples;
  PhaseFunction out{symbol_grid(g, hbar), {}};
  out.samples = detail::kernel_to_symbol_rows(
      g.n, g.dx, 1.0 / (2.0 * pi * hbar),
      [&](int j, int l) { return a(j) * std::conj(b(l)); });
  return out;
}

PhaseFunction wigner(const WaveFunction& psi, double hbar) {
  return cross_wigner(psi, psi, hbar);
}

PhaseFunction ambiguity(const WaveFunction& psi, const WaveFunction& phi, double hbar) {
  require_same_grid(psi, phi);
  const Grid1D& g = psi.grid;
  if (!g.is_centered() || g.n % 2 != 0) {
    throw PreconditionError("ambiguity needs an even grid centered on the origin");
  }
  // φ∨(x_l) = φ(−x_l) = φ_{N−l}; −x_0 falls off the grid.
  WaveFunction reflected{g, Eigen::VectorXcd::Zero(g.n)};
  for (int l = 1; l < g.n; ++l) reflected.samples(l) = phi.samples(g.n - l);
  const PhaseFunction w = cross_wigner(psi, reflected, hbar);
  // Row h of w sits at X_h = (h − N)·dx/2, so z = 2(X_h, p_k).
  PhaseFunction out{PhaseGrid{Grid1D{2 * g.n, -g.n * g.dx, g.dx},
                              Grid1D{w.grid.p.n, 2.0 * w.grid.p.x_min, 2.0 * w.grid.p.dx}},
                    0.5 * w.samples};
  return out;
}

PhaseFunction symplectic_fourier(const PhaseFunction& a, double hbar) {
  checked_hbar(hbar);
  require_centered(a.grid);
  const int nx = a.grid.x.n;
  const int np = a.grid.p.n;
  const double dx = a.grid.x.dx;
  const double dp = a.grid.p.dx;
  const double out_dx = 2.0 * pi * hbar / (np * dp);
  const double out_dp = 2.0 * pi * hbar / (nx * dx);

  // e^{−iσ(z,z′)/ħ} = e^{+ip′x/ħ}·e^{−ipx′/ħ}: a centered DFT over p′ into
  // the output x, then over x′ into the output p.
  Eigen::MatrixXcd stage(nx, np);
  {
    detail::Dft1D dft(np, +1);
    Eigen::VectorXcd row(np);
    for (int i = 0; i < nx; ++i) {
      row = a.samples.row(i).transpose();
      centered_dft(dft, +1, row);
      stage.row(i) = row.transpose();
    }
  }
  PhaseFunction out{PhaseGrid{Grid1D{np, -0.5 * np * out_dx, out_dx},
                              Grid1D{nx, -0.5 * nx * out_dp, out_dp}},
                    Eigen::MatrixXcd(np, nx)};
  detail::Dft1D dft(nx, -1);
  Eigen::VectorXcd col(nx);
  const double scale = dx * dp / (2.0 * pi * hbar);
  for (int r = 0; r < np; ++r) {
    col = stage.col(r);
    centered_dft(dft, -1, col);
    out.samples.row(r) = scale * col.transpose();
  }
  return out;
}

PhaseFunction phase_convolve(const PhaseFunction& f, const PhaseFunction& g) {
  if (!f.grid.same_as(g.grid)) throw PreconditionError("convolution factors must share a grid");
  require_centered(f.grid);
  const int nx = f.grid.x.n;
  const int np = f.grid.p.n;
  PhaseFunction out{f.grid, detail::linear_convolve(f.samples, g.samples, nx / 2, np / 2, nx, np) *
                                f.cell()};
  return out;
}

double boundary_mass_fraction(const PhaseFunction& f) {
  const int nx = static_cast<int>(f.samples.rows());
  const int np = static_cast<int>(f.samples.cols());
  const int fx = std::max(1, nx / 16);
  const int fp = std::max(1, np / 16);
  double total = 0.0;
  double frame = 0.0;
  for (int k = 0; k < np; ++k) {
    for (int i = 0; i < nx; ++i) {
      const double v = std::abs(f.samples(i, k));
      total += v;
      if (i < fx || i >= nx - fx || k < fp || k >= np - fp) frame += v;
    }
  }
  return total > 0.0 ? frame / total : 0.0;
}

double l1_norm(const PhaseFunction& f) {
  return f.samples.cwiseAbs().sum() * f.cell();
}

std::complex<double> inner_product(const WaveFunction& psi, const WaveFunction& phi) {
  require_same_grid(psi, phi);
  // Eigen's dot conjugates its first argument.
  return phi.samples.dot(psi.samples) * psi.grid.dx;
}

}  // namespace phasekit
