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

#include "phasekit/toeplitz.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "discrete_weyl.hpp"
#include "fft.hpp"
#include "phasekit/gaussian.hpp"
#include "phasekit/symplectic.hpp"
#include "phasekit/transforms.hpp"
#include "phasekit/weyl.hpp"

namespace phasekit {

namespace {

using std::numbers::pi;

void check_window_norm(const WaveFunction& phi, Warnings* warnings) {
  const double norm = phi.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    warn(warnings, fmt::format("window norm is {:.12g}, not 1; the operator scales by ‖φ‖²", norm));
  }
}

}  // namespace

Eigen::MatrixXd quadrature_samples(const PhaseFunction& a, const Grid1D& op, double hbar) {
  Eigen::MatrixXcd nodes;
  if (a.grid.same_as(quadrature_grid(op, hbar)) && a.samples.rows() == op.n) {
    nodes = a.samples;
  } else if (a.grid.same_as(symbol_grid(op, hbar)) && a.samples.rows() == 2 * op.n) {
    nodes.resize(op.n, a.samples.cols());
    for (int j = 0; j < op.n; ++j) nodes.row(j) = a.samples.row(2 * j);
  } else {
    throw PreconditionError(fmt::format(
        "symbol grid ({} × {}, dx = {}, dp = {}) is neither the quadrature nor the symbol grid of "
        "the window grid (N = {}, dx = {}, dp = {})",
        a.grid.x.n, a.grid.p.n, a.grid.x.dx, a.grid.p.dx, op.n, op.dx, momentum_step(op, hbar)));
  }
  const double scale = std::max(nodes.cwiseAbs().maxCoeff(), 1e-300);
  const double imag = nodes.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-10 * scale) {
    throw PreconditionError(
        fmt::format("Toeplitz symbols must be real; max |Im a| = {:.3g}", imag));
  }
  return nodes.real();
}

OperatorMatrix toeplitz_operator_direct(const PhaseFunction& a, const WaveFunction& phi,
                                        double hbar, Warnings* warnings) {
  checked_hbar(hbar);
  const Grid1D& op = phi.grid;
  validate_operator_grid(op);
  check_window_norm(phi, warnings);
  const int n = op.n;
  const Eigen::MatrixXd nodes = quadrature_samples(a, op, hbar);
  const double dp = momentum_step(op, hbar);

  // Π̂_φ(x_{j0}, p_k) has kernel e^{ip_k(x_j − x_l)/ħ} φ(x_j − x_{j0}) conj(φ(x_l − x_{j0})),
  // and p_k(x_j − x_l)/ħ = π(k − N/2)(j − l)/N. Summing over k first leaves
  // one row of phases per j0, indexed by d = j − l.
  Eigen::MatrixXcd phases(n, 2 * n - 1);
  for (int k = 0; k < n; ++k) {
    for (int d = -(n - 1); d <= n - 1; ++d) {
      phases(k, d + n - 1) = std::polar(1.0, pi * (k - n / 2) * static_cast<double>(d) / n);
    }
  }
  const Eigen::MatrixXcd g = (nodes.cast<std::complex<double>>() * phases) * (op.dx * dp);

  const auto& w = phi.samples;
  Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(n, n);
  for (int j0 = 0; j0 < n; ++j0) {
    // Window index of x_j − x_{j0} is j − j0 + N/2.
    const int lo = std::max(0, j0 - n / 2);
    const int hi = std::min(n - 1, j0 + n / 2 - 1);
    for (int l = lo; l <= hi; ++l) {
      const std::complex<double> right = std::conj(w(l - j0 + n / 2));
      if (right == 0.0) continue;
      for (int j = lo; j <= hi; ++j) {
        kernel(j, l) += g(j0, j - l + n - 1) * w(j - j0 + n / 2) * right;
      }
    }
  }
  return OperatorMatrix{op, std::move(kernel)};
}

PhaseFunction toeplitz_weyl_symbol(const PhaseFunction& a, const WaveFunction& phi, double hbar,
                                   Warnings* warnings) {
  checked_hbar(hbar);
  const Grid1D& op = phi.grid;
  validate_operator_grid(op);
  check_window_norm(phi, warnings);
  const int n = op.n;
  const Eigen::MatrixXd nodes = quadrature_samples(a, op, hbar);
  const PhaseFunction w = wigner(phi, hbar);

  // Quadrature nodes sit on the even rows of the half-step symbol grid.
  Eigen::MatrixXcd spread = Eigen::MatrixXcd::Zero(2 * n, n);
  for (int j = 0; j < n; ++j) spread.row(2 * j) = nodes.row(j).cast<std::complex<double>>();
  const double scale = 2.0 * pi * hbar * op.dx * momentum_step(op, hbar);
  PhaseFunction out{w.grid, detail::linear_convolve(spread, w.samples, n, n / 2, 2 * n, n) * scale};
  const double frame = boundary_mass_fraction(out);
  if (frame > 1e-6) {
    warn(warnings, fmt::format("Toeplitz Weyl symbol carries {:.3g} of its mass at the grid "
                               "boundary; enlarge the grid margin",
                               frame));
  }
  return out;
}

OperatorMatrix toeplitz_operator_weyl(const PhaseFunction& a, const WaveFunction& phi, double hbar,
                                      Warnings* warnings) {
  return weyl_symbol_to_kernel(toeplitz_weyl_symbol(a, phi, hbar, warnings), hbar);
}

OperatorMatrix toeplitz_operator(const PhaseFunction& a, const WaveFunction& phi, double hbar,
                                 ToeplitzRoute route, Warnings* warnings) {
  return route == ToeplitzRoute::kDirect ? toeplitz_operator_direct(a, phi, hbar, warnings)
                                         : toeplitz_operator_weyl(a, phi, hbar, warnings);
}

OperatorMatrix anti_wick(const PhaseFunction& a, const Grid1D& op, double hbar,
                         Warnings* warnings) {
  return toeplitz_operator_weyl(a, standard_gaussian(op, hbar, warnings), hbar, warnings);
}

OperatorMatrix toeplitz_operator_atoms(const std::vector<Atom>& atoms, const WaveFunction& phi,
                                       double hbar) {
  checked_hbar(hbar);
  const int n = phi.grid.n;
  Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(n, n);
  for (const Atom& atom : atoms) {
    const WaveFunction moved = heisenberg_translate(phi, atom.x0, atom.p0, hbar);
    kernel.noalias() += atom.weight * moved.samples * moved.samples.adjoint();
  }
  return OperatorMatrix{phi.grid, std::move(kernel)};
}

DensityReport verify_density_operator(const OperatorMatrix& m, double tol) {
  const auto n = m.entries.rows();
  if (n != m.entries.cols() || n != m.grid.n) {
    throw InvalidDimension("operator matrix must be square and match its grid");
  }
  DensityReport report;
  report.hermiticity_residual = m.hermiticity_residual();
  report.hermitian = report.hermiticity_residual < tol;
  const Eigen::MatrixXcd action = m.action();
  report.min_eig = linalg::min_eigenvalue(Eigen::MatrixXcd(0.5 * (action + action.adjoint())));
  report.trace = m.trace();
  report.is_density = report.hermitian && report.min_eig >= -tol &&
                      std::abs(report.trace - 1.0) <= tol;
  return report;
}

OperatorMatrix toeplitz_density(const PhaseFunction& mu, const WaveFunction& phi, double hbar,
                                ToeplitzRoute route, Warnings* warnings) {
  checked_hbar(hbar);
  const Grid1D& op = phi.grid;
  validate_operator_grid(op);
  const double norm = phi.norm();
  if (std::abs(norm - 1.0) > 1e-8) {
    throw PreconditionError(fmt::format("window must be normalized; ‖φ‖ = {:.12g}", norm));
  }
  const Eigen::MatrixXd nodes = quadrature_samples(mu, op, hbar);
  const double peak = nodes.cwiseAbs().maxCoeff();
  const double lowest = nodes.minCoeff();
  if (lowest < -1e-14 * peak) {
    throw PreconditionError(
        fmt::format("Toeplitz weight must be non-negative; min μ = {:.6g}", lowest));
  }
  const double mass = nodes.sum() * op.dx * momentum_step(op, hbar);
  if (std::abs(mass - 1.0) > 1e-8) {
    throw PreconditionError(fmt::format("Toeplitz weight must integrate to 1; ∫μ = {:.12g}", mass));
  }
  return toeplitz_operator(mu, phi, hbar, route, warnings);
}

}  // namespace phasekit
