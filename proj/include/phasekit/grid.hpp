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

// Uniform sampling of ℝ and ℝ² (one degree of freedom).
//
// Three grids work together:
//
//   operator grid    N positions x_j = x_min + j·dx, x_min = −N·dx/2.
//                    Wavefunctions and operator kernels live here.
//   symbol grid      2N half-step positions X_h = x_min + h·dx/2 (every
//                    midpoint (x_j + x_l)/2 is a node) times N momenta
//                    p_k = (k − N/2)·dp with dp = πħ/(N·dx).
//                    Weyl symbols and Wigner functions live here.
//   quadrature grid  operator positions times the same momenta; the
//                    displacement points z₀ of a Toeplitz quadrature.
//
// With this dp the discrete Weyl map kernel → symbol → kernel is the
// identity to round-off.

#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace phasekit {

struct Grid1D {
  int n = 0;
  double x_min = 0.0;
  double dx = 0.0;

  /// n points centered on 0: x_min = −half_span, dx = 2·half_span / n.
  static Grid1D symmetric(int n, double half_span);

  double at(int i) const { return x_min + i * dx; }
  double x_max() const { return x_min + n * dx; }
  /// True when x_min = −n·dx/2 (so that index n/2 is the origin).
  bool is_centered() const;
  bool same_as(const Grid1D& other) const;
};

/// Throws PreconditionError unless n ≥ 16 is a power of two and the grid is
/// centered with positive spacing.
void validate_operator_grid(const Grid1D& grid);

struct PhaseGrid {
  Grid1D x;
  Grid1D p;

  bool same_as(const PhaseGrid& other) const;
};

/// Momentum spacing πħ/(N·dx) shared by symbol and quadrature grids.
double momentum_step(const Grid1D& op, double hbar);
PhaseGrid symbol_grid(const Grid1D& op, double hbar);
PhaseGrid quadrature_grid(const Grid1D& op, double hbar);

struct WaveFunction {
  Grid1D grid;
  Eigen::VectorXcd samples;

  /// √(Σ|ψ_k|²·dx).
  double norm() const;
};

/// Samples of a function on a PhaseGrid; rows index x, columns index p.
struct PhaseFunction {
  PhaseGrid grid;
  Eigen::MatrixXcd samples;

  double cell() const { return grid.x.dx * grid.p.dx; }
  /// Σ f(z)·dx·dp.
  std::complex<double> integral() const;
};

/// Kernel samples K(x_j, x_l) on an operator grid. The operator acts as
/// (Aψ)_j = Σ_l K(x_j, x_l)·ψ_l·dx.
struct OperatorMatrix {
  Grid1D grid;
  Eigen::MatrixXcd entries;

  /// entries·dx: the matrix of the operator on the sample vectors.
  Eigen::MatrixXcd action() const { return entries * grid.dx; }
  double hermiticity_residual() const;
  bool is_hermitian(double tol) const { return hermiticity_residual() < tol; }
  /// Σ_j K(x_j, x_j)·dx.
  std::complex<double> trace() const;
};

WaveFunction sample(const Grid1D& grid, const std::function<std::complex<double>(double)>& f);
PhaseFunction sample(const PhaseGrid& grid,
                     const std::function<std::complex<double>(double, double)>& f);

}  // namespace phasekit
