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

#include "phasekit/grid.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "phasekit/errors.hpp"

namespace phasekit {

namespace {

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Grid1D Grid1D::symmetric(int n, double half_span) {
  if (n < 2 || !(half_span > 0.0)) {
    throw PreconditionError(fmt::format("bad grid: n = {}, half span = {}", n, half_span));
  }
  return Grid1D{n, -half_span, 2.0 * half_span / n};
}

bool Grid1D::is_centered() const {
  return std::abs(x_min + 0.5 * n * dx) <= 1e-9 * std::max(1.0, std::abs(x_min));
}

bool Grid1D::same_as(const Grid1D& other) const {
  return n == other.n && close(x_min, other.x_min) && close(dx, other.dx);
}

void validate_operator_grid(const Grid1D& grid) {
  if (grid.n < 16 || (grid.n & (grid.n - 1)) != 0) {
    throw PreconditionError(fmt::format("grid size must be a power of two >= 16, got {}", grid.n));
  }
  if (!(grid.dx > 0.0)) throw PreconditionError("grid spacing must be positive");
  if (!grid.is_centered()) {
    throw PreconditionError(fmt::format("grid must be centered (x_min = -N dx / 2), got x_min = {}",
                                        grid.x_min));
  }
}

bool PhaseGrid::same_as(const PhaseGrid& other) const {
  return x.same_as(other.x) && p.same_as(other.p);
}

double momentum_step(const Grid1D& op, double hbar) {
  return std::numbers::pi * hbar / (op.n * op.dx);
}

PhaseGrid symbol_grid(const Grid1D& op, double hbar) {
  const double dp = momentum_step(op, hbar);
  return PhaseGrid{Grid1D{2 * op.n, op.x_min, 0.5 * op.dx}, Grid1D{op.n, -0.5 * op.n * dp, dp}};
}

PhaseGrid quadrature_grid(const Grid1D& op, double hbar) {
  const double dp = momentum_step(op, hbar);
  return PhaseGrid{op, Grid1D{op.n, -0.5 * op.n * dp, dp}};
}

double WaveFunction::norm() const {
  return std::sqrt(samples.squaredNorm() * grid.dx);
}

std::complex<double> PhaseFunction::integral() const {
  return samples.sum() * cell();
}

double OperatorMatrix::hermiticity_residual() const {
  if (entries.size() == 0) return 0.0;
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

std::complex<double> OperatorMatrix::trace() const {
  return entries.diagonal().sum() * grid.dx;
}

WaveFunction sample(const Grid1D& grid, const std::function<std::complex<double>(double)>& f) {
  WaveFunction out{grid, Eigen::VectorXcd(grid.n)};
  for (int i = 0; i < grid.n; ++i) out.samples(i) = f(grid.at(i));
  return out;
}

PhaseFunction sample(const PhaseGrid& grid,
                     const std::function<std::complex<double>(double, double)>& f) {
  PhaseFunction out{grid, Eigen::MatrixXcd(grid.x.n, grid.p.n)};
  for (int i = 0; i < grid.x.n; ++i) {
    for (int k = 0; k < grid.p.n; ++k) out.samples(i, k) = f(grid.x.at(i), grid.p.at(k));
  }
  return out;
}

}  // namespace phasekit
