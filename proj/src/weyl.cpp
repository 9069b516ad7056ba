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

#include "phasekit/weyl.hpp"

#include <numbers>

#include <fmt/format.h>

#include "discrete_weyl.hpp"
#include "phasekit/gaussian.hpp"
#include "phasekit/transforms.hpp"

namespace phasekit {

Grid1D operator_grid_of_symbol(const PhaseGrid& symbol, double hbar) {
  checked_hbar(hbar);
  if (symbol.x.n % 2 != 0) {
    throw PreconditionError(fmt::format("symbol grid needs 2N positions, got {}", symbol.x.n));
  }
  const Grid1D op{symbol.x.n / 2, symbol.x.x_min, 2.0 * symbol.x.dx};
  if (!symbol.same_as(symbol_grid(op, hbar))) {
    throw PreconditionError(fmt::format(
        "not a symbol grid for hbar = {}: expected {} momenta with dp = {}, got {} with dp = {}",
        hbar, op.n, momentum_step(op, hbar), symbol.p.n, symbol.p.dx));
  }
  return op;
}

OperatorMatrix weyl_symbol_to_kernel(const PhaseFunction& a, double hbar) {
  const Grid1D op = operator_grid_of_symbol(a.grid, hbar);
  return OperatorMatrix{op, detail::symbol_rows_to_kernel(a.samples, op.n, op.dx, hbar)};
}

PhaseFunction kernel_to_weyl_symbol(const OperatorMatrix& k, double hbar) {
  checked_hbar(hbar);
  const int n = k.grid.n;
  if (k.entries.rows() != n || k.entries.cols() != n) {
    throw InvalidDimension(fmt::format("kernel must be {0}×{0}, got {1}×{2}", n, k.entries.rows(),
                                       k.entries.cols()));
  }
  const auto& e = k.entries;
  return PhaseFunction{symbol_grid(k.grid, hbar),
                       detail::kernel_to_symbol_rows(n, k.grid.dx, 1.0,
                                                     [&](int j, int l) { return e(j, l); })};
}

std::complex<double> trace_via_symbol(const PhaseFunction& a, double hbar, Warnings* warnings) {
  checked_hbar(hbar);
  const double frame = boundary_mass_fraction(a);
  if (frame > 1e-6) {
    warn(warnings, fmt::format("symbol carries {:.3g} of its mass at the grid boundary; the trace "
                               "is a truncated integral",
                               frame));
  }
  return a.integral() / (2.0 * std::numbers::pi * hbar);
}

}  // namespace phasekit
