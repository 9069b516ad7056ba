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

// Weyl correspondence between symbols on the symbol grid and kernels on the
// operator grid:
//
//   K(x, y) = (2πħ)^{-1} ∫ e^{ip(x−y)/ħ} a((x+y)/2, p) dp
//   a(x, p) = ∫ e^{−ipy/ħ} K(x + y/2, x − y/2) dy
//
// Both maps are evaluated exactly on the grids of grid.hpp, so the round trip
// kernel → symbol → kernel is the identity to round-off.

#pragma once

#include <complex>

#include "phasekit/errors.hpp"
#include "phasekit/grid.hpp"

namespace phasekit {

/// The operator grid whose symbol grid is `symbol`; throws
/// PreconditionError if `symbol` is not a symbol grid for this ħ.
Grid1D operator_grid_of_symbol(const PhaseGrid& symbol, double hbar);

OperatorMatrix weyl_symbol_to_kernel(const PhaseFunction& a, double hbar);

PhaseFunction kernel_to_weyl_symbol(const OperatorMatrix& k, double hbar);

/// Tr Â = (2πħ)^{-1} ∫ a(z) dz as a grid sum. Warns when more than 1e-6 of
/// the mass of a sits in the outer frame of the grid.
std::complex<double> trace_via_symbol(const PhaseFunction& a, double hbar,
                                      Warnings* warnings = nullptr);

}  // namespace phasekit
