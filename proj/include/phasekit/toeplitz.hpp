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

// Toeplitz (localization) operators with window φ,
//
//   Op_φ(a) = ∫ a(z₀) Π̂_φ(z₀) dz₀,   Π̂_φ(z₀) = |T̂(z₀)φ⟩⟨T̂(z₀)φ|,
//
// discretized as a quadrature over the quadrature grid (operator positions ×
// symbol-grid momenta). Two independent routes are provided:
//
//   direct  the quadrature sum of displaced rank-one projectors;
//   weyl    the Weyl symbol a_φ = 2πħ (a ∗ Wφ), then symbol → kernel.
//
// Symbols are accepted on the quadrature grid or on the symbol grid; on the
// symbol grid only the integer-step rows are used as quadrature nodes.

#pragma once

#include <vector>

#include "phasekit/errors.hpp"
#include "phasekit/grid.hpp"

namespace phasekit {

enum class ToeplitzRoute { kDirect, kWeyl };

/// Symbol samples at the quadrature nodes: rows x_j of the operator grid,
/// columns p_k. Throws unless `a` lives on the quadrature or symbol grid of
/// `op`, or if a has an imaginary part.
Eigen::MatrixXd quadrature_samples(const PhaseFunction& a, const Grid1D& op, double hbar);

OperatorMatrix toeplitz_operator_direct(const PhaseFunction& a, const WaveFunction& phi,
                                        double hbar, Warnings* warnings = nullptr);

OperatorMatrix toeplitz_operator_weyl(const PhaseFunction& a, const WaveFunction& phi, double hbar,
                                      Warnings* warnings = nullptr);

OperatorMatrix toeplitz_operator(const PhaseFunction& a, const WaveFunction& phi, double hbar,
                                 ToeplitzRoute route, Warnings* warnings = nullptr);

/// a_φ = 2πħ (a ∗ Wφ) on the symbol grid of φ's grid.
PhaseFunction toeplitz_weyl_symbol(const PhaseFunction& a, const WaveFunction& phi, double hbar,
                                   Warnings* warnings = nullptr);

/// Toeplitz operator with the standard Gaussian window (Weyl route).
OperatorMatrix anti_wick(const PhaseFunction& a, const Grid1D& op, double hbar,
                         Warnings* warnings = nullptr);

/// A weighted point mass of a Toeplitz weight; x0 must be a multiple of dx.
struct Atom {
  double x0 = 0.0;
  double p0 = 0.0;
  double weight = 0.0;
};

/// Σ_λ w_λ Π̂_φ(z_λ) for a finite sum of atoms.
OperatorMatrix toeplitz_operator_atoms(const std::vector<Atom>& atoms, const WaveFunction& phi,
                                       double hbar);

struct DensityReport {
  double hermiticity_residual = 0.0;
  bool hermitian = false;
  /// Smallest eigenvalue of the Hermitian part of the operator.
  double min_eig = 0.0;
  std::complex<double> trace;
  bool is_density = false;
};

DensityReport verify_density_operator(const OperatorMatrix& m, double tol);

/// ρ̂ = Op_φ(μ) = 2πħ Op_W(μ ∗ Wφ) for a probability density μ and a
/// normalized window; Tr ρ̂ = ∫μ·‖φ‖² = 1. Throws PreconditionError if μ has
/// a negative value, ∫μ ≠ 1 or ‖φ‖ ≠ 1 (both within 1e-8).
OperatorMatrix toeplitz_density(const PhaseFunction& mu, const WaveFunction& phi, double hbar,
                                ToeplitzRoute route = ToeplitzRoute::kDirect,
                                Warnings* warnings = nullptr);

}  // namespace phasekit
