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

// Wavefunctions and phase-space transforms on the grids of grid.hpp.

#pragma once

#include "phasekit/errors.hpp"
#include "phasekit/gaussian.hpp"
#include "phasekit/grid.hpp"

namespace phasekit {

/// φ₀(x) = (πħ)^{-1/4} exp(−x²/2ħ). Warns when the grid covers less than
/// ±6√ħ.
WaveFunction standard_gaussian(const Grid1D& grid, double hbar, Warnings* warnings = nullptr);

/// Normalized Hermite function of the given order (order 0 is φ₀).
WaveFunction hermite_function(const Grid1D& grid, int order, double hbar);

/// Samples of a one-mode φ_{X,Y}.
WaveFunction sample_window(const GaussianWindow& window, const Grid1D& grid, double hbar);

/// T̂(z₀)ψ(x) = exp(i(p₀x − p₀x₀/2)/ħ) ψ(x − x₀). x₀ must be a multiple of
/// dx; samples shifted off the grid are dropped, vacated ones are zero.
WaveFunction heisenberg_translate(const WaveFunction& psi, double x0, double p0, double hbar);

/// W(ψ,φ)(x,p) = (2πħ)^{-1} ∫ e^{−ipy/ħ} ψ(x + y/2) conj(φ(x − y/2)) dy,
/// on the symbol grid of ψ's grid.
PhaseFunction cross_wigner(const WaveFunction& psi, const WaveFunction& phi, double hbar);
PhaseFunction wigner(const WaveFunction& psi, double hbar);

/// Amb(ψ,φ)(z) = ½ W(ψ, φ∨)(z/2). Output positions are multiples of dx over
/// [−2L, 2L); momenta are twice the symbol-grid momenta.
PhaseFunction ambiguity(const WaveFunction& psi, const WaveFunction& phi, double hbar);

/// a_σ(z) = (2πħ)^{-1} ∫ e^{−iσ(z,z′)/ħ} a(z′) dz′, σ(z,z′) = p·x′ − p′·x.
/// The output lives on the dual grid (x-step 2πħ/(N_p dp), p-step
/// 2πħ/(N_x dx)); both grids must be centered.
PhaseFunction symplectic_fourier(const PhaseFunction& a, double hbar);

/// (f ∗ g)(z) = Σ f(z′) g(z − z′) dx dp, zero-padded linear convolution on
/// the common (centered) grid of f and g.
PhaseFunction phase_convolve(const PhaseFunction& f, const PhaseFunction& g);

/// Fraction of Σ|f| carried by the outer 1/16 frame of the grid.
double boundary_mass_fraction(const PhaseFunction& f);

/// Σ|f|·dx·dp.
double l1_norm(const PhaseFunction& f);

/// (ψ|φ) = Σ ψ_k conj(φ_k) dx, linear in ψ.
std::complex<double> inner_product(const WaveFunction& psi, const WaveFunction& phi);

/// Throws PreconditionError unless both functions share a grid.
void require_same_grid(const WaveFunction& a, const WaveFunction& b);

}  // namespace phasekit
