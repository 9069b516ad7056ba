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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/transforms.hpp"

using namespace phasekit;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

/// A generic complex wavefunction: shifted, chirped, mixed with a Hermite term.
WaveFunction generic_state(const Grid1D& g, double hbar) {
  return sample(g, [&](double x) {
    const double u = (x - 0.4) / std::sqrt(hbar);
    return std::exp(cd(-0.5 * u * u * 1.3, 0.6 * x * x / hbar + 0.3 * x / hbar)) * (1.0 + 0.5 * u);
  });
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("standard Gaussian and Hermite functions") {
  const Grid1D g = Grid1D::symmetric(256, 10.0);
  const WaveFunction phi0 = standard_gaussian(g, 1.0);
  CHECK(phi0.samples(128).real() == doctest::Approx(std::pow(pi, -0.25)).epsilon(1e-15));
  CHECK(phi0.norm() == doctest::Approx(1.0).epsilon(1e-12));
  // Orthonormality of the first ten.
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      const cd ip = inner_product(hermite_function(g, a, 1.0), hermite_function(g, b, 1.0));
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-10);
    }
  }
  // h_1(x) = √2 π^{-1/4} x e^{-x²/2}.
  const WaveFunction h1 = hermite_function(g, 1, 1.0);
  CHECK(h1.samples(140).real() ==
        doctest::Approx(std::sqrt(2.0) * std::pow(pi, -0.25) * g.at(140) * std::exp(-0.5 * g.at(140) * g.at(140))));

  Warnings warnings;
  standard_gaussian(Grid1D::symmetric(64, 3.0), 1.0, &warnings);
  CHECK(warnings.size() == 1);
  warnings.clear();
  standard_gaussian(g, 1.0, &warnings);
  CHECK(warnings.empty());
  CHECK_THROWS_AS(hermite_function(g, -1, 1.0), PreconditionError);
  CHECK_THROWS_AS(standard_gaussian(g, 0.0), DomainError);
}

TEST_CASE("Heisenberg translation") {
  const double hbar = 0.7;
  const Grid1D g = Grid1D::symmetric(64, 8.0);
  const WaveFunction psi = generic_state(g, hbar);
  const WaveFunction moved = heisenberg_translate(psi, 5 * g.dx, 1.3, hbar);
  CHECK(max_diff(moved.samples, oracle::translate(psi.samples, g, 5, 1.3, hbar)) < 1e-15);
  CHECK(max_diff(heisenberg_translate(psi, 0.0, 0.0, hbar).samples, psi.samples) == 0.0);
  for (int j = 5; j < g.n; ++j) CHECK(std::abs(moved.samples(j)) == doctest::Approx(std::abs(psi.samples(j - 5))));
  CHECK_THROWS_AS(heisenberg_translate(psi, 0.5 * g.dx, 0.0, hbar), PreconditionError);
}

TEST_CASE("cross-Wigner transform against the literal double sum") {
  for (double hbar : {1.0, 0.3}) {
    const Grid1D g = Grid1D::symmetric(32, 6.0 * std::sqrt(hbar));
    const WaveFunction psi = generic_state(g, hbar);
    const WaveFunction phi = hermite_function(g, 2, hbar);
    const PhaseFunction w = cross_wigner(psi, phi, hbar);
    CHECK(w.grid.x.n == 64);
    CHECK(w.grid.p.n == 32);
    CHECK(w.grid.x.dx == doctest::Approx(0.5 * g.dx));
    CHECK(w.grid.p.dx == doctest::Approx(pi * hbar / (32 * g.dx)));
    CHECK(max_diff(w.samples, oracle::cross_wigner(psi.samples, phi.samples, g, hbar)) < 1e-13);
  }
  const Grid1D other = Grid1D::symmetric(32, 5.0);
  CHECK_THROWS_AS(cross_wigner(standard_gaussian(Grid1D::symmetric(32, 6.0), 1.0), standard_gaussian(other, 1.0), 1.0),
                  PreconditionError);
}

TEST_CASE("Wigner functions in closed form") {
  for (double hbar : {1.0, 0.2}) {
    const Grid1D g = Grid1D::symmetric(128, 8.0 * std::sqrt(hbar));
    const PhaseFunction w0 = wigner(standard_gaussian(g, hbar), hbar);
    const PhaseFunction w1 = wigner(hermite_function(g, 1, hbar), hbar);
    double e0 = 0.0;
    double e1 = 0.0;
    for (int h = 0; h < w0.grid.x.n; ++h) {
      for (int k = 0; k < w0.grid.p.n; ++k) {
        const double x = w0.grid.x.at(h);
        const double p = w0.grid.p.at(k);
        const double r2 = (x * x + p * p) / hbar;
        e0 = std::max(e0, std::abs(w0.samples(h, k) - std::exp(-r2) / (pi * hbar)));
        e1 = std::max(e1, std::abs(w1.samples(h, k) - (2 * r2 - 1) * std::exp(-r2) / (pi * hbar)));
      }
    }
    CHECK(e0 * hbar < 1e-10);
    CHECK(e1 * hbar < 1e-10);
    CHECK(w1.samples(w1.grid.x.n / 2, w1.grid.p.n / 2).real() == doctest::Approx(-1.0 / (pi * hbar)));
  }
}

TEST_CASE("Wigner marginals and covariance under translation") {
  const double hbar = 1.0;
  const Grid1D g = Grid1D::symmetric(128, 10.0);
  const WaveFunction psi = generic_state(g, hbar);
  const PhaseFunction w = wigner(psi, hbar);
  CHECK(w.samples.imag().cwiseAbs().maxCoeff() < 1e-14);
  for (int j = 20; j < 108; j += 7) {
    const cd marginal = w.samples.row(2 * j).sum() * w.grid.p.dx;
    CHECK(std::abs(marginal - std::norm(psi.samples(j))) < 1e-10);
  }
  // W(T̂(z₀)ψ)(z) = Wψ(z − z₀) with z₀ on the grid lattice.
  const int shift = 6;
  const int pshift = 5;
  const double p0 = pshift * w.grid.p.dx;
  const PhaseFunction wt = wigner(heisenberg_translate(psi, shift * g.dx, p0, hbar), hbar);
  double err = 0.0;
  for (int h = 2 * shift; h < w.grid.x.n; ++h) {
    for (int k = pshift; k < w.grid.p.n; ++k) {
      err = std::max(err, std::abs(wt.samples(h, k) - w.samples(h - 2 * shift, k - pshift)));
    }
  }
  CHECK(err < 1e-10);
}

TEST_CASE("ambiguity function is the normalized Heisenberg overlap") {
  const double hbar = 0.8;
  const Grid1D g = Grid1D::symmetric(64, 9.0);
  const WaveFunction psi = generic_state(g, hbar);
  const WaveFunction phi = standard_gaussian(g, hbar);
  const PhaseFunction amb = ambiguity(psi, phi, hbar);
  CHECK(amb.grid.x.n == 128);
  CHECK(amb.grid.x.dx == doctest::Approx(g.dx));
  const int origin_row = g.n;
  const int origin_col = amb.grid.p.n / 2;
  CHECK(amb.grid.x.at(origin_row) == doctest::Approx(0.0));
  CHECK(std::abs(amb.grid.p.at(origin_col)) < 1e-12);

  const PhaseFunction self = ambiguity(phi, phi, hbar);
  CHECK(std::abs(self.samples(origin_row, origin_col) - 1.0 / (2 * pi * hbar)) < 1e-12);

  double err = 0.0;
  for (int r = origin_row - 10; r <= origin_row + 10; r += 3) {
    for (int k = origin_col - 8; k <= origin_col + 8; k += 4) {
      const double x0 = amb.grid.x.at(r);
      const double p0 = amb.grid.p.at(k);
      const cd overlap = inner_product(psi, heisenberg_translate(phi, x0, p0, hbar));
      err = std::max(err, std::abs(2 * pi * hbar * amb.samples(r, k) - overlap));
    }
  }
  CHECK(err < 1e-12);
}

TEST_CASE("symplectic Fourier transform") {
  const double hbar = 1.0;
  SUBCASE("literal double sum on a 32 × 32 grid") {
    const PhaseGrid grid{Grid1D::symmetric(32, 5.0), Grid1D::symmetric(32, 4.0)};
    const PhaseFunction a = sample(grid, [](double x, double p) {
      return std::exp(cd(-0.5 * (x - 0.3) * (x - 0.3) - 0.8 * p * p, 0.4 * x * p));
    });
    const PhaseFunction f = symplectic_fourier(a, hbar);
    const double odx = 2 * pi * hbar / (32 * grid.p.dx);
    const double odp = 2 * pi * hbar / (32 * grid.x.dx);
    CHECK(f.grid.x.dx == doctest::Approx(odx));
    CHECK(f.grid.p.dx == doctest::Approx(odp));
    double err = 0.0;
    for (int r = 0; r < 32; ++r) {
      for (int c = 0; c < 32; ++c) {
        const double x = (r - 16) * odx;
        const double p = (c - 16) * odp;
        cd sum = 0.0;
        for (int i = 0; i < 32; ++i) {
          for (int k = 0; k < 32; ++k) {
            const double xp = grid.x.at(i);
            const double pp = grid.p.at(k);
            sum += std::polar(1.0, -(p * xp - pp * x) / hbar) * a.samples(i, k);
          }
        }
        sum *= grid.x.dx * grid.p.dx / (2 * pi * hbar);
        err = std::max(err, std::abs(sum - f.samples(r, c)));
      }
    }
    CHECK(err < 1e-12);
    // Applying it twice returns the input.
    CHECK(max_diff(symplectic_fourier(f, hbar).samples, a.samples) < 1e-12);
  }
  SUBCASE("normalized Gaussian has value one at the origin") {
    const Grid1D axis = Grid1D::symmetric(128, 8.0);
    const Eigen::MatrixXd sigma = (Eigen::MatrixXd(2, 2) << 0.7, 0.2, 0.2, 1.1).finished();
    const PhaseFunction a =
        sample(PhaseGrid{axis, axis}, [&](double x, double p) { return 2 * pi * hbar * oracle::rho(sigma, x, p); });
    const PhaseFunction f = symplectic_fourier(a, hbar);
    CHECK(std::abs(f.samples(64, 64) - 1.0) < 1e-10);
    const PhaseFunction zero = symplectic_fourier(PhaseFunction{a.grid, Eigen::MatrixXcd::Zero(128, 128)}, hbar);
    CHECK(zero.samples.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("phase-space convolution and norms") {
  const Grid1D axis = Grid1D::symmetric(16, 3.0);
  const PhaseGrid grid{axis, axis};
  const PhaseFunction f = sample(grid, [](double x, double p) { return cd(std::exp(-x * x - 0.5 * p * p), 0.1 * x); });
  const PhaseFunction g = sample(grid, [](double x, double p) { return std::exp(-0.3 * (x - 0.5) * (x - 0.5) - p * p); });
  const PhaseFunction conv = phase_convolve(f, g);
  double err = 0.0;
  for (int i = 0; i < 16; ++i) {
    for (int k = 0; k < 16; ++k) {
      cd sum = 0.0;
      for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
          const int ia = i - a + 8;
          const int kb = k - b + 8;
          if (ia < 0 || ia >= 16 || kb < 0 || kb >= 16) continue;
          sum += f.samples(a, b) * g.samples(ia, kb);
        }
      }
      err = std::max(err, std::abs(sum * f.cell() - conv.samples(i, k)));
    }
  }
  CHECK(err < 1e-13);

  PhaseFunction frame{grid, Eigen::MatrixXcd::Zero(16, 16)};
  frame.samples(0, 5) = 1.0;
  CHECK(boundary_mass_fraction(frame) == 1.0);
  frame.samples(8, 8) = -3.0;
  CHECK(boundary_mass_fraction(frame) == doctest::Approx(0.25));
  CHECK(l1_norm(frame) == doctest::Approx(4.0 * frame.cell()));
  CHECK_THROWS_AS(phase_convolve(f, PhaseFunction{PhaseGrid{axis, Grid1D::symmetric(16, 2.0)},
                                                  Eigen::MatrixXcd::Zero(16, 16)}),
                  PreconditionError);
}
