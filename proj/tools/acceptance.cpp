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

#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "phasekit/errors.hpp"
#include "phasekit/fixtures.hpp"
#include "phasekit/gaussian.hpp"
#include "phasekit/grid.hpp"
#include "phasekit/separability.hpp"
#include "phasekit/symplectic.hpp"
#include "phasekit/toeplitz.hpp"
#include "phasekit/transforms.hpp"
#include "phasekit/weyl.hpp"

namespace phasekit::acceptance {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;
using fixtures::Rng;

// ---------------------------------------------------------------------------
// Oracles. These deliberately avoid the library code paths they check.

/// J in xp-block ordering, written out by hand.
MatrixXd oracle_j(int n) {
  MatrixXd j = MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(k, n + k) = 1.0;
    j(n + k, k) = -1.0;
  }
  return j;
}

/// Moduli of the eigenvalues of JΣ from a general (non-symmetric) real
/// eigensolver, sorted decreasing.
std::vector<double> oracle_symplectic_spectrum(const MatrixXd& sigma_xp) {
  const int n = static_cast<int>(sigma_xp.rows() / 2);
  Eigen::EigenSolver<MatrixXd> solver(oracle_j(n) * sigma_xp);
  std::vector<double> moduli;
  for (int i = 0; i < 2 * n; ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (ev.imag() > 0.0) moduli.push_back(std::abs(ev));
  }
  std::sort(moduli.rbegin(), moduli.rend());
  return moduli;
}

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// ab-interleaved → xp-block by explicit index bookkeeping.
MatrixXd ab_to_xp(const MatrixXd& m) {
  const int n = static_cast<int>(m.rows() / 2);
  MatrixXd out(2 * n, 2 * n);
  auto src = [n](int i) { return i < n ? 2 * i : 2 * (i - n) + 1; };
  for (int i = 0; i < 2 * n; ++i) {
    for (int k = 0; k < 2 * n; ++k) out(i, k) = m(src(i), src(k));
  }
  return out;
}

/// Closed-form kernel of 2πħ·Op_W(ρ_Σ) for one mode, Σ = [[a, b], [b, c]]:
/// K(x, y) = (2πa)^{-1/2} e^{−X²/2a} e^{i(b/a)Xu/ħ − (c − b²/a)u²/2ħ²},
/// X = (x + y)/2, u = x − y.
MatrixXcd oracle_gaussian_state_kernel(const Grid1D& grid, const MatrixXd& sigma, double hbar) {
  const double a = sigma(0, 0);
  const double b = sigma(0, 1);
  const double c = sigma(1, 1);
  MatrixXcd k(grid.n, grid.n);
  for (int l = 0; l < grid.n; ++l) {
    for (int j = 0; j < grid.n; ++j) {
      const double x = grid.at(j);
      const double y = grid.at(l);
      const double mid = 0.5 * (x + y);
      const double u = x - y;
      const double mag = std::exp(-mid * mid / (2.0 * a) - (c - b * b / a) * u * u / (2.0 * hbar * hbar)) /
                         std::sqrt(2.0 * pi * a);
      k(j, l) = std::polar(mag, (b / a) * mid * u / hbar);
    }
  }
  return k;
}

/// One-mode centered Gaussian density, evaluated independently of
/// gaussian_wigner_eval.
double oracle_rho(const MatrixXd& sigma, double x, double p) {
  const double det = sigma(0, 0) * sigma(1, 1) - sigma(0, 1) * sigma(1, 0);
  const double q = (sigma(1, 1) * x * x - 2.0 * sigma(0, 1) * x * p + sigma(0, 0) * p * p) / det;
  return std::exp(-0.5 * q) / (2.0 * pi * std::sqrt(det));
}

// ---------------------------------------------------------------------------

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

/// Traces collected while building the operators of criteria 3 and 4.
struct TracePair {
  std::string label;
  std::complex<double> matrix;
  std::complex<double> symbol;
};

struct Context {
  Options options;
  Rng rng;
  std::vector<TracePair> traces;
};

double span(const Context& ctx, double units) { return units * std::sqrt(ctx.options.hbar); }

Result criterion_wigner_closed_form(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const Grid1D grid = Grid1D::symmetric(256, span(ctx, 8.0));
  const PhaseFunction w = wigner(standard_gaussian(grid, hbar), hbar);
  double err = 0.0;
  for (int h = 0; h < w.grid.x.n; ++h) {
    for (int k = 0; k < w.grid.p.n; ++k) {
      const double x = w.grid.x.at(h);
      const double p = w.grid.p.at(k);
      const double exact = std::exp(-(x * x + p * p) / hbar) / (pi * hbar);
      err = std::max(err, std::abs(w.samples(h, k) - exact));
    }
  }
  const double t = timer.seconds();
  return {"1", "Wigner transform of the standard Gaussian matches its closed form",
          err < 1e-7 && t < 1.0,
          fmt::format("max |W - (πħ)^-1 e^(-|z|²/ħ)| = {:.2e} (limit 1e-7), N = 256, {:.3f} s (limit 1 s)",
                      err, t),
          t};
}

WaveFunction random_packet(Rng& rng, const Grid1D& grid, double hbar) {
  std::uniform_real_distribution<double> centre(-2.0, 2.0);
  std::uniform_real_distribution<double> width(0.3, 1.5);
  std::uniform_real_distribution<double> wave(-3.0, 3.0);
  std::normal_distribution<double> coeff(0.0, 1.0);
  const double root = std::sqrt(hbar);
  WaveFunction psi{grid, Eigen::VectorXcd::Zero(grid.n)};
  for (int m = 0; m < 3; ++m) {
    const double a = centre(rng) * root;
    const double s = width(rng) * hbar;
    const double k = wave(rng) / root;
    const std::complex<double> c(coeff(rng), coeff(rng));
    for (int j = 0; j < grid.n; ++j) {
      const double x = grid.at(j);
      psi.samples(j) += c * std::exp(-(x - a) * (x - a) / (2.0 * s)) * std::polar(1.0, k * x);
    }
  }
  return psi;
}

Result criterion_marginal_identity(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const Grid1D grid = Grid1D::symmetric(256, span(ctx, 8.0));
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const WaveFunction psi = random_packet(ctx.rng, grid, hbar);
    const WaveFunction phi = random_packet(ctx.rng, grid, hbar);
    std::complex<double> direct = 0.0;
    for (int j = 0; j < grid.n; ++j) direct += psi.samples(j) * std::conj(phi.samples(j)) * grid.dx;
    const std::complex<double> integral = cross_wigner(psi, phi, hbar).integral();
    worst = std::max(worst, std::abs(integral - direct));
  }
  const double t = timer.seconds();
  return {"2", "Cross-Wigner integrates to the L² inner product (20 random pairs)",
          worst < 1e-8 && t < 5.0,
          fmt::format("max |∫W(ψ,φ) - (ψ|φ)| = {:.2e} (limit 1e-8), {:.3f} s (limit 5 s)", worst, t),
          t};
}

Result criterion_two_routes(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const double root = std::sqrt(hbar);
  const Grid1D grid = Grid1D::symmetric(128, span(ctx, 8.0));
  const PhaseGrid quad = quadrature_grid(grid, hbar);
  auto bump = [&](double x0, double p0, double vx, double vp, double cxp) {
    MatrixXd s(2, 2);
    s << vx * hbar, cxp * hbar, cxp * hbar, vp * hbar;
    return [=](double x, double p) { return oracle_rho(s, x - x0 * root, p - p0 * root); };
  };
  const auto b1 = bump(1.0, -0.5, 1.0, 1.0, 0.0);
  const auto b2 = bump(-0.5, 0.3, 1.5, 0.6, 0.4);
  const auto b3 = bump(1.5, 1.0, 0.5, 0.8, -0.2);
  struct Case {
    std::string name;
    std::function<std::complex<double>(double, double)> symbol;
    WaveFunction window;
  };
  const GaussianWindow squeezed{MatrixXd::Constant(1, 1, 2.0), MatrixXd::Constant(1, 1, 0.5)};
  const std::vector<Case> cases = {
      {"gaussian bump / φ₀", b1, standard_gaussian(grid, hbar)},
      {"correlated gaussian / hermite-1", b2, hermite_function(grid, 1, hbar)},
      {"signed two-bump / squeezed φ_{X,Y}",
       [&](double x, double p) { return b1(x, p) - 0.6 * b3(x, p); },
       sample_window(squeezed, grid, hbar)},
      {"bump × (1 + xp/ħ) / hermite-1",
       [&](double x, double p) { return b2(x, p) * (1.0 + x * p / hbar); },
       hermite_function(grid, 1, hbar)},
      {"gaussian bump / hermite-2", b3, hermite_function(grid, 2, hbar)},
  };
  double worst = 0.0;
  double direct_seconds = 0.0;
  std::string per_case;
  for (const Case& c : cases) {
    const PhaseFunction a = sample(quad, c.symbol);
    Timer direct_timer;
    const OperatorMatrix direct = toeplitz_operator_direct(a, c.window, hbar);
    direct_seconds += direct_timer.seconds();
    const PhaseFunction weyl_symbol = toeplitz_weyl_symbol(a, c.window, hbar);
    const OperatorMatrix weyl = weyl_symbol_to_kernel(weyl_symbol, hbar);
    const double diff = max_abs(MatrixXcd(direct.entries - weyl.entries));
    worst = std::max(worst, diff);
    per_case += fmt::format("{}{}: {:.1e}", per_case.empty() ? "" : "; ", c.name, diff);
    ctx.traces.push_back({"Toeplitz " + c.name, direct.trace(), trace_via_symbol(weyl_symbol, hbar)});
  }
  const double t = timer.seconds();
  return {"3", "Direct and Weyl-symbol routes build the same Toeplitz operator (5 pairs)",
          worst < 1e-6 && direct_seconds < 60.0,
          fmt::format("max-abs route difference {:.2e} (limit 1e-6) [{}], direct route {:.2f} s at N = 128 "
                      "(limit 60 s)",
                      worst, per_case, direct_seconds),
          t};
}

Result criterion_density(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const Grid1D grid = Grid1D::symmetric(256, span(ctx, 8.0));
  const MatrixXd sigma_mu = MatrixXd::Identity(2, 2);
  const PhaseFunction mu =
      sample(quadrature_grid(grid, hbar), [&](double x, double p) { return oracle_rho(sigma_mu, x, p); });
  const WaveFunction phi = standard_gaussian(grid, hbar);
  const OperatorMatrix rho = toeplitz_density(mu, phi, hbar);
  const DensityReport report = verify_density_operator(rho, 1e-6);
  const MatrixXcd exact =
      oracle_gaussian_state_kernel(grid, sigma_mu + 0.5 * hbar * MatrixXd::Identity(2, 2), hbar);
  const double kernel_err = max_abs(MatrixXcd(rho.entries - exact));
  const double trace_err = std::abs(report.trace - 1.0);

  const PhaseFunction symbol = toeplitz_weyl_symbol(mu, phi, hbar);
  ctx.traces.push_back({"density", rho.trace(), trace_via_symbol(symbol, hbar)});

  const bool ok = trace_err <= 1e-6 && report.min_eig >= -1e-8 &&
                  report.hermiticity_residual < 1e-9 && kernel_err < 1e-6;
  const double t = timer.seconds();
  return {"4", "Toeplitz density with Gaussian weight is the Gaussian state Σμ + (ħ/2)I", ok,
          fmt::format("|tr - 1| = {:.2e} (limit 1e-6), min eig = {:.2e} (limit -1e-8), hermiticity "
                      "{:.2e} (limit 1e-9), kernel vs closed form {:.2e} (limit 1e-6)",
                      trace_err, report.min_eig, report.hermiticity_residual, kernel_err),
          t};
}

Result criterion_lemma2(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const Tolerances tol;
  int disagreements = 0;
  int valid = 0;
  int near_boundary = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 3;
    CovarianceMatrix sigma;
    switch (trial % 4) {
      case 0: sigma = fixtures::random_spd(ctx.rng, n, hbar, 0.05 * hbar); break;
      case 1: sigma = fixtures::random_covariance_with_spectrum(ctx.rng, n, 0.3 * hbar, 1.2 * hbar); break;
      case 2: sigma = fixtures::random_covariance_with_spectrum(ctx.rng, n, 0.45 * hbar, 0.55 * hbar); break;
      default:
        // Pure states: every symplectic eigenvalue exactly ħ/2.
        sigma = fixtures::random_covariance_with_spectrum(ctx.rng, n, 0.5 * hbar, 0.5 * hbar);
    }
    const double lambda_min = oracle_symplectic_spectrum(sigma.matrix).back();
    const bool oracle_valid = lambda_min >= 0.5 * hbar;
    const GaussianState state{sigma, hbar};
    const bool positive = quantum_positivity(state, tol.psd).valid;
    const bool lemma = lemma2_check(state, tol);
    const bool boundary = std::abs(lambda_min - 0.5 * hbar) <= 1e-8;
    near_boundary += boundary ? 1 : 0;
    valid += oracle_valid ? 1 : 0;
    if (!boundary && (positive != oracle_valid || lemma != oracle_valid)) ++disagreements;
  }
  const double t = timer.seconds();
  return {"5", "Quantum positivity ⇔ all symplectic eigenvalues ≥ ħ/2 (1000 random Σ, n = 1..3)",
          disagreements == 0 && t < 10.0,
          fmt::format("{} disagreements outside 1e-8 ({} valid, {} within 1e-8 of ħ/2), {:.2f} s (limit 10 s)",
                      disagreements, valid, near_boundary, t),
          t};
}

Result criterion_williamson(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  double worst_sym = 0.0;
  double worst_recon = 0.0;
  double worst_spectrum = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const CovarianceMatrix sigma =
        trial % 2 == 0 ? fixtures::random_spd(ctx.rng, n, hbar, 0.05 * hbar)
                       : fixtures::random_covariance_with_spectrum(ctx.rng, n, 0.5 * hbar, 3.0 * hbar);
    const WilliamsonDecomposition w = williamson(sigma);
    const MatrixXd& s = w.s.matrix;
    const MatrixXd j = oracle_j(n);
    VectorXd d(2 * n);
    for (int k = 0; k < n; ++k) d(k) = d(n + k) = w.spectrum.values[k];
    worst_sym = std::max(worst_sym, max_abs(MatrixXd(s.transpose() * j * s - j)));
    worst_recon = std::max(worst_recon, max_abs(MatrixXd(s * d.asDiagonal() * s.transpose() - sigma.matrix)) /
                                            max_abs(sigma.matrix));
    const std::vector<double> oracle = oracle_symplectic_spectrum(sigma.matrix);
    for (int k = 0; k < n; ++k) {
      worst_spectrum = std::max(worst_spectrum, std::abs(oracle[k] - w.spectrum.values[k]) / oracle[0]);
    }
  }
  const double t = timer.seconds();
  return {"6", "Williamson diagonalization residuals (200 random Σ, n = 1..3)",
          worst_sym < 1e-8 && worst_recon < 1e-8 && worst_spectrum < 1e-8 && t < 5.0,
          fmt::format("max |SᵀJS - J| = {:.2e}, max |SDSᵀ - Σ|/|Σ| = {:.2e}, spectrum vs eigensolver "
                      "{:.2e} (limits 1e-8), {:.2f} s (limit 5 s)",
                      worst_sym, worst_recon, worst_spectrum, t),
          t};
}

Result criterion_prop_toe(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  double min_mu_eig = std::numeric_limits<double>::infinity();
  double worst_recon = 0.0;
  int refused = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const CovarianceMatrix sigma =
        fixtures::random_covariance_with_spectrum(ctx.rng, n, 0.75 * hbar, 2.0 * hbar);
    try {
      const GaussianToeplitzSplit split = gaussian_toeplitz_decompose({sigma, hbar}, 1e-10);
      Eigen::SelfAdjointEigenSolver<MatrixXd> eig(split.sigma_mu.matrix);
      min_mu_eig = std::min(min_mu_eig, eig.eigenvalues().minCoeff());
      worst_recon = std::max(worst_recon,
                             max_abs(MatrixXd(split.sigma_mu.matrix + split.sigma_window.matrix - sigma.matrix)) /
                                 max_abs(sigma.matrix));
    } catch (const NotStrictlyToeplitz&) {
      ++refused;
    }
  }

  // Grid check: ρ_{Σ″} ∗ Wφ against ρ_Σ on the symbol grid, with φ the
  // sampled window and Wφ its numerical Wigner transform. Σ is redrawn until
  // its variances fit the ±12√ħ grid to below 1e-12.
  const Grid1D grid = Grid1D::symmetric(256, span(ctx, 12.0));
  const PhaseGrid phase = symbol_grid(grid, hbar);
  double worst_grid = 0.0;
  for (int done = 0; done < 5;) {
    const CovarianceMatrix sigma =
        fixtures::random_covariance_with_spectrum(ctx.rng, 1, 0.75 * hbar, 1.5 * hbar);
    if (sigma.matrix.diagonal().maxCoeff() > 2.5 * hbar) continue;
    const GaussianToeplitzSplit split = gaussian_toeplitz_decompose({sigma, hbar}, 1e-10);
    const WaveFunction phi = sample_window(split.window, grid, hbar);
    const PhaseFunction w = wigner(phi, hbar);
    const PhaseFunction mu =
        sample(phase, [&](double x, double p) { return oracle_rho(split.sigma_mu.matrix, x, p); });
    const PhaseFunction conv = phase_convolve(mu, w);
    for (int h = 0; h < phase.x.n; ++h) {
      for (int k = 0; k < phase.p.n; ++k) {
        const double exact = oracle_rho(sigma.matrix, phase.x.at(h), phase.p.at(k));
        worst_grid = std::max(worst_grid, std::abs(conv.samples(h, k) - exact));
      }
    }
    ++done;
  }
  const double t = timer.seconds();
  const bool ok = refused == 0 && min_mu_eig > 0.0 && worst_recon < 1e-9 && worst_grid < 1e-6;
  return {"7", "Gaussian states with λ ≥ 0.75ħ split as ρ_{Σ″} ∗ Wφ (50 random Σ, 5 grid checks)", ok,
          fmt::format("{} refused, min eig Σ″ = {:.3e} (> 0), reconstruction {:.2e} (limit 1e-9), grid "
                      "max |ρ_Σ″ ∗ Wφ - ρ_Σ| = {:.2e} (limit 1e-6)",
                      refused, min_mu_eig, worst_recon, worst_grid),
          t};
}

Result criterion_ppt(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const SplitSpec split{1, 1};
  bool all_entangled = true;
  double worst = 0.0;
  for (double r : {0.1, 0.3, 0.5, 1.0}) {
    const CovarianceMatrix sigma = two_mode_squeezed(r, hbar);
    const PptReport report = ppt_check(sigma, split, hbar);
    all_entangled = all_entangled && !report.ppt;
    // Oracle: flip p_B (index 3 in ab-interleaved order) by hand, then take
    // the eigenvalues of JΣ̃.
    MatrixXd flipped = sigma.matrix;
    flipped.row(3) *= -1.0;
    flipped.col(3) *= -1.0;
    const double lambda = oracle_symplectic_spectrum(ab_to_xp(flipped)).back();
    const double expected = 0.5 * hbar * std::exp(-2.0 * r);
    worst = std::max({worst, std::abs(lambda - expected), std::abs(report.min_symplectic - expected)});
  }
  const double t = timer.seconds();
  return {"8", "PPT detects two-mode squeezing, r ∈ {0.1, 0.3, 0.5, 1.0}",
          all_entangled && worst < 1e-8,
          fmt::format("all entangled: {}, max |λ̃_min - (ħ/2)e^(-2r)| = {:.2e} (limit 1e-8)",
                      all_entangled ? "yes" : "no", worst),
          t};
}

Result criterion_disentangler(Context& ctx) {
  Timer timer;
  const double hbar = ctx.options.hbar;
  const SplitSpec split{1, 1};
  std::vector<CovarianceMatrix> inputs;
  for (double r : {0.1, 0.3, 0.5, 1.0}) inputs.push_back(two_mode_squeezed(r, hbar));
  for (int i = 0; i < 50; ++i) {
    inputs.push_back(fixtures::random_covariance_with_spectrum(ctx.rng, 2, 0.5 * hbar, 2.0 * hbar));
  }
  double worst_residual = std::numeric_limits<double>::infinity();
  double worst_u = 0.0;
  int rejected = 0;
  const MatrixXd j = oracle_j(2);
  for (const CovarianceMatrix& sigma : inputs) {
    const SeparabilityCertificate cert = disentangle_by_rotation(sigma, split, hbar);
    const MatrixXd& u = cert.u.matrix;
    worst_residual = std::min(worst_residual, cert.residual_min_eig);
    worst_u = std::max({worst_u, max_abs(MatrixXd(u.transpose() * u - MatrixXd::Identity(4, 4))),
                        max_abs(MatrixXd(u.transpose() * j * u - j))});
    const MatrixXd sa = 0.5 * hbar * MatrixXd(cert.delta_a.asDiagonal());
    const MatrixXd sb = 0.5 * hbar * MatrixXd(cert.delta_b.asDiagonal());
    if (!verify_ww_certificate(cert.rotated, sa, sb, split, hbar)) ++rejected;
  }
  const double t = timer.seconds();
  return {"9", "Symplectic rotation disentangles (4 squeezed + 50 random two-mode Σ)",
          worst_residual >= -1e-9 && worst_u < 1e-9 && rejected == 0,
          fmt::format("min residual eig = {:.2e} (limit -1e-9), max U orthogonality/symplecticity "
                      "defect {:.2e} (limit 1e-9), {} certificates rejected",
                      worst_residual, worst_u, rejected),
          t};
}

/// Ī_B = diag(1, 1, 1, −1) on (x_A, x_B, p_A, p_B).
MatrixXd oracle_reflection() {
  MatrixXd r = MatrixXd::Identity(4, 4);
  r(3, 3) = -1.0;
  return r;
}

Result criterion_window_transpose(Context& ctx) {
  Timer timer;
  const SplitSpec split{1, 1};
  const MatrixXd r = oracle_reflection();
  const MatrixXd j = oracle_j(2);
  int matched = 0;
  int refused = 0;
  double worst = 0.0;
  double min_target_defect = std::numeric_limits<double>::infinity();
  std::string first_error;
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianWindow w = fixtures::random_window(ctx.rng, 2);
    const MatrixXd target = r * window_gramian(w) * r;
    // A Gramian is symplectic; record how far the target is from being one.
    min_target_defect = std::min(min_target_defect, max_abs(MatrixXd(target.transpose() * j * target - j)));
    try {
      const double diff = max_abs(MatrixXd(window_gramian(gaussian_window_partial_transpose(w, split)) - target));
      worst = std::max(worst, diff);
      if (diff <= 1e-10) ++matched;
    } catch (const Error& e) {
      ++refused;
      if (first_error.empty()) first_error = e.what();
    }
  }
  const double t = timer.seconds();
  return {"10", "Window partial transpose: Gramian equals Ī_B G Ī_B (20 random (X, Y), n_A = n_B = 1)",
          matched == 20,
          fmt::format("{}/20 matched to 1e-10, {} refused, worst mismatch {:.2e}; min |MᵀJM - J| over "
                      "targets M = Ī_B G Ī_B is {:.2e}, so no target is a window Gramian{}",
                      matched, refused, worst, min_target_defect,
                      first_error.empty() ? "" : " (\"" + first_error + "\")"),
          t};
}

Result companion_product_window_transpose(Context& ctx) {
  Timer timer;
  const SplitSpec split{1, 1};
  const MatrixXd r = oracle_reflection();
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianWindow a = fixtures::random_window(ctx.rng, 1);
    const GaussianWindow b = fixtures::random_window(ctx.rng, 1);
    GaussianWindow w{MatrixXd::Zero(2, 2), MatrixXd::Zero(2, 2)};
    w.x(0, 0) = a.x(0, 0);
    w.x(1, 1) = b.x(0, 0);
    w.y(0, 0) = a.y(0, 0);
    w.y(1, 1) = b.y(0, 0);
    const MatrixXd target = r * window_gramian(w) * r;
    worst = std::max(worst, max_abs(MatrixXd(window_gramian(gaussian_window_partial_transpose(w, split)) - target)));
  }
  const double t = timer.seconds();
  Result result{"10-product", "Window partial transpose on product windows φ_A ⊗ φ_B (20 random)",
                worst <= 1e-10,
                fmt::format("max |G(T w) - Ī_B G Ī_B| = {:.2e} (limit 1e-10)", worst), t};
  result.companion = true;
  return result;
}

Result criterion_trace_coherence(Context& ctx) {
  Timer timer;
  double worst = 0.0;
  std::string worst_label;
  for (const TracePair& pair : ctx.traces) {
    const double diff = std::abs(pair.matrix - pair.symbol);
    if (diff >= worst) {
      worst = diff;
      worst_label = pair.label;
    }
  }
  const double t = timer.seconds();
  return {"11", "Matrix trace equals (2πħ)^-1 ∫ symbol for the operators of criteria 3-4",
          !ctx.traces.empty() && worst < 1e-6,
          fmt::format("{} operators, max |tr K - (2πħ)^-1 ∫a| = {:.2e} (limit 1e-6, worst: {})",
                      ctx.traces.size(), worst, worst_label),
          t};
}

}  // namespace

std::string format_line(const Result& result) {
  return fmt::format("{} {} {}: {} ({}) [{:.2f} s]", result.passed ? "PASS" : "FAIL",
                     result.companion ? "companion" : "criterion", result.id, result.title,
                     result.detail, result.seconds);
}

std::vector<Result> run_all(const Options& options, const std::function<void(const Result&)>& sink) {
  Context ctx{options, Rng(options.seed), {}};
  std::vector<Result> results;
  auto run = [&](Result (*check)(Context&), const std::string& id, const std::string& title) {
    Result result;
    try {
      result = check(ctx);
    } catch (const std::exception& e) {
      result = {id, title, false, fmt::format("threw: {}", e.what()), 0.0};
      result.companion = id.find('-') != std::string::npos;
    }
    if (sink) sink(result);
    results.push_back(std::move(result));
  };
  run(criterion_wigner_closed_form, "1", "Wigner closed form");
  run(criterion_marginal_identity, "2", "Marginal identity");
  run(criterion_two_routes, "3", "Two Toeplitz routes");
  run(criterion_density, "4", "Toeplitz density");
  run(criterion_lemma2, "5", "Positivity equivalence");
  run(criterion_williamson, "6", "Williamson");
  run(criterion_prop_toe, "7", "Gaussian Toeplitz split");
  run(criterion_ppt, "8", "PPT");
  run(criterion_disentangler, "9", "Disentangler");
  run(criterion_window_transpose, "10", "Window partial transpose");
  run(companion_product_window_transpose, "10-product", "Product window partial transpose");
  run(criterion_trace_coherence, "11", "Trace coherence");
  return results;
}

bool all_criteria_passed(const std::vector<Result>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const Result& r) { return r.companion || r.passed; });
}

}  // namespace phasekit::acceptance
