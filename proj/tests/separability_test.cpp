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

#include <doctest.h>

#include "oracles.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/fixtures.hpp"
#include "phasekit/separability.hpp"
#include "phasekit/transforms.hpp"

using namespace phasekit;
using Eigen::MatrixXd;

namespace {

const SplitSpec kOneOne{1, 1};

/// (ħ/2)·S Sᵀ·t for a random one-mode symplectic S and t ≥ 1, interleaved.
MatrixXd random_local_state(fixtures::Rng& rng, double hbar) {
  std::uniform_real_distribution<double> thermal(1.0, 3.0);
  const MatrixXd s = fixtures::random_symplectic(rng, 1, 1.0);
  return 0.5 * hbar * thermal(rng) * s * s.transpose();
}

}  // namespace

TEST_CASE("partial transpose flips the momenta of B") {
  const CovarianceMatrix tms = two_mode_squeezed(0.5, 1.0);
  const CovarianceMatrix pt = partial_transpose_cov(tms, kOneOne);
  // Interleaved (x_A, p_A, x_B, p_B): every entry touching p_B changes sign once.
  MatrixXd want = tms.matrix;
  for (int i = 0; i < 4; ++i) {
    if (i != 3) {
      want(i, 3) = -want(i, 3);
      want(3, i) = -want(3, i);
    }
  }
  CHECK(oracle::max_abs(pt.matrix - want) == 0.0);
  CHECK(oracle::max_abs(partial_transpose_cov(pt, kOneOne).matrix - tms.matrix) == 0.0);

  const CovarianceMatrix diag{MatrixXd(Eigen::Vector4d(1, 2, 3, 4).asDiagonal())};
  CHECK(oracle::max_abs(partial_transpose_cov(diag, kOneOne).matrix - diag.matrix) == 0.0);
  CHECK_THROWS_AS(partial_transpose_cov(diag, SplitSpec{1, 2}), InvalidDimension);
}

TEST_CASE("PPT test") {
  SUBCASE("vacuum is PPT") {
    const auto r = ppt_check({0.5 * MatrixXd::Identity(4, 4)}, kOneOne, 1.0);
    CHECK(r.ppt);
    CHECK(r.min_symplectic == doctest::Approx(0.5));
  }
  SUBCASE("two-mode squeezed vacuum is entangled") {
    for (double r : {0.1, 0.5, 1.0}) {
      const auto rep = ppt_check(two_mode_squeezed(r, 1.0), kOneOne, 1.0);
      CHECK_FALSE(rep.ppt);
      CHECK(rep.min_symplectic == doctest::Approx(0.5 * std::exp(-2 * r)).epsilon(1e-10));
      // Oracle: the general eigensolver on the hand-flipped matrix.
      MatrixXd flipped = reorder(two_mode_squeezed(r, 1.0), Ordering::kXpBlock).matrix;
      const MatrixXd m = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
      flipped = m * flipped * m;
      CHECK(rep.min_symplectic == doctest::Approx(oracle::symplectic_spectrum(flipped).back()).epsilon(1e-10));
    }
  }
  SUBCASE("random separable states are PPT") {
    fixtures::Rng rng(23);
    for (int t = 0; t < 100; ++t) {
      MatrixXd sigma = Eigen::MatrixXd::Zero(4, 4);
      sigma.topLeftCorner(2, 2) = random_local_state(rng, 1.0);
      sigma.bottomRightCorner(2, 2) = random_local_state(rng, 1.0);
      const MatrixXd extra = fixtures::gaussian_matrix(rng, 4, 2);
      sigma += 0.2 * extra * extra.transpose();
      CHECK(ppt_check({sigma, Ordering::kAbInterleaved}, kOneOne, 1.0).ppt);
    }
  }
  SUBCASE("non-quantum input is rejected") {
    CHECK_THROWS_AS(ppt_check({0.1 * MatrixXd::Identity(4, 4)}, kOneOne, 1.0), DomainError);
  }
}

TEST_CASE("separability certificates") {
  const double hbar = 1.0;
  const MatrixXd vac = 0.5 * hbar * MatrixXd::Identity(2, 2);
  CHECK(verify_ww_certificate({hbar * MatrixXd::Identity(4, 4)}, vac, vac, kOneOne, hbar));
  CHECK(verify_ww_certificate({0.5 * hbar * MatrixXd::Identity(4, 4)}, vac, vac, kOneOne, hbar));
  // Σ_A below the uncertainty bound is not a state.
  CHECK_FALSE(verify_ww_certificate({hbar * MatrixXd::Identity(4, 4)}, 0.3 * vac, vac, kOneOne, hbar));
  // Σ_A ⊕ Σ_B larger than Σ.
  CHECK_FALSE(verify_ww_certificate({0.5 * hbar * MatrixXd::Identity(4, 4)}, 2.0 * vac, vac, kOneOne, hbar));
  CHECK_THROWS_AS(verify_ww_certificate({MatrixXd::Identity(4, 4)}, MatrixXd::Identity(4, 4), vac, kOneOne, hbar),
                  InvalidDimension);

  // No local pair certifies an entangled state.
  fixtures::Rng rng(29);
  const CovarianceMatrix tms = two_mode_squeezed(0.5, hbar);
  int accepted = 0;
  for (int t = 0; t < 100000; ++t) {
    accepted += verify_ww_certificate(tms, random_local_state(rng, hbar), random_local_state(rng, hbar), kOneOne,
                                      hbar);
  }
  CHECK(accepted == 0);
}

TEST_CASE("disentangling symplectic rotation") {
  const double hbar = 1.0;
  fixtures::Rng rng(37);
  std::vector<CovarianceMatrix> inputs = {
      {0.5 * MatrixXd::Identity(4, 4)}, two_mode_squeezed(0.5, hbar), two_mode_squeezed(1.2, hbar)};
  for (int t = 0; t < 20; ++t) inputs.push_back(fixtures::random_covariance_with_spectrum(rng, 2, 0.5, 1.5));
  for (const CovarianceMatrix& sigma : inputs) {
    const auto cert = disentangle_by_rotation(sigma, kOneOne, hbar);
    const MatrixXd& u = cert.u.matrix;
    const MatrixXd j = oracle::j_xp(2);
    CHECK(oracle::max_abs(u.transpose() * u - MatrixXd::Identity(4, 4)) < 1e-9);
    CHECK(oracle::max_abs(u.transpose() * j * u - j) < 1e-9);
    const MatrixXd xp = reorder(sigma, Ordering::kXpBlock).matrix;
    CHECK(oracle::max_abs(cert.rotated.matrix - u * xp * u.transpose()) < 1e-10);
    CHECK(cert.residual_min_eig >= -1e-9);
    CHECK(cert.delta_a(0) * cert.delta_a(1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(cert.delta_b(0) * cert.delta_b(1) == doctest::Approx(1.0).epsilon(1e-9));
    // The rotated state carries a product certificate built from Δ.
    const MatrixXd sa = 0.5 * hbar * MatrixXd(cert.delta_a.asDiagonal());
    const MatrixXd sb = 0.5 * hbar * MatrixXd(cert.delta_b.asDiagonal());
    CHECK(verify_ww_certificate(cert.rotated, sa, sb, kOneOne, hbar));
  }
  CHECK_THROWS_AS(disentangle_by_rotation({0.1 * MatrixXd::Identity(4, 4)}, kOneOne, hbar), DomainError);
}

TEST_CASE("window partial transpose") {
  SUBCASE("real product window is unchanged") {
    GaussianWindow w{MatrixXd(Eigen::Vector2d(1.5, 0.7).asDiagonal()), MatrixXd::Zero(2, 2)};
    const GaussianWindow out = gaussian_window_partial_transpose(w, kOneOne);
    CHECK(oracle::max_abs(out.x - w.x) == 0.0);
    CHECK(oracle::max_abs(out.y) == 0.0);
  }
  SUBCASE("product window conjugates the B factor") {
    GaussianWindow w{MatrixXd(Eigen::Vector2d(1.5, 0.7).asDiagonal()),
                     MatrixXd(Eigen::Vector2d(0.3, -0.4).asDiagonal())};
    const GaussianWindow out = gaussian_window_partial_transpose(w, kOneOne);
    CHECK(out.y(0, 0) == 0.3);
    CHECK(out.y(1, 1) == 0.4);
    const GaussianWindow twice = gaussian_window_partial_transpose(out, kOneOne);
    CHECK(oracle::max_abs(twice.y - w.y) == 0.0);
    // Gramian rule Ī_B G Ī_B, with Ī_B = diag(1, 1, 1, -1) on (x_A, x_B, p_A, p_B).
    const MatrixXd r = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
    CHECK(oracle::max_abs(window_gramian(out) - r * window_gramian(w) * r) < 1e-14);
  }
  SUBCASE("coupled windows are refused: Ī_B G Ī_B is not a window Gramian") {
    MatrixXd y(2, 2);
    y << 0, 1, 1, 0;
    const GaussianWindow w{MatrixXd::Identity(2, 2), y};
    const MatrixXd r = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
    const MatrixXd target = r * window_gramian(w) * r;
    const MatrixXd j = oracle::j_xp(2);
    CHECK(oracle::max_abs(target.transpose() * j * target - j) > 0.1);
    CHECK_THROWS_AS(gaussian_window_partial_transpose(w, kOneOne), DomainError);
  }
  SUBCASE("sampled product windows") {
    const Grid1D g = Grid1D::symmetric(32, 6.0);
    const WaveFunction a = hermite_function(g, 1, 1.0);
    const WaveFunction b = heisenberg_translate(standard_gaussian(g, 1.0), 0.0, 0.8, 1.0);
    const Eigen::MatrixXcd prod = product_window(a, b);
    const Eigen::MatrixXcd pt = product_window_partial_transpose(a, b);
    for (int i = 0; i < g.n; ++i) {
      for (int k = 0; k < g.n; ++k) {
        CHECK(std::abs(prod(i, k) - a.samples(i) * b.samples(k)) == 0.0);
        CHECK(std::abs(pt(i, k) - a.samples(i) * std::conj(b.samples(k))) == 0.0);
      }
    }
    // A real B factor is its own conjugate.
    const WaveFunction real_b = standard_gaussian(g, 1.0);
    CHECK(oracle::max_abs(product_window_partial_transpose(a, real_b) - product_window(a, real_b)) == 0.0);
  }
}

TEST_CASE("two-mode squeezed covariance") {
  const CovarianceMatrix tms = two_mode_squeezed(0.5, 2.0);
  CHECK(tms.ordering == Ordering::kAbInterleaved);
  CHECK(tms.matrix(0, 0) == doctest::Approx(std::cosh(1.0)));
  CHECK(tms.matrix(0, 2) == doctest::Approx(std::sinh(1.0)));
  CHECK(tms.matrix(1, 3) == doctest::Approx(-std::sinh(1.0)));
  CHECK(is_pure({tms, 2.0}, 1e-9));
}
