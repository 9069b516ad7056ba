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

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/fixtures.hpp"
#include "phasekit/symplectic.hpp"

using namespace phasekit;
using Eigen::MatrixXd;

namespace {

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

MatrixXd diag4(double a, double b, double c, double d) {
  return Eigen::Vector4d(a, b, c, d).asDiagonal();
}

}  // namespace

TEST_CASE("standard form matches the hand-written blocks") {
  MatrixXd j1(2, 2);
  j1 << 0, 1, -1, 0;
  CHECK(oracle::max_abs(standard_symplectic_form(1).matrix - j1) == 0.0);
  for (int n = 1; n <= 4; ++n) {
    const MatrixXd j = standard_symplectic_form(n).matrix;
    CHECK(oracle::max_abs(j - oracle::j_xp(n)) == 0.0);
    CHECK(oracle::max_abs(j * j + MatrixXd::Identity(2 * n, 2 * n)) == 0.0);
    CHECK(oracle::max_abs(j.transpose() + j) == 0.0);
  }
  // Interleaved ordering pairs (x_k, p_k) into 2 × 2 blocks.
  const MatrixXd jab = standard_symplectic_form(2, Ordering::kAbInterleaved).matrix;
  CHECK(jab(0, 1) == 1.0);
  CHECK(jab(1, 0) == -1.0);
  CHECK(jab(2, 3) == 1.0);
  CHECK(jab(0, 2) == 0.0);
  CHECK_THROWS_AS(standard_symplectic_form(0), InvalidDimension);
}

TEST_CASE("symplectic membership") {
  CHECK(is_symplectic(MatrixXd::Identity(2, 2), 1e-12));
  MatrixXd squeeze(2, 2);
  squeeze << 2, 0, 0, 0.5;
  CHECK(is_symplectic(squeeze, 1e-12));
  CHECK_FALSE(is_symplectic(2.0 * MatrixXd::Identity(2, 2), 1e-6));
  MatrixXd shear(2, 2);
  shear << 1, 0.7, 0, 1;
  CHECK(is_symplectic(shear, 1e-12));
  CHECK_THROWS_AS(is_symplectic(MatrixXd::Identity(3, 3), 1e-9), InvalidDimension);

  fixtures::Rng rng(7);
  for (int n = 1; n <= 3; ++n) {
    const MatrixXd s = fixtures::random_symplectic(rng, n);
    const MatrixXd j = oracle::j_xp(n);
    CHECK(oracle::max_abs(s.transpose() * j * s - j) < 1e-12);
    CHECK(is_symplectic(s, 1e-9));
  }
}

TEST_CASE("symplectic eigenvalues agree with the eigenvalues of JΣ") {
  SUBCASE("vacuum") {
    const auto spec = symplectic_eigenvalues({0.5 * MatrixXd::Identity(2, 2)});
    REQUIRE(spec.values.size() == 1);
    CHECK(spec.values[0] == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("squeezed single mode") {
    MatrixXd s(2, 2);
    s << 2, 0, 0, 0.5;
    CHECK(symplectic_eigenvalues({s}).values[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("two modes carried by a random symplectic") {
    fixtures::Rng rng(11);
    const MatrixXd s = fixtures::random_symplectic(rng, 2);
    const MatrixXd sigma = s * diag4(2, 3, 2, 3) * s.transpose();
    const auto got = sorted_desc(symplectic_eigenvalues({sigma}).values);
    CHECK(got[0] == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(got[1] == doctest::Approx(2.0).epsilon(1e-10));
  }
  SUBCASE("random covariances versus the general eigensolver") {
    fixtures::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + trial % 4;
      const CovarianceMatrix sigma = fixtures::random_spd(rng, n);
      const auto got = sorted_desc(symplectic_eigenvalues(sigma).values);
      const auto want = oracle::symplectic_spectrum(sigma.matrix);
      REQUIRE(got.size() == want.size());
      for (size_t k = 0; k < got.size(); ++k) {
        CHECK(std::abs(got[k] - want[k]) < 1e-10 * want[0]);
      }
    }
  }
  SUBCASE("interleaved input gives the same spectrum") {
    fixtures::Rng rng(5);
    const CovarianceMatrix sigma = fixtures::random_spd(rng, 3);
    const auto a = sorted_desc(symplectic_eigenvalues(sigma).values);
    const auto b = sorted_desc(symplectic_eigenvalues(reorder(sigma, Ordering::kAbInterleaved)).values);
    for (size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-12));
  }
  SUBCASE("errors") {
    MatrixXd indefinite(2, 2);
    indefinite << 1, 0, 0, -1;
    CHECK_THROWS_AS(symplectic_eigenvalues({indefinite}), DomainError);
    MatrixXd skewed(2, 2);
    skewed << 1, 0.5, 0, 1;
    CHECK_THROWS_AS(symplectic_eigenvalues({skewed}), DomainError);
    CHECK_THROWS_AS(symplectic_eigenvalues({MatrixXd::Identity(3, 3)}), InvalidDimension);
  }
}

TEST_CASE("Williamson decomposition reconstructs Σ") {
  fixtures::Rng rng(21);
  std::vector<MatrixXd> inputs = {0.5 * MatrixXd::Identity(2, 2), diag4(1, 1, 1, 1)};
  MatrixXd squeezed(2, 2);
  squeezed << 2, 0, 0, 0.5;
  inputs.push_back(squeezed);
  for (int n = 1; n <= 4; ++n) inputs.push_back(fixtures::random_spd(rng, n).matrix);
  // Degenerate spectrum with a large symplectic distortion.
  const MatrixXd s4 = fixtures::random_symplectic(rng, 2, 1.0);
  inputs.push_back(s4 * diag4(0.5, 0.5, 0.5, 0.5) * s4.transpose());

  for (const MatrixXd& sigma : inputs) {
    const auto w = williamson({sigma});
    const int n = static_cast<int>(sigma.rows() / 2);
    const MatrixXd j = oracle::j_xp(n);
    const MatrixXd& s = w.s.matrix;
    CHECK(oracle::max_abs(s.transpose() * j * s - j) < 1e-9);
    CHECK(oracle::max_abs(s * w.normal_form() * s.transpose() - sigma) < 1e-8 * oracle::max_abs(sigma));
    CHECK(s.determinant() == doctest::Approx(1.0).epsilon(1e-8));
    const auto want = oracle::symplectic_spectrum(sigma);
    const auto got = sorted_desc(w.spectrum.values);
    for (size_t k = 0; k < got.size(); ++k) CHECK(std::abs(got[k] - want[k]) < 1e-9 * want[0]);
  }
}

TEST_CASE("positive definite symplectic matrices diagonalize by a symplectic rotation") {
  SUBCASE("identity") {
    const auto d = diagonalize_pds(MatrixXd::Identity(2, 2));
    CHECK(oracle::max_abs(d.u.matrix.transpose() * d.u.matrix - MatrixXd::Identity(2, 2)) < 1e-12);
    CHECK(d.delta(0) == doctest::Approx(1.0));
    CHECK(d.delta(1) == doctest::Approx(1.0));
  }
  SUBCASE("diagonal squeeze") {
    MatrixXd p(2, 2);
    p << 4, 0, 0, 0.25;
    const auto d = diagonalize_pds(p);
    const MatrixXd rebuilt = d.u.matrix.transpose() * MatrixXd(d.delta.asDiagonal()) * d.u.matrix;
    CHECK(oracle::max_abs(rebuilt - p) < 1e-12);
    CHECK(d.delta(0) * d.delta(1) == doctest::Approx(1.0));
  }
  SUBCASE("random") {
    fixtures::Rng rng(31);
    for (int n = 1; n <= 3; ++n) {
      const MatrixXd s = fixtures::random_symplectic(rng, n, 0.8);
      const MatrixXd p = s * s.transpose();
      const auto d = diagonalize_pds(p);
      const MatrixXd& u = d.u.matrix;
      const MatrixXd id = MatrixXd::Identity(2 * n, 2 * n);
      const MatrixXd j = oracle::j_xp(n);
      CHECK(oracle::max_abs(u.transpose() * u - id) < 1e-10);
      CHECK(oracle::max_abs(u.transpose() * j * u - j) < 1e-10);
      CHECK(oracle::max_abs(u.transpose() * MatrixXd(d.delta.asDiagonal()) * u - p) <
            1e-9 * oracle::max_abs(p));
      for (int k = 0; k < n; ++k) CHECK(d.delta(k) * d.delta(n + k) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("non-symplectic input is rejected") {
    CHECK_THROWS_AS(diagonalize_pds(2.0 * MatrixXd::Identity(2, 2)), DomainError);
  }
}

TEST_CASE("orderings and partial reflection") {
  CHECK(ordering_permutation(1, Ordering::kXpBlock, Ordering::kAbInterleaved) == std::vector<int>{0, 1});
  CHECK(ordering_permutation(2, Ordering::kXpBlock, Ordering::kAbInterleaved) ==
        std::vector<int>{0, 2, 1, 3});
  fixtures::Rng rng(41);
  const CovarianceMatrix sigma = fixtures::random_spd(rng, 3);
  const CovarianceMatrix there = reorder(sigma, Ordering::kAbInterleaved);
  CHECK(there.matrix(0, 1) == sigma.matrix(0, 3));  // x_0 with p_0
  const CovarianceMatrix back = reorder(there, Ordering::kXpBlock);
  CHECK(oracle::max_abs(back.matrix - sigma.matrix) == 0.0);

  CHECK(oracle::max_abs(partial_reflection_matrix(PhaseDim::bipartite(1, 1)) - diag4(1, 1, 1, -1)) == 0.0);
  CHECK(oracle::max_abs(partial_reflection_matrix(PhaseDim::bipartite(1, 1), Ordering::kAbInterleaved) -
                        diag4(1, 1, 1, -1)) == 0.0);
  for (auto [na, nb] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    const MatrixXd m = partial_reflection_matrix(PhaseDim::bipartite(na, nb));
    const int n = na + nb;
    CHECK(oracle::max_abs(m * m - MatrixXd::Identity(2 * n, 2 * n)) == 0.0);
    CHECK(m.diagonal().sum() == doctest::Approx(2 * n - 2 * nb));
    for (int k = 0; k < n; ++k) CHECK(m(k, k) == 1.0);  // positions untouched
  }
  CHECK_THROWS_AS(partial_reflection_matrix(PhaseDim::modes(2)), UsageError);
}
