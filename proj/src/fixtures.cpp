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

#include "phasekit/fixtures.hpp"

namespace phasekit::fixtures {

using Eigen::MatrixXd;

MatrixXd gaussian_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXd m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = normal(rng);
  }
  return m;
}

MatrixXd random_symmetric(Rng& rng, int n, double scale) {
  const MatrixXd g = gaussian_matrix(rng, n, n);
  return 0.5 * scale * (g + g.transpose());
}

MatrixXd random_symplectic(Rng& rng, int n, double strength) {
  const MatrixXd id = MatrixXd::Identity(n, n);
  const MatrixXd a = id + strength * gaussian_matrix(rng, n, n) / std::sqrt(static_cast<double>(n));
  const MatrixXd b = random_symmetric(rng, n, strength);
  const MatrixXd c = random_symmetric(rng, n, strength);
  MatrixXd scale = MatrixXd::Zero(2 * n, 2 * n);
  scale.topLeftCorner(n, n) = a;
  scale.bottomRightCorner(n, n) = a.inverse().transpose();
  MatrixXd lower = MatrixXd::Identity(2 * n, 2 * n);
  lower.bottomLeftCorner(n, n) = c;
  MatrixXd upper = MatrixXd::Identity(2 * n, 2 * n);
  upper.topRightCorner(n, n) = b;
  return scale * lower * upper;
}

CovarianceMatrix random_covariance_with_spectrum(Rng& rng, int n, double lambda_lo,
                                                 double lambda_hi, double strength) {
  std::uniform_real_distribution<double> uniform(lambda_lo, lambda_hi);
  Eigen::VectorXd d(2 * n);
  for (int k = 0; k < n; ++k) d(k) = d(n + k) = uniform(rng);
  const MatrixXd s = random_symplectic(rng, n, strength);
  const MatrixXd sigma = s * d.asDiagonal() * s.transpose();
  return CovarianceMatrix{0.5 * (sigma + sigma.transpose()), Ordering::kXpBlock};
}

CovarianceMatrix random_spd(Rng& rng, int n, double scale, double eps) {
  const MatrixXd a = gaussian_matrix(rng, 2 * n, 2 * n) * std::sqrt(scale / (2 * n));
  const MatrixXd sigma = a * a.transpose() + eps * MatrixXd::Identity(2 * n, 2 * n);
  return CovarianceMatrix{0.5 * (sigma + sigma.transpose()), Ordering::kXpBlock};
}

GaussianWindow random_window(Rng& rng, int n) {
  const MatrixXd a = gaussian_matrix(rng, n, n) * 0.5;
  MatrixXd x = a * a.transpose() + MatrixXd::Identity(n, n) * 0.3;
  if (n == 1) {
    std::uniform_real_distribution<double> u(0.3, 3.0);
    x(0, 0) = u(rng);
  }
  MatrixXd y = random_symmetric(rng, n, 0.75);
  if (n == 1) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    y(0, 0) = u(rng);
  }
  return GaussianWindow{x, y};
}

}  // namespace phasekit::fixtures
