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

// Exact symplectic linear algebra on 2n×2n real matrices.
//
// Phase-space vectors are ordered xp-block, z = (x_1..x_n, p_1..p_n),
// unless a CovarianceMatrix says otherwise. The per-mode interleaved
// ordering (x_1, p_1, x_2, p_2, ...) is only reached through reorder().

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "phasekit/tolerances.hpp"

namespace phasekit {

enum class Ordering { kXpBlock, kAbInterleaved };

std::string_view to_string(Ordering ordering);
/// Parses "xp-block" / "ab-interleaved"; throws ParseError otherwise.
Ordering parse_ordering(std::string_view text);

/// Number of modes, optionally split into an A|B bipartition.
struct PhaseDim {
  int n = 1;
  std::optional<std::pair<int, int>> split;

  static PhaseDim modes(int n);
  static PhaseDim bipartite(int n_a, int n_b);

  int n_a() const;
  int n_b() const;
};

struct SymplecticForm {
  int n = 1;
  Eigen::MatrixXd matrix;
};

struct SymplecticMatrix {
  Eigen::MatrixXd matrix;

  int n() const { return static_cast<int>(matrix.rows() / 2); }
};

struct CovarianceMatrix {
  Eigen::MatrixXd matrix;
  Ordering ordering = Ordering::kXpBlock;

  int n() const { return static_cast<int>(matrix.rows() / 2); }
};

/// Symplectic eigenvalues, sorted decreasing.
struct SymplecticSpectrum {
  std::vector<double> values;

  double min() const;
  double max() const;
};

/// J = [[0, I], [-I, 0]] in xp-block ordering; the per-mode blocks
/// [[0, 1], [-1, 0]] in ab-interleaved ordering.
SymplecticForm standard_symplectic_form(int n,
                                        Ordering ordering = Ordering::kXpBlock);

/// max |SᵀJS − J| with J in the given ordering.
double symplectic_residual(const Eigen::MatrixXd& s,
                           Ordering ordering = Ordering::kXpBlock);

bool is_symplectic(const Eigen::MatrixXd& s, double tol,
                   Ordering ordering = Ordering::kXpBlock);

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma,
                                          const Tolerances& tol = {});

struct WilliamsonDecomposition {
  /// Σ = S · diag(Λ, Λ) · Sᵀ, expressed in `ordering`.
  SymplecticMatrix s;
  SymplecticSpectrum spectrum;
  Ordering ordering = Ordering::kXpBlock;

  /// The diagonal normal form diag(Λ, Λ) in `ordering`.
  Eigen::MatrixXd normal_form() const;
};

/// Williamson diagonalization via the skew-symmetric normal form of
/// Σ^{1/2} J Σ^{1/2}. The basis inside degenerate symplectic eigenspaces is
/// whatever the eigensolver returns.
WilliamsonDecomposition williamson(const CovarianceMatrix& sigma,
                                   const Tolerances& tol = {});

/// P = Uᵀ · diag(delta) · U with U orthogonal and symplectic. Mode k carries
/// (delta[k], delta[n + k]) = (λ_k, 1/λ_k), λ_k ≥ 1, sorted decreasing.
struct PdsDiagonalization {
  SymplecticMatrix u;
  Eigen::VectorXd delta;
};

/// Diagonalizes a symmetric positive-definite symplectic matrix (xp-block).
PdsDiagonalization diagonalize_pds(const Eigen::MatrixXd& p,
                                   const Tolerances& tol = {});

/// perm[i] is the source index of target index i.
std::vector<int> ordering_permutation(int n, Ordering from, Ordering to);

/// Similarity by the exact permutation between orderings.
CovarianceMatrix reorder(const CovarianceMatrix& sigma, Ordering target);
Eigen::MatrixXd reorder_matrix(const Eigen::MatrixXd& m, Ordering from,
                               Ordering to);

/// Diagonal matrix of the involution (x_B, p_B) -> (x_B, -p_B).
Eigen::MatrixXd partial_reflection_matrix(
    const PhaseDim& dim, Ordering ordering = Ordering::kXpBlock);

namespace linalg {

double max_abs(const Eigen::MatrixXd& m);
double min_eigenvalue(const Eigen::MatrixXd& symmetric);
double min_eigenvalue(const Eigen::MatrixXcd& hermitian);
/// Symmetric square root of a positive-definite matrix.
Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& spd);
Eigen::MatrixXd direct_sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Throws InvalidDimension unless `m` is square with even size.
void require_phase_space_shape(const Eigen::MatrixXd& m);
/// Throws DomainError unless symmetric (relative) and min eigenvalue
/// exceeds pd_rel · trace / 2n.
void require_spd(const Eigen::MatrixXd& m, const Tolerances& tol,
                 std::string_view what);

}  // namespace linalg

}  // namespace phasekit
