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

// Thin RAII layer over FFTW. Unnormalized transforms:
//   sign = -1:  Y_k = Σ_m y_m e^{-2πi km/N}
//   sign = +1:  Y_k = Σ_m y_m e^{+2πi km/N}

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace phasekit::detail {

class Dft1D {
 public:
  Dft1D(int n, int sign);
  ~Dft1D();
  Dft1D(const Dft1D&) = delete;
  Dft1D& operator=(const Dft1D&) = delete;

  int size() const { return n_; }
  /// Transforms `data` (length n) in place.
  void apply(std::complex<double>* data);

 private:
  int n_;
  std::complex<double>* buffer_;
  void* plan_;
};

/// 2-D transform of a whole matrix.
Eigen::MatrixXcd dft2d(const Eigen::MatrixXcd& in, int sign);

/// Linear (zero-padded) 2-D convolution
///   out(r, c) = Σ_{i,k} a(i, k) · b(r + row_shift − i, c + col_shift − k)
/// for r < out_rows, c < out_cols, with b taken as zero outside its range.
Eigen::MatrixXcd linear_convolve(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                 int row_shift, int col_shift, int out_rows, int out_cols);

}  // namespace phasekit::detail
