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

#include "fft.hpp"

#include <algorithm>
#include <mutex>

#include <fftw3.h>

namespace phasekit::detail {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

Dft1D::Dft1D(int n, int sign) : n_(n) {
  buffer_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto* buf = reinterpret_cast<fftw_complex*>(buffer_);
  plan_ = fftw_plan_dft_1d(n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
}

Dft1D::~Dft1D() {
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  }
  fftw_free(buffer_);
}

void Dft1D::apply(std::complex<double>* data) {
  std::copy(data, data + n_, buffer_);
  fftw_execute(static_cast<fftw_plan>(plan_));
  std::copy(buffer_, buffer_ + n_, data);
}

Eigen::MatrixXcd dft2d(const Eigen::MatrixXcd& in, int sign) {
  const int rows = static_cast<int>(in.rows());
  const int cols = static_cast<int>(in.cols());
  auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * rows * cols));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    // Eigen is column-major: the buffer is a row-major cols × rows array,
    // and a 2-D DFT commutes with transposition.
    plan = fftw_plan_dft_2d(cols, rows, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  std::copy(in.data(), in.data() + rows * cols, reinterpret_cast<std::complex<double>*>(buf));
  fftw_execute(plan);
  Eigen::MatrixXcd out(rows, cols);
  std::copy(reinterpret_cast<std::complex<double>*>(buf),
            reinterpret_cast<std::complex<double>*>(buf) + rows * cols, out.data());
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);
  return out;
}

Eigen::MatrixXcd linear_convolve(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                 int row_shift, int col_shift, int out_rows, int out_cols) {
  // Full linear convolution fits in (ra + rb − 1) × (ca + cb − 1); pad to a
  // power of two so the circular product has no wrap-around.
  const int rows = next_pow2(static_cast<int>(a.rows() + b.rows()));
  const int cols = next_pow2(static_cast<int>(a.cols() + b.cols()));
  Eigen::MatrixXcd pa = Eigen::MatrixXcd::Zero(rows, cols);
  Eigen::MatrixXcd pb = Eigen::MatrixXcd::Zero(rows, cols);
  pa.topLeftCorner(a.rows(), a.cols()) = a;
  pb.topLeftCorner(b.rows(), b.cols()) = b;
  const Eigen::MatrixXcd prod = dft2d(pa, -1).cwiseProduct(dft2d(pb, -1));
  const Eigen::MatrixXcd full = dft2d(prod, +1) / static_cast<double>(rows * cols);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_rows, out_cols);
  for (int c = 0; c < out_cols; ++c) {
    const int fc = c + col_shift;
    if (fc < 0 || fc >= cols) continue;
    for (int r = 0; r < out_rows; ++r) {
      const int fr = r + row_shift;
      if (fr < 0 || fr >= rows) continue;
      out(r, c) = full(fr, fc);
    }
  }
  return out;
}

}  // namespace phasekit::detail
