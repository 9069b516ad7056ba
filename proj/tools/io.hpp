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

// File formats of the command-line tool.
//
//   covariance   {"n": int, "ordering": "xp-block"|"ab-interleaved",
//                 "data": [[row], ...]}  (row-major; optional "hbar")
//   window       {"n": int, "X": [[...]], "Y": [[...]]}
//   wavefunction CSV with header "x,re,im"
//   phase field  CSV with header "x,p,re,im" (x-major)
//   operator     first line "# {json grid header}", then CSV "row,col,re,im"
//
// Inputs can also be named built-ins (see the parse_* functions).

#pragma once

#include <filesystem>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "phasekit/gaussian.hpp"
#include "phasekit/grid.hpp"
#include "phasekit/symplectic.hpp"

namespace phasekit::cli {

using Json = nlohmann::ordered_json;

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Parses JSON, reporting failures as ParseError with line and column.
Json parse_json(const std::string& text, const std::string& origin);

Json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const Json& j, const std::string& what);

Json covariance_to_json(const CovarianceMatrix& sigma);
CovarianceMatrix covariance_from_json(const Json& j, const std::string& origin);
Json window_to_json(const GaussianWindow& w);
GaussianWindow window_from_json(const Json& j, const std::string& origin);

std::string wavefunction_csv(const WaveFunction& psi);
WaveFunction parse_wavefunction_csv(const std::string& text, const std::string& origin);

std::string phase_function_csv(const PhaseFunction& f);
PhaseFunction parse_phase_function_csv(const std::string& text, const std::string& origin);

std::string operator_csv(const OperatorMatrix& m, double hbar);
OperatorMatrix parse_operator_csv(const std::string& text, const std::string& origin);

/// Where an input came from and the bytes that identify it (file contents
/// or the built-in spec string), for the report digest.
struct Source {
  std::string spec;
  std::string bytes;
  bool builtin = false;
};

/// A spec is a file unless it matches a built-in form.
///   covariance: vacuum:<n> | diag:<v1>,<v2>,... | tms:<r> | file
CovarianceMatrix parse_covariance(const std::string& spec, double hbar, Source& source);
///   wavefunction: gaussian | hermite:<k> | coherent:<x0>,<p0> | CSV file
WaveFunction parse_wavefunction(const std::string& spec, const Grid1D& grid, double hbar,
                                Source& source);
///   window: std-gaussian | hermite:<k> | window:<X>,<Y> | JSON window | CSV
WaveFunction parse_window(const std::string& spec, const Grid1D& grid, double hbar,
                          Source& source);
///   symbol: gaussian:<v> | gaussian:<vx>,<vp>,<cxp> | dog:<a> | CSV file.
///   Built-ins are sampled on the quadrature grid of `grid`, or on its
///   symbol grid when `on_symbol_grid` is set. gaussian:… is the density
///   ρ_Σ; dog:<a> = (1 + a)ρ_I − aρ_{I/4} has unit mass and a negative
///   lobe for a > 1/3.
PhaseFunction parse_symbol(const std::string& spec, const Grid1D& grid, double hbar,
                           Source& source, bool on_symbol_grid = false);

/// Operator grid behind a symbol or quadrature grid.
Grid1D infer_operator_grid(const PhaseGrid& grid, double hbar);

/// Lower-case hex SHA-256 over length-prefixed source bytes.
std::string sources_digest(const std::vector<Source>& sources);

Json grid_to_json(const Grid1D& g);

}  // namespace phasekit::cli
