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

#include "io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "phasekit/errors.hpp"
#include "phasekit/separability.hpp"
#include "phasekit/transforms.hpp"

namespace phasekit::cli {

namespace {

using Eigen::MatrixXd;
using std::numbers::pi;

std::string num(double v) { return fmt::format("{:.17g}", v); }

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& raw, const std::string& where) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(fmt::format("{}: '{}' is not a number", where, s));
  }
  return v;
}

std::vector<double> parse_numbers(const std::string& list, const std::string& where) {
  std::vector<double> out;
  for (const std::string& item : split(list, ',')) out.push_back(parse_number(item, where));
  return out;
}

/// Data lines of a CSV with the given header, as (line number, fields).
std::vector<std::pair<int, std::vector<std::string>>> csv_rows(const std::string& text,
                                                               const std::string& origin,
                                                               const std::string& header,
                                                               std::size_t fields,
                                                               std::string* comment = nullptr) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (comment != nullptr && comment->empty()) *comment = trim(t.substr(1));
      continue;
    }
    if (!seen_header) {
      std::string compact;
      for (char c : t) {
        if (c != ' ') compact += c;
      }
      if (compact != header) {
        throw ParseError(fmt::format("{}:{}: expected header '{}', got '{}'", origin, number, header, t));
      }
      seen_header = true;
      continue;
    }
    std::vector<std::string> parts = split(t, ',');
    if (parts.size() != fields) {
      throw ParseError(
          fmt::format("{}:{}: expected {} fields, got {}", origin, number, fields, parts.size()));
    }
    rows.emplace_back(number, std::move(parts));
  }
  if (!seen_header) throw ParseError(fmt::format("{}: missing header '{}'", origin, header));
  if (rows.empty()) throw ParseError(fmt::format("{}: no data rows", origin));
  return rows;
}

/// Uniform grid through the given (ordered, distinct) nodes.
Grid1D grid_from_nodes(const std::vector<double>& nodes, const std::string& origin,
                       const std::string& axis) {
  if (nodes.size() < 2) {
    throw ParseError(fmt::format("{}: the {} axis needs at least two nodes", origin, axis));
  }
  const int n = static_cast<int>(nodes.size());
  const double dx = (nodes.back() - nodes.front()) / (n - 1);
  if (!(dx > 0.0)) throw ParseError(fmt::format("{}: {} nodes must increase", origin, axis));
  for (int i = 0; i < n; ++i) {
    if (std::abs(nodes[i] - (nodes.front() + i * dx)) > 1e-9 * std::max(1.0, std::abs(nodes[i]))) {
      throw ParseError(fmt::format("{}: {} nodes are not uniformly spaced (node {} = {})", origin,
                                   axis, i, nodes[i]));
    }
  }
  return Grid1D{n, nodes.front(), dx};
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError(fmt::format("cannot write '{}'", path.string()));
  out << text;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string context;
    std::istringstream in(text);
    for (std::size_t i = 0; i < line && std::getline(in, context); ++i) {
    }
    throw ParseError(fmt::format("{}:{}:{}: malformed JSON near '{}'", origin, line, column, trim(context)));
  }
}

Json matrix_to_json(const MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXd matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError(fmt::format("{}: expected a non-empty array of rows", what));
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError(fmt::format("{}: row {} has {} entries, expected {}", what, r,
                                   j[r].is_array() ? j[r].size() : 0, cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) {
        throw ParseError(fmt::format("{}: entry ({}, {}) is not a number", what, r, c));
      }
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

Json covariance_to_json(const CovarianceMatrix& sigma) {
  Json j;
  j["n"] = sigma.n();
  j["ordering"] = std::string(to_string(sigma.ordering));
  j["data"] = matrix_to_json(sigma.matrix);
  return j;
}

CovarianceMatrix covariance_from_json(const Json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("data")) {
    throw ParseError(fmt::format("{}: covariance needs a \"data\" field", origin));
  }
  CovarianceMatrix sigma;
  sigma.matrix = matrix_from_json(j["data"], origin + ": data");
  sigma.ordering = parse_ordering(j.value("ordering", std::string("xp-block")));
  if (sigma.matrix.rows() != sigma.matrix.cols() || sigma.matrix.rows() % 2 != 0) {
    throw InvalidDimension(fmt::format("{}: covariance must be 2n×2n, got {}×{}", origin,
                                       sigma.matrix.rows(), sigma.matrix.cols()));
  }
  if (j.contains("n") && j["n"].get<int>() != sigma.n()) {
    throw InvalidDimension(
        fmt::format("{}: \"n\" = {} but data is {}×{}", origin, j["n"].get<int>(), sigma.matrix.rows(),
                    sigma.matrix.cols()));
  }
  return sigma;
}

Json window_to_json(const GaussianWindow& w) {
  Json j;
  j["n"] = w.n();
  j["X"] = matrix_to_json(w.x);
  j["Y"] = matrix_to_json(w.y);
  return j;
}

GaussianWindow window_from_json(const Json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("X") || !j.contains("Y")) {
    throw ParseError(fmt::format("{}: window needs \"X\" and \"Y\"", origin));
  }
  GaussianWindow w{matrix_from_json(j["X"], origin + ": X"), matrix_from_json(j["Y"], origin + ": Y")};
  validate_window(w);
  return w;
}

std::string wavefunction_csv(const WaveFunction& psi) {
  std::string out = "x,re,im\n";
  for (int i = 0; i < psi.grid.n; ++i) {
    out += fmt::format("{},{},{}\n", num(psi.grid.at(i)), num(psi.samples(i).real()),
                       num(psi.samples(i).imag()));
  }
  return out;
}

WaveFunction parse_wavefunction_csv(const std::string& text, const std::string& origin) {
  const auto rows = csv_rows(text, origin, "x,re,im", 3);
  std::vector<double> xs;
  Eigen::VectorXcd samples(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [line, f] = rows[i];
    const std::string where = fmt::format("{}:{}", origin, line);
    xs.push_back(parse_number(f[0], where));
    samples(i) = {parse_number(f[1], where), parse_number(f[2], where)};
  }
  return WaveFunction{grid_from_nodes(xs, origin, "x"), samples};
}

std::string phase_function_csv(const PhaseFunction& f) {
  std::string out = "x,p,re,im\n";
  for (int i = 0; i < f.grid.x.n; ++i) {
    for (int k = 0; k < f.grid.p.n; ++k) {
      out += fmt::format("{},{},{},{}\n", num(f.grid.x.at(i)), num(f.grid.p.at(k)),
                         num(f.samples(i, k).real()), num(f.samples(i, k).imag()));
    }
  }
  return out;
}

PhaseFunction parse_phase_function_csv(const std::string& text, const std::string& origin) {
  const auto rows = csv_rows(text, origin, "x,p,re,im", 4);
  std::vector<double> xs;
  std::vector<double> ps;
  std::vector<std::complex<double>> values;
  for (const auto& [line, f] : rows) {
    const std::string where = fmt::format("{}:{}", origin, line);
    const double x = parse_number(f[0], where);
    const double p = parse_number(f[1], where);
    if (xs.empty() || x != xs.back()) xs.push_back(x);
    if (xs.size() == 1) ps.push_back(p);
    values.emplace_back(parse_number(f[2], where), parse_number(f[3], where));
  }
  const Grid1D gx = grid_from_nodes(xs, origin, "x");
  const Grid1D gp = grid_from_nodes(ps, origin, "p");
  if (values.size() != static_cast<std::size_t>(gx.n) * gp.n) {
    throw ParseError(fmt::format("{}: {} rows do not form a {}×{} x-major grid", origin,
                                 values.size(), gx.n, gp.n));
  }
  PhaseFunction out{PhaseGrid{gx, gp}, Eigen::MatrixXcd(gx.n, gp.n)};
  for (int i = 0; i < gx.n; ++i) {
    for (int k = 0; k < gp.n; ++k) {
      const auto& [line, f] = rows[static_cast<std::size_t>(i) * gp.n + k];
      const double p = parse_number(f[1], origin);
      if (std::abs(p - gp.at(k)) > 1e-9 * std::max(1.0, std::abs(p))) {
        throw ParseError(fmt::format("{}:{}: expected p = {}, got {}", origin, line, gp.at(k), p));
      }
      out.samples(i, k) = values[static_cast<std::size_t>(i) * gp.n + k];
    }
  }
  return out;
}

Json grid_to_json(const Grid1D& g) {
  Json j;
  j["n"] = g.n;
  j["x_min"] = g.x_min;
  j["dx"] = g.dx;
  return j;
}

std::string operator_csv(const OperatorMatrix& m, double hbar) {
  Json header = grid_to_json(m.grid);
  header["hbar"] = hbar;
  header["weight"] = "dx";
  std::string out = "# " + header.dump() + "\nrow,col,re,im\n";
  for (int r = 0; r < m.grid.n; ++r) {
    for (int c = 0; c < m.grid.n; ++c) {
      out += fmt::format("{},{},{},{}\n", r, c, num(m.entries(r, c).real()), num(m.entries(r, c).imag()));
    }
  }
  return out;
}

OperatorMatrix parse_operator_csv(const std::string& text, const std::string& origin) {
  std::string comment;
  const auto rows = csv_rows(text, origin, "row,col,re,im", 4, &comment);
  if (comment.empty()) throw ParseError(fmt::format("{}: missing '# {{grid header}}' line", origin));
  const Json header = parse_json(comment, origin + " (header)");
  Grid1D grid;
  try {
    grid = Grid1D{header.at("n").get<int>(), header.at("x_min").get<double>(), header.at("dx").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{}: bad grid header: {}", origin, e.what()));
  }
  if (grid.n < 1 || rows.size() != static_cast<std::size_t>(grid.n) * grid.n) {
    throw ParseError(fmt::format("{}: header says n = {} but there are {} entries", origin, grid.n, rows.size()));
  }
  OperatorMatrix m{grid, Eigen::MatrixXcd::Zero(grid.n, grid.n)};
  for (const auto& [line, f] : rows) {
    const std::string where = fmt::format("{}:{}", origin, line);
    const double r = parse_number(f[0], where);
    const double c = parse_number(f[1], where);
    if (r < 0 || c < 0 || r >= grid.n || c >= grid.n || r != std::floor(r) || c != std::floor(c)) {
      throw ParseError(fmt::format("{}: index ({}, {}) outside the {}×{} matrix", where, r, c, grid.n, grid.n));
    }
    m.entries(static_cast<int>(r), static_cast<int>(c)) = {parse_number(f[2], where), parse_number(f[3], where)};
  }
  return m;
}

CovarianceMatrix parse_covariance(const std::string& spec, double hbar, Source& source) {
  source = Source{spec, spec, true};
  if (starts_with(spec, "vacuum:")) {
    const int n = static_cast<int>(parse_number(spec.substr(7), spec));
    if (n < 1) throw InvalidDimension(fmt::format("{}: need n >= 1", spec));
    return CovarianceMatrix{0.5 * hbar * MatrixXd::Identity(2 * n, 2 * n), Ordering::kXpBlock};
  }
  if (starts_with(spec, "diag:")) {
    const std::vector<double> d = parse_numbers(spec.substr(5), spec);
    if (d.size() % 2 != 0) throw InvalidDimension(fmt::format("{}: need an even number of entries", spec));
    return CovarianceMatrix{Eigen::Map<const Eigen::VectorXd>(d.data(), d.size()).asDiagonal(),
                            Ordering::kXpBlock};
  }
  if (starts_with(spec, "tms:")) return two_mode_squeezed(parse_number(spec.substr(4), spec), hbar);
  source = Source{spec, read_text(spec), false};
  return covariance_from_json(parse_json(source.bytes, spec), spec);
}

WaveFunction parse_wavefunction(const std::string& spec, const Grid1D& grid, double hbar,
                                Source& source) {
  source = Source{spec, spec, true};
  if (spec == "gaussian") return hermite_function(grid, 0, hbar);
  if (starts_with(spec, "hermite:")) {
    return hermite_function(grid, static_cast<int>(parse_number(spec.substr(8), spec)), hbar);
  }
  if (starts_with(spec, "coherent:")) {
    const std::vector<double> z = parse_numbers(spec.substr(9), spec);
    if (z.size() != 2) throw ParseError(fmt::format("{}: expected coherent:<x0>,<p0>", spec));
    const double norm = std::pow(pi * hbar, -0.25);
    return sample(grid, [&](double x) {
      return norm * std::exp(-(x - z[0]) * (x - z[0]) / (2.0 * hbar)) *
             std::polar(1.0, z[1] * (x - 0.5 * z[0]) / hbar);
    });
  }
  source = Source{spec, read_text(spec), false};
  return parse_wavefunction_csv(source.bytes, spec);
}

WaveFunction parse_window(const std::string& spec, const Grid1D& grid, double hbar, Source& source) {
  source = Source{spec, spec, true};
  if (spec == "std-gaussian") return hermite_function(grid, 0, hbar);
  if (starts_with(spec, "hermite:")) {
    return hermite_function(grid, static_cast<int>(parse_number(spec.substr(8), spec)), hbar);
  }
  if (starts_with(spec, "window:")) {
    const std::vector<double> xy = parse_numbers(spec.substr(7), spec);
    if (xy.size() != 2) throw ParseError(fmt::format("{}: expected window:<X>,<Y>", spec));
    return sample_window(GaussianWindow{MatrixXd::Constant(1, 1, xy[0]), MatrixXd::Constant(1, 1, xy[1])},
                         grid, hbar);
  }
  source = Source{spec, read_text(spec), false};
  if (std::filesystem::path(spec).extension() == ".json") {
    return sample_window(window_from_json(parse_json(source.bytes, spec), spec), grid, hbar);
  }
  return parse_wavefunction_csv(source.bytes, spec);
}

PhaseFunction parse_symbol(const std::string& spec, const Grid1D& grid, double hbar, Source& source,
                           bool on_symbol_grid) {
  source = Source{spec, spec, true};
  const PhaseGrid quad = on_symbol_grid ? symbol_grid(grid, hbar) : quadrature_grid(grid, hbar);
  auto rho = [](const MatrixXd& s) {
    return [s](double x, double p) {
      return gaussian_wigner_eval(GaussianState{CovarianceMatrix{s, Ordering::kXpBlock}, 1.0},
                                  Eigen::Vector2d(x, p));
    };
  };
  if (starts_with(spec, "gaussian:")) {
    const std::vector<double> v = parse_numbers(spec.substr(9), spec);
    MatrixXd s(2, 2);
    if (v.size() == 1) {
      s << v[0], 0.0, 0.0, v[0];
    } else if (v.size() == 3) {
      s << v[0], v[2], v[2], v[1];
    } else {
      throw ParseError(fmt::format("{}: expected gaussian:<v> or gaussian:<vx>,<vp>,<cxp>", spec));
    }
    return sample(quad, rho(s));
  }
  if (starts_with(spec, "dog:")) {
    const double a = parse_number(spec.substr(4), spec);
    const auto wide = rho(MatrixXd::Identity(2, 2));
    const auto narrow = rho(0.25 * MatrixXd::Identity(2, 2));
    return sample(quad, [&](double x, double p) { return (1.0 + a) * wide(x, p) - a * narrow(x, p); });
  }
  source = Source{spec, read_text(spec), false};
  return parse_phase_function_csv(source.bytes, spec);
}

Grid1D infer_operator_grid(const PhaseGrid& grid, double hbar) {
  if (grid.x.n % 2 == 0) {
    const Grid1D half{grid.x.n / 2, grid.x.x_min, 2.0 * grid.x.dx};
    if (grid.same_as(symbol_grid(half, hbar))) return half;
  }
  if (grid.same_as(quadrature_grid(grid.x, hbar))) return grid.x;
  throw PreconditionError(fmt::format(
      "phase grid ({} × {}, dx = {}, dp = {}) is neither a symbol nor a quadrature grid for hbar = {}",
      grid.x.n, grid.p.n, grid.x.dx, grid.p.dx, hbar));
}

std::string sources_digest(const std::vector<Source>& sources) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const Source& s : sources) {
    const std::string prefix = fmt::format("{}:{}:", s.builtin ? "builtin" : "file", s.bytes.size());
    EVP_DigestUpdate(ctx, prefix.data(), prefix.size());
    EVP_DigestUpdate(ctx, s.bytes.data(), s.bytes.size());
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx, digest, &length);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace phasekit::cli
