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

// phasekit: batch front-end for the phase-space toolkit.
//
// Exit codes: 0 success, 1 self-test failure, 2 precondition / parse /
// domain failure, 3 accuracy warning under --strict.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "acceptance.hpp"
#include "io.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/gaussian.hpp"
#include "phasekit/separability.hpp"
#include "phasekit/symplectic.hpp"
#include "phasekit/toeplitz.hpp"
#include "phasekit/transforms.hpp"
#include "phasekit/weyl.hpp"

namespace phasekit::cli {
namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using std::numbers::pi;

constexpr int kExitSelftestFailed = 1;
constexpr int kExitError = 2;
constexpr int kExitStrictWarning = 3;

struct RunConfig {
  double hbar = 1.0;
  int grid_n = 256;
  /// Half-width of the operator grid in units of √ħ.
  double span = 8.0;
  Tolerances tol;
  std::uint64_t seed = 42;
  bool strict = false;
  std::string out;

  Grid1D grid() const { return Grid1D::symmetric(grid_n, span * std::sqrt(hbar)); }

  Json to_json() const {
    Json j;
    j["hbar"] = hbar;
    j["grid_n"] = grid_n;
    j["span"] = span;
    j["seed"] = seed;
    j["strict"] = strict;
    Json t;
    for (const auto& [name, value] : tol.as_map()) t[name] = value;
    j["tolerances"] = t;
    return j;
  }
};

/// Raw flag values; an option only overrides the config file when given.
struct Flags {
  double hbar = 1.0;
  int grid_n = 256;
  double span = 8.0;
  std::vector<std::string> tol;
  std::uint64_t seed = 42;
  bool strict = false;
  std::string out;
  std::string config;
  CLI::Option* hbar_opt = nullptr;
  CLI::Option* grid_opt = nullptr;
  CLI::Option* span_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void apply_tolerance(Tolerances& tol, const std::string& name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw PreconditionError(fmt::format("tolerance {} must be positive, got {}", name, value));
  }
  if (!tol.set(name, value)) {
    std::string known;
    for (const auto& [k, v] : tol.as_map()) known += (known.empty() ? "" : ", ") + k;
    throw PreconditionError(fmt::format("unknown tolerance '{}' (known: {})", name, known));
  }
}

/// flags > config file > defaults.
RunConfig resolve_config(const Flags& flags) {
  RunConfig config;
  if (!flags.config.empty()) {
    const Json j = parse_json(read_text(flags.config), flags.config);
    try {
      config.hbar = j.value("hbar", config.hbar);
      config.grid_n = j.value("grid_n", config.grid_n);
      config.span = j.value("span", config.span);
      config.seed = j.value("seed", config.seed);
      config.strict = j.value("strict", config.strict);
      config.out = j.value("out", config.out);
      if (j.contains("tolerances")) {
        for (const auto& [name, value] : j["tolerances"].items()) {
          apply_tolerance(config.tol, name, value.get<double>());
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(fmt::format("{}: {}", flags.config, e.what()));
    }
  }
  if (flags.hbar_opt->count() > 0) config.hbar = flags.hbar;
  if (flags.grid_opt->count() > 0) config.grid_n = flags.grid_n;
  if (flags.span_opt->count() > 0) config.span = flags.span;
  if (flags.seed_opt->count() > 0) config.seed = flags.seed;
  if (flags.strict) config.strict = true;
  if (!flags.out.empty()) config.out = flags.out;
  for (const std::string& item : flags.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError(fmt::format("--tol expects <name>=<value>, got '{}'", item));
    }
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw PreconditionError(fmt::format("--tol {}: value is not a number", item));
    }
    apply_tolerance(config.tol, item.substr(0, eq), value);
  }
  checked_hbar(config.hbar);
  if (config.grid_n < 16 || (config.grid_n & (config.grid_n - 1)) != 0) {
    throw PreconditionError(fmt::format("--grid-n must be a power of two >= 16, got {}", config.grid_n));
  }
  if (!(config.span > 0.0)) throw PreconditionError("--span must be positive");
  return config;
}

struct Report {
  std::string command;
  std::vector<std::string> args;
  std::vector<Source> sources;
  Json results = Json::object();
  Warnings warnings;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Json to_json(const RunConfig& config) const {
    Json j;
    Json cmd;
    cmd["name"] = command;
    cmd["args"] = args;
    j["command"] = cmd;
    j["config"] = config.to_json();
    Json inputs = Json::array();
    for (const Source& s : sources) inputs.push_back(s.spec);
    j["inputs"] = inputs;
    j["inputs_digest"] = "sha256:" + sources_digest(sources);
    j["results"] = results;
    j["warnings"] = warnings;
    Json timings;
    timings["total_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    j["timings"] = timings;
    return j;
  }
};

/// Side-file path: --csv if given, else derived from --out, else none.
std::optional<std::filesystem::path> side_path(const RunConfig& config, const std::string& csv,
                                               const std::string& kind) {
  if (!csv.empty()) return std::filesystem::path(csv);
  if (config.out.empty()) return std::nullopt;
  std::filesystem::path p(config.out);
  p.replace_extension();
  return std::filesystem::path(p.string() + "." + kind + ".csv");
}

Json write_side(Report& report, const std::optional<std::filesystem::path>& path, const std::string& text) {
  if (!path) {
    report.warnings.push_back("no side file written; pass --csv or --out to keep the field");
    return nullptr;
  }
  write_text(*path, text);
  return path->string();
}

Json complex_json(std::complex<double> z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json vector_json(const std::vector<double>& v) { return Json(v); }

Json vector_json(const Eigen::VectorXd& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

// ---------------------------------------------------------------------------

void cmd_check_state(const RunConfig& config, Report& report, const std::string& spec) {
  Source source;
  const CovarianceMatrix sigma = parse_covariance(spec, config.hbar, source);
  report.sources.push_back(source);
  if (!source.builtin) {
    const Json j = parse_json(source.bytes, spec);
    if (j.contains("hbar") && j["hbar"].get<double>() != config.hbar) {
      report.warnings.push_back(fmt::format("{} declares hbar = {} but the run uses hbar = {}", spec,
                                            j["hbar"].get<double>(), config.hbar));
    }
  }
  const GaussianState state{sigma, config.hbar};
  const PositivityReport positivity = quantum_positivity(state, config.tol.psd);
  const SymplecticSpectrum spectrum = symplectic_eigenvalues(sigma, config.tol);
  const bool lemma = lemma2_check(state, config.tol);
  const bool pure = is_pure(state, config.tol.purity);
  Json r;
  r["n"] = sigma.n();
  r["ordering"] = std::string(to_string(sigma.ordering));
  r["positivity"] = {{"min_eig", positivity.min_eig}, {"valid", positivity.valid}};
  r["symplectic_spectrum"] = vector_json(spectrum.values);
  r["lemma2_valid"] = lemma;
  r["routes_agree"] = lemma == positivity.valid;
  r["pure"] = positivity.valid && pure;
  r["verdict"] = !positivity.valid ? "invalid" : (pure ? "valid, pure" : "valid, mixed");
  if (lemma != positivity.valid) {
    report.warnings.push_back("positivity and symplectic-spectrum routes disagree at the current tolerance");
  }
  report.results = r;
}

void cmd_williamson(const RunConfig& config, Report& report, const std::string& spec) {
  Source source;
  const CovarianceMatrix sigma = parse_covariance(spec, config.hbar, source);
  report.sources.push_back(source);
  const WilliamsonDecomposition w = williamson(sigma, config.tol);
  const MatrixXd& s = w.s.matrix;
  const double sym = symplectic_residual(s, w.ordering);
  const double recon = linalg::max_abs(MatrixXd(s * w.normal_form() * s.transpose() - sigma.matrix)) /
                       linalg::max_abs(sigma.matrix);
  Json r;
  r["n"] = sigma.n();
  r["ordering"] = std::string(to_string(w.ordering));
  r["symplectic_spectrum"] = vector_json(w.spectrum.values);
  r["S"] = matrix_to_json(s);
  r["residuals"] = {{"symplectic", sym}, {"reconstruction_relative", recon}};
  r["within_tolerance"] = sym <= config.tol.sym && recon <= config.tol.recon;
  if (sym > config.tol.sym) report.warnings.push_back(fmt::format("|SᵀJS - J| = {:.3g} exceeds tol sym", sym));
  if (recon > config.tol.recon) {
    report.warnings.push_back(fmt::format("reconstruction residual {:.3g} exceeds tol recon", recon));
  }
  report.results = r;
}

SplitSpec parse_split(const std::string& text, int n) {
  if (text.empty()) {
    if (n == 2) return SplitSpec{1, 1};
    throw UsageError(fmt::format("--split <n_A>,<n_B> is required for n = {}", n));
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(fmt::format("--split expects <n_A>,<n_B>, got '{}'", text));
  SplitSpec split;
  try {
    split = SplitSpec{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError(fmt::format("--split expects integers, got '{}'", text));
  }
  require_split(split, n);
  return split;
}

MatrixXd subsystem_covariance(const std::string& spec, int modes, const RunConfig& config, Report& report,
                              const std::string& what) {
  if (spec.empty()) throw UsageError(fmt::format("method certificate needs --{}", what));
  Source source;
  const CovarianceMatrix sigma = parse_covariance(spec, config.hbar, source);
  report.sources.push_back(source);
  if (sigma.n() != modes) {
    throw InvalidDimension(fmt::format("--{} has {} modes, the split needs {}", what, sigma.n(), modes));
  }
  return reorder(sigma, Ordering::kAbInterleaved).matrix;
}

void cmd_separability(const RunConfig& config, Report& report, const std::string& spec,
                      const std::string& split_text, const std::string& method,
                      const std::string& sigma_a_spec, const std::string& sigma_b_spec) {
  Source source;
  const CovarianceMatrix sigma = parse_covariance(spec, config.hbar, source);
  report.sources.push_back(source);
  const SplitSpec split = parse_split(split_text, sigma.n());
  Json r;
  r["method"] = method;
  r["split"] = {split.n_a, split.n_b};
  if (method == "ppt") {
    const PptReport ppt = ppt_check(sigma, split, config.hbar, config.tol);
    r["ppt"] = ppt.ppt;
    r["min_eig"] = ppt.min_eig;
    r["min_symplectic_transposed"] = ppt.min_symplectic;
    if (std::abs(ppt.min_eig) < config.tol.psd) {
      r["verdict"] = "inconclusive at tolerance";
    } else if (!ppt.ppt) {
      r["verdict"] = "entangled";
    } else {
      r["verdict"] = split.n_a * split.n_b <= 6 ? "ppt (separable: PPT is sufficient for n_A·n_B <= 6)"
                                                : "ppt (inconclusive: n_A·n_B > 6)";
    }
  } else if (method == "rotation") {
    const SeparabilityCertificate cert = disentangle_by_rotation(sigma, split, config.hbar, config.tol);
    const MatrixXd sa = 0.5 * config.hbar * MatrixXd(cert.delta_a.asDiagonal());
    const MatrixXd sb = 0.5 * config.hbar * MatrixXd(cert.delta_b.asDiagonal());
    const bool verified = verify_ww_certificate(cert.rotated, sa, sb, split, config.hbar, config.tol);
    Json c;
    c["U"] = matrix_to_json(cert.u.matrix);
    c["U_ordering"] = "xp-block";
    c["delta_a"] = vector_json(cert.delta_a);
    c["delta_b"] = vector_json(cert.delta_b);
    c["residual_min_eig"] = cert.residual_min_eig;
    c["rotated"] = covariance_to_json(cert.rotated);
    c["u_orthogonality"] = linalg::max_abs(MatrixXd(cert.u.matrix.transpose() * cert.u.matrix -
                                                    MatrixXd::Identity(2 * sigma.n(), 2 * sigma.n())));
    c["u_symplectic"] = symplectic_residual(cert.u.matrix);
    r["certificate"] = c;
    r["rotated_state_certified"] = verified;
    r["verdict"] = cert.residual_min_eig >= -config.tol.psd && verified ? "rotated state separable"
                                                                        : "certificate failed";
    if (std::abs(cert.residual_min_eig) < config.tol.psd) {
      r["note"] = "residual at the boundary: inconclusive at tolerance";
    }
  } else if (method == "certificate") {
    const MatrixXd sa = subsystem_covariance(sigma_a_spec, split.n_a, config, report, "sigma-a");
    const MatrixXd sb = subsystem_covariance(sigma_b_spec, split.n_b, config, report, "sigma-b");
    const CertificateCheck check = check_ww_certificate(sigma, sa, sb, split, config.hbar, config.tol);
    r["min_eig_a"] = check.min_eig_a;
    r["min_eig_b"] = check.min_eig_b;
    r["min_eig_difference"] = check.min_eig_diff;
    r["valid"] = check.valid;
    r["verdict"] = check.valid ? "separable" : "not certified";
    const double closest = std::min({std::abs(check.min_eig_a), std::abs(check.min_eig_b),
                                     std::abs(check.min_eig_diff)});
    if (closest < config.tol.psd) r["note"] = "a condition sits at the boundary: inconclusive at tolerance";
  } else {
    throw UsageError(fmt::format("unknown method '{}'", method));
  }
  report.results = r;
}

Grid1D symbol_operator_grid(const PhaseFunction& a, const Source& source, const RunConfig& config) {
  return source.builtin ? config.grid() : infer_operator_grid(a.grid, config.hbar);
}

Json operator_summary(const OperatorMatrix& m) {
  Json j;
  j["grid"] = grid_to_json(m.grid);
  j["trace"] = complex_json(m.trace());
  j["hermiticity_residual"] = m.hermiticity_residual();
  const MatrixXcd action = m.action();
  j["min_eig"] = linalg::min_eigenvalue(MatrixXcd(0.5 * (action + action.adjoint())));
  return j;
}

void cmd_toeplitz(const RunConfig& config, Report& report, const std::string& symbol_spec,
                  const std::string& window_spec, const std::string& route, bool density,
                  const std::string& csv) {
  Source symbol_source;
  Source window_source;
  const PhaseFunction a = parse_symbol(symbol_spec, config.grid(), config.hbar, symbol_source);
  report.sources.push_back(symbol_source);
  const Grid1D op = symbol_operator_grid(a, symbol_source, config);
  const WaveFunction phi = parse_window(window_spec, op, config.hbar, window_source);
  report.sources.push_back(window_source);
  if (route != "direct" && route != "weyl" && route != "both") {
    throw UsageError(fmt::format("--route must be direct, weyl or both, got '{}'", route));
  }
  Warnings* sink = &report.warnings;
  auto build = [&](ToeplitzRoute r) {
    return density ? toeplitz_density(a, phi, config.hbar, r, sink) : toeplitz_operator(a, phi, config.hbar, r, sink);
  };
  std::optional<OperatorMatrix> direct;
  std::optional<OperatorMatrix> weyl;
  if (route != "weyl") direct = build(ToeplitzRoute::kDirect);
  if (route != "direct") weyl = build(ToeplitzRoute::kWeyl);
  const OperatorMatrix& result = direct ? *direct : *weyl;

  const PhaseFunction symbol = toeplitz_weyl_symbol(a, phi, config.hbar);
  Json r;
  r["route"] = route;
  r["density"] = density;
  r["window_norm"] = phi.norm();
  r["operator"] = operator_summary(result);
  r["operator"]["csv"] = write_side(report, side_path(config, csv, "operator"), operator_csv(result, config.hbar));
  r["trace_via_symbol"] = complex_json(trace_via_symbol(symbol, config.hbar, sink));
  if (direct && weyl) {
    const double agreement = (direct->entries - weyl->entries).cwiseAbs().maxCoeff();
    r["route_agreement"] = agreement;
    if (agreement > config.tol.numerics) {
      report.warnings.push_back(fmt::format("routes differ by {:.3g} > tol numerics", agreement));
    }
  }
  if (density) {
    const DensityReport d = verify_density_operator(result, config.tol.numerics);
    r["density_check"] = {{"hermitian", d.hermitian},
                          {"hermiticity_residual", d.hermiticity_residual},
                          {"min_eig", d.min_eig},
                          {"trace", complex_json(d.trace)},
                          {"is_density", d.is_density}};
  }
  report.results = r;
}

WaveFunction load_pair(const RunConfig& config, Report& report, const std::string& psi_spec,
                       const std::string& phi_spec, WaveFunction& phi) {
  Source psi_source;
  const WaveFunction psi = parse_wavefunction(psi_spec, config.grid(), config.hbar, psi_source);
  report.sources.push_back(psi_source);
  if (phi_spec.empty()) {
    phi = psi;
  } else {
    Source phi_source;
    phi = parse_wavefunction(phi_spec, psi.grid, config.hbar, phi_source);
    report.sources.push_back(phi_source);
    require_same_grid(psi, phi);
  }
  return psi;
}

void cmd_wigner(const RunConfig& config, Report& report, const std::string& psi_spec,
                const std::string& phi_spec, const std::string& csv) {
  WaveFunction phi;
  const WaveFunction psi = load_pair(config, report, psi_spec, phi_spec, phi);
  const double hbar = config.hbar;
  const PhaseFunction w = cross_wigner(psi, phi, hbar);
  const std::complex<double> integral = w.integral();
  const std::complex<double> inner = inner_product(psi, phi);
  const double max_imag = w.samples.imag().cwiseAbs().maxCoeff();
  Json r;
  r["grid"] = {{"x", grid_to_json(w.grid.x)}, {"p", grid_to_json(w.grid.p)}};
  r["integral"] = complex_json(integral);
  r["inner_product"] = complex_json(inner);
  r["marginal_residual"] = std::abs(integral - inner);
  r["max_imag"] = max_imag;
  r["real_valued"] = max_imag < 1e-10;
  r["l1_norm"] = l1_norm(w);
  r["boundary_mass_fraction"] = boundary_mass_fraction(w);
  if (phi_spec.empty()) {
    double err = 0.0;
    for (int h = 0; h < w.grid.x.n; ++h) {
      for (int k = 0; k < w.grid.p.n; ++k) {
        const double x = w.grid.x.at(h);
        const double p = w.grid.p.at(k);
        err = std::max(err, std::abs(w.samples(h, k) - std::exp(-(x * x + p * p) / hbar) / (pi * hbar)));
      }
    }
    r["max_error_vs_standard_gaussian_wigner"] = err;
  }
  if (boundary_mass_fraction(w) > 1e-6) {
    report.warnings.push_back("Wigner function has mass at the grid boundary; enlarge --span");
  }
  r["csv"] = write_side(report, side_path(config, csv, "wigner"), phase_function_csv(w));
  report.results = r;
}

void cmd_ambiguity(const RunConfig& config, Report& report, const std::string& psi_spec,
                   const std::string& phi_spec, const std::string& csv) {
  WaveFunction phi;
  const WaveFunction psi = load_pair(config, report, psi_spec, phi_spec, phi);
  const PhaseFunction amb = ambiguity(psi, phi, config.hbar);
  const std::complex<double> origin = amb.samples(psi.grid.n, amb.grid.p.n / 2);
  const std::complex<double> expected = inner_product(psi, phi) / (2.0 * pi * config.hbar);
  Json r;
  r["grid"] = {{"x", grid_to_json(amb.grid.x)}, {"p", grid_to_json(amb.grid.p)}};
  r["value_at_origin"] = complex_json(origin);
  r["inner_product_over_2pi_hbar"] = complex_json(expected);
  r["origin_residual"] = std::abs(origin - expected);
  r["csv"] = write_side(report, side_path(config, csv, "ambiguity"), phase_function_csv(amb));
  report.results = r;
}

void cmd_weyl(const RunConfig& config, Report& report, const std::string& to_kernel,
              const std::string& to_symbol, const std::string& csv) {
  if (to_kernel.empty() == to_symbol.empty()) {
    throw UsageError("weyl needs exactly one of --to-kernel <symbol> or --to-symbol <operator>");
  }
  Json r;
  if (!to_kernel.empty()) {
    Source source;
    const PhaseFunction a = parse_symbol(to_kernel, config.grid(), config.hbar, source, true);
    report.sources.push_back(source);
    const OperatorMatrix k = weyl_symbol_to_kernel(a, config.hbar);
    const OperatorMatrix back = weyl_symbol_to_kernel(kernel_to_weyl_symbol(k, config.hbar), config.hbar);
    r["direction"] = "symbol-to-kernel";
    r["operator"] = operator_summary(k);
    r["trace_via_symbol"] = complex_json(trace_via_symbol(a, config.hbar, &report.warnings));
    r["kernel_round_trip_residual"] = (back.entries - k.entries).cwiseAbs().maxCoeff();
    r["operator"]["csv"] = write_side(report, side_path(config, csv, "operator"), operator_csv(k, config.hbar));
  } else {
    Source source{to_symbol, read_text(to_symbol), false};
    report.sources.push_back(source);
    const OperatorMatrix k = parse_operator_csv(source.bytes, to_symbol);
    const PhaseFunction a = kernel_to_weyl_symbol(k, config.hbar);
    const OperatorMatrix back = weyl_symbol_to_kernel(a, config.hbar);
    r["direction"] = "kernel-to-symbol";
    r["operator"] = operator_summary(k);
    r["trace_via_symbol"] = complex_json(trace_via_symbol(a, config.hbar, &report.warnings));
    r["kernel_round_trip_residual"] = (back.entries - k.entries).cwiseAbs().maxCoeff();
    r["symbol_grid"] = {{"x", grid_to_json(a.grid.x)}, {"p", grid_to_json(a.grid.p)}};
    r["csv"] = write_side(report, side_path(config, csv, "symbol"), phase_function_csv(a));
  }
  report.results = r;
}

int cmd_selftest(const RunConfig& config, Report& report) {
  acceptance::Options options;
  options.hbar = config.hbar;
  options.seed = config.seed;
  const auto results = acceptance::run_all(options, [](const acceptance::Result& result) {
    std::cerr << acceptance::format_line(result) << std::endl;
  });
  Json list = Json::array();
  for (const auto& result : results) {
    list.push_back({{"id", result.id},
                    {"title", result.title},
                    {"passed", result.passed},
                    {"companion", result.companion},
                    {"detail", result.detail},
                    {"seconds", result.seconds}});
  }
  const bool passed = acceptance::all_criteria_passed(results);
  report.results = {{"criteria", list}, {"all_passed", passed}};
  return passed ? 0 : kExitSelftestFailed;
}

void emit(const RunConfig& config, const Report& report) {
  const std::string text = report.to_json(config).dump(2) + "\n";
  if (config.out.empty()) {
    std::cout << text;
  } else {
    write_text(config.out, text);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"phasekit: Gaussian phase-space analysis and Toeplitz density operators"};
  app.require_subcommand(1);
  Flags flags;
  flags.hbar_opt = app.add_option("--hbar", flags.hbar, "Planck constant (default 1)");
  flags.grid_opt = app.add_option("--grid-n", flags.grid_n, "Grid points, power of two >= 16 (default 256)");
  flags.span_opt = app.add_option("--span", flags.span, "Grid half-width in units of sqrt(hbar) (default 8)");
  app.add_option("--tol", flags.tol, "Override a tolerance: <name>=<value> (repeatable)");
  flags.seed_opt = app.add_option("--seed", flags.seed, "Random seed (default 42)");
  app.add_flag("--strict", flags.strict, "Exit 3 when an accuracy warning is raised");
  app.add_option("--out", flags.out, "Write the JSON report here instead of stdout");
  app.add_option("--config", flags.config, "JSON config file (flags take precedence)");

  std::string cov;
  std::string csv;
  auto* check = app.add_subcommand("check-state", "Quantum positivity, symplectic spectrum and purity");
  check->add_option("covariance", cov, "Covariance JSON, vacuum:<n>, diag:<v,...> or tms:<r>")->required();

  auto* will = app.add_subcommand("williamson", "Williamson diagonalization Σ = S diag(Λ, Λ) Sᵀ");
  will->add_option("covariance", cov, "Covariance input")->required();

  std::string split;
  std::string method = "ppt";
  std::string sigma_a;
  std::string sigma_b;
  auto* sep = app.add_subcommand("separability", "PPT test, disentangling rotation or certificate check");
  sep->add_option("covariance", cov, "Covariance input")->required();
  sep->add_option("--split", split, "<n_A>,<n_B> (default 1,1 for two modes)");
  sep->add_option("--method", method, "ppt | rotation | certificate")
      ->check(CLI::IsMember({"ppt", "rotation", "certificate"}));
  sep->add_option("--sigma-a", sigma_a, "Σ_A for method certificate (per-mode ordering)");
  sep->add_option("--sigma-b", sigma_b, "Σ_B for method certificate (per-mode ordering)");

  std::string symbol;
  std::string window = "std-gaussian";
  std::string route = "direct";
  bool density = false;
  auto* toep = app.add_subcommand("toeplitz", "Toeplitz operator / density from a symbol and a window");
  toep->add_option("symbol", symbol, "Symbol CSV, gaussian:<v>, gaussian:<vx>,<vp>,<cxp> or dog:<a>")->required();
  toep->add_option("--window", window, "std-gaussian | hermite:<k> | window:<X>,<Y> | JSON window | CSV");
  toep->add_option("--route", route, "direct | weyl | both")->check(CLI::IsMember({"direct", "weyl", "both"}));
  toep->add_flag("--density", density, "Treat the symbol as a probability density μ and verify Op_φ(μ) is a density operator");
  toep->add_option("--csv", csv, "Operator CSV path");

  std::string psi;
  std::string phi;
  auto* wig = app.add_subcommand("wigner", "Cross-Wigner transform W(ψ, φ)");
  wig->add_option("psi", psi, "Wavefunction CSV, gaussian, hermite:<k> or coherent:<x0>,<p0>")->required();
  wig->add_option("phi", phi, "Second wavefunction (default ψ)");
  wig->add_option("--csv", csv, "Phase-function CSV path");

  auto* amb = app.add_subcommand("ambiguity", "Ambiguity function Amb(ψ, φ)");
  amb->add_option("psi", psi, "Wavefunction input")->required();
  amb->add_option("phi", phi, "Second wavefunction (default ψ)");
  amb->add_option("--csv", csv, "Phase-function CSV path");

  std::string to_kernel;
  std::string to_symbol;
  auto* weyl = app.add_subcommand("weyl", "Weyl symbol ↔ kernel");
  weyl->add_option("--to-kernel", to_kernel, "Symbol CSV on a symbol grid, or a built-in symbol");
  weyl->add_option("--to-symbol", to_symbol, "Operator CSV");
  weyl->add_option("--csv", csv, "Output CSV path");

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  RunConfig config;
  Report report;
  for (int i = 1; i < argc; ++i) report.args.emplace_back(argv[i]);
  int code = 0;
  try {
    config = resolve_config(flags);
    if (check->parsed()) {
      report.command = "check-state";
      cmd_check_state(config, report, cov);
    } else if (will->parsed()) {
      report.command = "williamson";
      cmd_williamson(config, report, cov);
    } else if (sep->parsed()) {
      report.command = "separability";
      cmd_separability(config, report, cov, split, method, sigma_a, sigma_b);
    } else if (toep->parsed()) {
      report.command = "toeplitz";
      cmd_toeplitz(config, report, symbol, window, route, density, csv);
    } else if (wig->parsed()) {
      report.command = "wigner";
      cmd_wigner(config, report, psi, phi, csv);
    } else if (amb->parsed()) {
      report.command = "ambiguity";
      cmd_ambiguity(config, report, psi, phi, csv);
    } else if (weyl->parsed()) {
      report.command = "weyl";
      cmd_weyl(config, report, to_kernel, to_symbol, csv);
    } else if (self->parsed()) {
      report.command = "selftest";
      code = cmd_selftest(config, report);
    }
    emit(config, report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (code != 0) return code;
  if (config.strict && !report.warnings.empty()) return kExitStrictWarning;
  return 0;
}

}  // namespace
}  // namespace phasekit::cli

int main(int argc, char** argv) { return phasekit::cli::run(argc, argv); }
