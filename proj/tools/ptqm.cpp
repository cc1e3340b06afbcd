// ptqm: batch front-end for the PT-symmetric Hamiltonian toolkit.
//
// Subcommands: spectrum, transform, scan, chain, swanson. Each reads one
// JSON config and writes CSV/JSON artifacts into --out. Numeric payloads
// are deterministic for a fixed config; only the '#' header line carries
// a timestamp.
//
// Exit codes: 0 ok, 2 config error, 3 numerical failure (including
// residual certification), 4 I/O error.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptqm/bargmann.hpp"
#include "ptqm/hamiltonians.hpp"
#include "ptqm/io.hpp"
#include "ptqm/spectra.hpp"
#include "ptqm/spinchain.hpp"
#include "ptqm/swanson.hpp"
#include "ptqm/transforms.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using namespace ptqm;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  double tol = 1e-8;  // residual certification tolerance
};

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot open config " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw config_error(std::string("config parse: ") + e.what());
  }
}

Grid grid_from(const json& j) {
  if (!j.contains("grid")) throw config_error("config needs a grid section");
  const auto& g = j.at("grid");
  return Grid::make(g.at("x_max").get<double>(), g.at("n").get<int>());
}

PotentialSpec potential_from(const json& j, const Grid& grid, const fs::path& base) {
  if (j.contains("potential_file")) {
    const fs::path p = base / j.at("potential_file").get<std::string>();
    std::ifstream f(p);
    if (!f) throw io_error("cannot open potential file " + p.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return io::potential_from_json_text(ss.str(), grid, p.parent_path());
  }
  if (!j.contains("potential")) throw config_error("config needs potential or potential_file");
  return io::potential_from_json_text(j.at("potential").dump(), grid, base);
}

std::string stamp(const std::string& command) {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  std::ostringstream os;
  os << "ptqm " << command << " schema=" << io::kSchemaVersion << " generated="
     << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw io_error("cannot open " + path.string() + " for writing");
  f << j.dump(2) << "\n";
}

void require_certified(const Spectrum& s, double tol) {
  if (!certified(s, tol)) {
    throw eigensolve_failure("residual certification failed: max residual " +
                             io::format_sig(s.max_residual) + " exceeds " +
                             io::format_sig(tol * s.h_max_abs * s.eigenvalues.size()));
  }
}

int run_spectrum(const CommonOpts& opts) {
  const json cfg = load_config(opts.config_path);
  const Grid grid = grid_from(cfg);
  const fs::path base = fs::path(opts.config_path).parent_path();
  const PotentialSpec spec = potential_from(cfg, grid, base);
  const std::string method = cfg.value("method", std::string("position"));

  OperatorMatrix h;
  if (method == "position")
    h = assemble_position(spec, grid);
  else if (method == "momentum_conjugation")
    h = assemble_momentum(spec, grid, MomentumMethod::conjugation);
  else if (method == "momentum_kernel")
    h = assemble_momentum(spec, grid, MomentumMethod::kernel_quadrature);
  else
    throw config_error("unknown method '" + method + "'");

  const Spectrum s = eigensolve(h);
  require_certified(s, opts.tol);
  const double classify_tol = cfg.value("classify_tol", 1e-8);
  const PTClassification cls = classify(s, classify_tol);

  std::vector<std::vector<double>> rows;
  rows.reserve(s.eigenvalues.size());
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    rows.push_back({static_cast<double>(i), s.eigenvalues[i].real(), s.eigenvalues[i].imag(),
                    s.residuals[i]});
  io::write_csv(fs::path(opts.out_dir) / "eigenvalues.csv", stamp("spectrum"),
                {"index", "re", "im", "residual"}, rows);

  json report;
  report["schema_version"] = io::kSchemaVersion;
  report["method"] = method;
  report["dim"] = h.dim();
  report["phase"] = cls.phase == Phase::unbroken ? "unbroken" : "broken";
  report["n_real"] = cls.n_real;
  report["n_conjugate_pairs"] = cls.conjugate_pairs.size();
  report["n_unpaired_complex"] = cls.unpaired_complex.size();
  report["max_residual"] = s.max_residual;
  report["pt_symmetric"] = check_pt_symmetry(spec, grid).is_pt;
  write_json(fs::path(opts.out_dir) / "spectrum.json", report);

  if (cfg.value("export_matrix", false))
    io::write_dense_matrix(fs::path(opts.out_dir) / "matrix.bin", h.m);
  return 0;
}

int run_transform(const CommonOpts& opts) {
  const json cfg = load_config(opts.config_path);
  const Grid grid = grid_from(cfg);
  const std::string conv_name = cfg.value("convention", std::string("unitary"));
  FourierConvention conv;
  if (conv_name == "unitary")
    conv = FourierConvention::unitary;
  else if (conv_name == "analyst")
    conv = FourierConvention::analyst;
  else
    throw config_error("unknown convention '" + conv_name + "'");

  WaveFunction f;
  f.grid = grid;
  f.space = Space::position;
  f.samples = cvec::Zero(grid.n);
  const auto& fn = cfg.at("function");
  const std::string type = fn.at("type").get<std::string>();
  if (type == "hermite") {
    const int k = fn.value("n", 0);
    const auto hs = hermite_functions(grid.nodes(), k);
    for (int i = 0; i < grid.n; ++i) f.samples[i] = hs[k][i];
  } else if (type == "gaussian") {
    for (int i = 0; i < grid.n; ++i) {
      const double x = grid.node(i);
      f.samples[i] = std::pow(std::acos(-1.0), -0.25) * std::exp(-0.5 * x * x);
    }
  } else if (type == "csv") {
    const fs::path p = fs::path(opts.config_path).parent_path() / fn.at("path").get<std::string>();
    const auto vals = io::read_tabulated_csv(p, grid);
    for (int i = 0; i < grid.n; ++i) f.samples[i] = vals[i];
  } else {
    throw config_error("unknown function type '" + type + "'");
  }

  const WaveFunction ff = fourier(f, conv);
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < grid.n; ++i)
    rows.push_back({ff.grid.node(i), ff.samples[i].real(), ff.samples[i].imag()});
  io::write_csv(fs::path(opts.out_dir) / "transform.csv", stamp("transform"),
                {"k", "re", "im"}, rows);

  if (cfg.contains("bargmann_n_max")) {
    const BargmannFunction b = segal_bargmann(f, cfg.at("bargmann_n_max").get<int>());
    std::vector<std::vector<double>> brows;
    for (int n = 0; n <= b.n_max(); ++n)
      brows.push_back({static_cast<double>(n), b.coeffs[n].real(), b.coeffs[n].imag()});
    io::write_csv(fs::path(opts.out_dir) / "bargmann.csv", stamp("transform"),
                  {"n", "re", "im"}, brows);
  }
  return 0;
}

std::vector<double> lambda_range(const json& j) {
  const double lo = j.at("lo").get<double>();
  const double hi = j.at("hi").get<double>();
  const double step = j.at("step").get<double>();
  if (!(step > 0.0) || hi < lo) throw config_error("bad lambda range");
  std::vector<double> out;
  for (double v = lo; v <= hi + 0.5 * step; v += step) out.push_back(v);
  return out;
}

int run_scan(const CommonOpts& opts) {
  const json cfg = load_config(opts.config_path);
  const auto& fam = cfg.at("family");
  const std::string type = fam.at("type").get<std::string>();
  const std::vector<double> lambdas = lambda_range(cfg.at("lambda"));

  json report;
  report["schema_version"] = io::kSchemaVersion;
  report["family"] = type;
  std::vector<std::vector<double>> rows;

  if (type == "swanson_beta") {
    const auto scan = swanson_beta_scan(fam.at("omega").get<double>(),
                                        fam.at("alpha").get<double>(), lambdas);
    for (const auto& [beta, mi] : scan.table)
      rows.push_back({beta, mi, mi <= 1e-12 ? 10.0 : 0.0, mi > 1e-12 ? 1.0 : 0.0});
    report["threshold"] = scan.threshold ? json(*scan.threshold) : json();
  } else {
    const Grid grid = grid_from(cfg);
    std::function<PotentialSpec(double)> family;
    if (type == "double_delta") {
      const double a = fam.value("location", 1.0);
      const double s_re = fam.value("strength_re", 1.0);
      family = [=](double gamma) {
        return PotentialSpec{}.add_delta_pair(complexd(s_re, gamma), a);
      };
    } else if (type == "harmonic_imaginary_x") {
      family = [](double lam) {
        PotentialSpec s;
        s.add_even_poly({0.0, 0.0, 1.0});
        s.add_odd_poly({0.0, lam});
        return s;
      };
    } else {
      throw config_error("unknown scan family '" + type + "'");
    }
    ScanOptions sopts;
    sopts.n_lowest = cfg.value("n_lowest", 10);
    sopts.indicator_tol = cfg.value("indicator_tol", 1e-8);
    sopts.bisect_tol = cfg.value("bisect_tol", 1e-4);
    const ScanResult scan = pt_phase_scan(family, lambdas, grid, sopts);
    for (const auto& r : scan.table)
      rows.push_back({r.lambda, r.max_imag, static_cast<double>(r.n_real),
                      r.beyond_threshold ? 1.0 : 0.0});
    report["threshold"] = scan.threshold ? json(*scan.threshold) : json();
  }

  io::write_csv(fs::path(opts.out_dir) / "scan.csv", stamp("scan"),
                {"lambda", "max_im", "n_real", "threshold_flag"}, rows);
  write_json(fs::path(opts.out_dir) / "scan.json", report);
  return 0;
}

int run_chain(const CommonOpts& opts) {
  const json cfg = load_config(opts.config_path);
  const int sites = cfg.at("sites").get<int>();
  std::vector<double> gs;
  if (cfg.contains("g_values"))
    gs = cfg.at("g_values").get<std::vector<double>>();
  else
    gs = lambda_range(cfg.at("g"));

  std::vector<std::vector<double>> rows;
  for (const double g : gs) {
    const Spectrum s = eigensolve(build_xx_pauli(ChainSpec::make(sites, g)));
    require_certified(s, opts.tol);
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
      rows.push_back({g, static_cast<double>(i), s.eigenvalues[i].real(),
                      s.eigenvalues[i].imag()});
  }
  io::write_csv(fs::path(opts.out_dir) / "chain.csv", stamp("chain"),
                {"g", "index", "re", "im"}, rows);

  const ChainScan scan = chain_phase_diagram(sites, gs);
  json report;
  report["schema_version"] = io::kSchemaVersion;
  report["sites"] = sites;
  report["g_reality_lost"] = scan.g_reality_lost ? json(*scan.g_reality_lost) : json();
  write_json(fs::path(opts.out_dir) / "chain.json", report);
  return 0;
}

int run_swanson(const CommonOpts& opts) {
  const json cfg = load_config(opts.config_path);
  SwansonParams p;
  p.omega = cfg.at("omega").get<double>();
  p.alpha = cfg.at("alpha").get<double>();
  p.beta = cfg.at("beta").get<double>();
  p.xi0 = cfg.value("xi0", 1.0);
  p.hbar = cfg.value("hbar", 1.0);
  const int n_trunc = cfg.value("n_trunc", 200);

  const Spectrum s = eigensolve(swanson_fock_matrix(p, n_trunc));
  require_certified(s, opts.tol);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    rows.push_back({static_cast<double>(i), s.eigenvalues[i].real(), s.eigenvalues[i].imag(),
                    s.residuals[i]});
  io::write_csv(fs::path(opts.out_dir) / "swanson_eigs.csv", stamp("swanson"),
                {"index", "re", "im", "residual"}, rows);

  json report;
  report["schema_version"] = io::kSchemaVersion;
  report["omega"] = p.omega;
  report["alpha"] = p.alpha;
  report["beta"] = p.beta;
  report["xi0"] = p.xi0;
  report["hbar"] = p.hbar;
  report["n_trunc"] = n_trunc;
  try {
    const SwansonDerived d = map_to_harmonic(p);
    report["m"] = d.mass;
    report["Omega_re"] = d.big_omega.real();
    report["Omega_im"] = d.big_omega.imag();
    report["theta"] = d.theta;
    report["k_re"] = d.k.real();
    report["k_im"] = d.k.imag();
    report["s_re"] = d.s.real();
    report["s_im"] = d.s.imag();
    report["s_tilde_re"] = d.s_tilde.real();
    report["s_tilde_im"] = d.s_tilde.imag();
    report["det_M"] = bogoliubov(d.theta).det().real();
  } catch (const free_particle_limit&) {
    report["mapping"] = "free_particle_limit";
  }
  json analytic = json::array();
  for (int n = 0; n < 10; ++n) {
    const complexd e = swanson_analytic_spectrum(p, n);
    analytic.push_back({{"n", n}, {"re", e.real()}, {"im", e.imag()}});
  }
  report["analytic_spectrum"] = analytic;
  write_json(fs::path(opts.out_dir) / "swanson.json", report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PT-symmetric Hamiltonian toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "JSON config file")->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--tol", opts.tol, "residual certification tolerance");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "diagonalize one Hamiltonian");
  auto* transform_cmd = app.add_subcommand("transform", "Fourier / Segal-Bargmann transforms");
  auto* scan_cmd = app.add_subcommand("scan", "PT-breaking threshold scan");
  auto* chain_cmd = app.add_subcommand("chain", "non-Hermitian XX chain spectra");
  auto* swanson_cmd = app.add_subcommand("swanson", "Swanson model run");
  for (auto* c : {spectrum_cmd, transform_cmd, scan_cmd, chain_cmd, swanson_cmd}) add_common(c);

  CLI11_PARSE(app, argc, argv);

  try {
    std::filesystem::create_directories(opts.out_dir);
    if (spectrum_cmd->parsed()) return run_spectrum(opts);
    if (transform_cmd->parsed()) return run_transform(opts);
    if (scan_cmd->parsed()) return run_scan(opts);
    if (chain_cmd->parsed()) return run_chain(opts);
    if (swanson_cmd->parsed()) return run_swanson(opts);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_grid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_potential& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
