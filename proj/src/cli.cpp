#include "rabiparity/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rabiparity/linalg.hpp"
#include "rabiparity/model.hpp"
#include "rabiparity/parity.hpp"
#include "rabiparity/riccati.hpp"
#include "rabiparity/spectra.hpp"

namespace rabiparity::cli {

namespace {

struct CliConfig {
  ModelParams params;
  std::string g_text = "0.5";
  double tolerance = kDefaultVerifyTolerance;
  std::string out_path;
  std::string format = "json";

  // verify
  std::string candidate = "xk";
  std::string dump_path;
  bool no_spectra = false;

  // spectrum / sweep
  std::size_t levels = 5;
  std::string sweep_param = "g";
  double lo = 0.0;
  double hi = 1.0;
  int steps = 11;
  unsigned jobs = 1;

  // evolve
  double t_max = 1.0;
  std::string state = "ground";
  bool trajectory = false;
};

// One line, suitable after "error: ".
std::string single_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

void add_model_options(CLI::App* sub, CliConfig& cfg, bool physical) {
  sub->add_option("--k", cfg.params.k, "photons exchanged per coupling term (k >= 1)")->required();
  sub->add_option("--dim", cfg.params.dim, "boson truncation (dim >= 2k)")->required();
  if (physical) {
    sub->add_option("--alpha", cfg.params.alpha, "qubit gap")->capture_default_str();
    sub->add_option("--omega", cfg.params.omega, "mode frequency (> 0)")->capture_default_str();
    sub->add_option("--g", cfg.g_text, "coupling, complex literal a, a+bi or a-bi")->capture_default_str();
  }
  sub->add_option("--out", cfg.out_path, "write results to FILE instead of stdout");
}

void warn_if_uneven(const ModelParams& p, std::ostream& err) {
  if (p.dim % static_cast<std::size_t>(p.k) != 0) {
    err << "warning: k=" << p.k << " does not divide dim=" << p.dim
        << "; sector sizes differ by one\n";
  }
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const Candidate candidate = parse_candidate(cfg.candidate);
  const VerificationReport report = verify_model(cfg.params, candidate, cfg.tolerance, !cfg.no_spectra);

  if (!cfg.dump_path.empty()) {
    std::ofstream dump(cfg.dump_path);
    if (!dump) throw DomainError("cannot open dump file '" + cfg.dump_path + "'");
    write_matrix(dump, build_full(cfg.params));
  }

  if (cfg.format == "json") {
    out << report.to_json() << '\n';
  } else {
    out << "key,value\n";
    out << "candidate," << report.candidate << '\n';
    out << "residual_norm," << format_real(report.residual_norm) << '\n';
    out << "relative_residual," << format_real(report.relative_residual) << '\n';
    out << "involution_defect," << format_real(report.involution_defect) << '\n';
    out << "intertwining_defect," << format_real(report.intertwining_defect) << '\n';
    out << "is_involution," << (report.is_involution ? "true" : "false") << '\n';
    out << "intertwines," << (report.intertwines ? "true" : "false") << '\n';
    out << "spectra_match," << (report.spectra_match ? format_real(*report.spectra_match) : "") << '\n';
    out << "tolerance," << format_real(report.tolerance) << '\n';
    out << "passed," << (report.passed ? "true" : "false") << '\n';
  }
  return report.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_parity_table(const CliConfig& cfg, std::ostream& out) {
  const SectorDecomposition sd(cfg.params.k, cfg.params.dim);
  const ParityOperator x = generalized_parity(cfg.params.k, cfg.params.dim);
  out << "p,n,l,sign\n";
  for (std::size_t p = 0; p < sd.dim(); ++p) {
    const SectorIndex idx = sd.sector_of(p);
    out << p << ',' << idx.n << ',' << idx.l << ',' << x.sign(p) << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const CliConfig& cfg, std::ostream& out) {
  const ModelParams& p = cfg.params;
  if (cfg.levels < 1 || cfg.levels > p.dim) throw DomainError("--levels must lie in 1..dim");
  const RiccatiCoefficients c = riccati_coefficients(p);
  const BlockDiagonalForm blocks = block_diagonalize(c, generalized_parity(p.k, p.dim).matrix(), cfg.tolerance);
  const std::vector<double> top = eigvals_hermitian(blocks.top);
  const std::vector<double> bottom = eigvals_hermitian(blocks.bottom);
  const ComplexMatrix full_matrix = assemble(c);
  const std::vector<double> full = eigvals_hermitian(full_matrix);

  if (!cfg.dump_path.empty()) {
    std::ofstream dump(cfg.dump_path);
    if (!dump) throw DomainError("cannot open dump file '" + cfg.dump_path + "'");
    write_matrix(dump, full_matrix);
  }

  std::vector<double> merged = top;
  merged.insert(merged.end(), bottom.begin(), bottom.end());
  std::sort(merged.begin(), merged.end());
  double deviation = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) deviation = std::max(deviation, std::abs(full[i] - merged[i]));

  out << "block,level,eigenvalue\n";
  for (std::size_t i = 0; i < cfg.levels; ++i) out << "+," << i << ',' << format_real(top[i]) << '\n';
  for (std::size_t i = 0; i < cfg.levels; ++i) out << "-," << i << ',' << format_real(bottom[i]) << '\n';
  for (std::size_t i = 0; i < cfg.levels; ++i) out << "full," << i << ',' << format_real(full[i]) << '\n';
  out << "deviation,0," << format_real(deviation) << '\n';
  return kExitOk;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out) {
  SweepSpec spec;
  spec.base = cfg.params;
  spec.param = parse_sweep_param(cfg.sweep_param);
  spec.lo = cfg.lo;
  spec.hi = cfg.hi;
  spec.steps = cfg.steps;
  spec.levels = cfg.levels;
  write_sweep_csv(out, sweep(spec, cfg.jobs));
  return kExitOk;
}

int cmd_evolve(const CliConfig& cfg, std::ostream& out) {
  const ModelParams& p = cfg.params;
  if (cfg.steps < 1) throw DomainError("--steps must be >= 1");
  if (!std::isfinite(cfg.t_max) || cfg.t_max < 0.0) throw DomainError("--t-max must be finite and >= 0");

  EvolutionSpec spec;
  if (cfg.state == "ground") {
    spec.initial = vacuum_state(p);
  } else {
    std::ifstream in(cfg.state);
    if (!in) throw DomainError("cannot open state file '" + cfg.state + "'");
    spec.initial = read_state(in);
  }
  spec.dt = cfg.t_max / cfg.steps;
  spec.steps = cfg.steps;
  const Trajectory traj = evolve(p, spec);

  if (cfg.trajectory) {
    write_trajectory_csv(out, traj);
    return kExitOk;
  }
  out << "t,norm,plus_weight,minus_weight\n";
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    const ComplexVector& psi = traj.states[s];
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t i = 0; i < p.dim; ++i) {
      plus += std::norm(psi[i]);
      minus += std::norm(psi[i + p.dim]);
    }
    out << format_real(traj.times[s]) << ',' << format_real(std::sqrt(plus + minus)) << ','
        << format_real(plus) << ',' << format_real(minus) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Generalized parity and block diagonalization of the k-photon Rabi model", "rabiparity"};
  app.require_subcommand(1, 1);

  auto* verify = app.add_subcommand("verify", "check a candidate parity against the Riccati equation (JSON report)");
  add_model_options(verify, cfg, true);
  verify->add_option("--candidate", cfg.candidate, "xk (generalized parity), p (bosonic) or t (two-photon)")
      ->capture_default_str();
  verify->add_option("--tol", cfg.tolerance, "relative verification tolerance")->capture_default_str();
  verify->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verify->add_option("--dump", cfg.dump_path, "write the full Hamiltonian matrix to FILE");
  verify->add_flag("--no-spectra", cfg.no_spectra, "skip the block vs full spectrum comparison");

  auto* table = app.add_subcommand("parity-table", "list Fock index, sector coordinates and sign of X_k (CSV)");
  add_model_options(table, cfg, false);

  auto* spectrum = app.add_subcommand("spectrum", "sector spectra and full-spectrum deviation (CSV)");
  add_model_options(spectrum, cfg, true);
  spectrum->add_option("--levels", cfg.levels, "levels per block")->capture_default_str();
  spectrum->add_option("--tol", cfg.tolerance, "relative verification tolerance")->capture_default_str();
  spectrum->add_option("--dump", cfg.dump_path, "write the full Hamiltonian matrix to FILE");

  auto* sweep_cmd = app.add_subcommand("sweep", "sector spectra over a parameter grid (CSV)");
  add_model_options(sweep_cmd, cfg, true);
  sweep_cmd->add_option("--param", cfg.sweep_param, "g (|g|, phase kept), alpha or omega")
      ->check(CLI::IsMember({"g", "alpha", "omega"}))
      ->capture_default_str();
  sweep_cmd->add_option("--lo", cfg.lo, "first grid value")->capture_default_str();
  sweep_cmd->add_option("--hi", cfg.hi, "last grid value")->capture_default_str();
  sweep_cmd->add_option("--steps", cfg.steps, "grid points (>= 2)")->capture_default_str();
  sweep_cmd->add_option("--levels", cfg.levels, "levels per block")->capture_default_str();
  sweep_cmd->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();

  auto* evolve_cmd = app.add_subcommand("evolve", "time evolution through the decoupled blocks (CSV)");
  add_model_options(evolve_cmd, cfg, true);
  evolve_cmd->add_option("--t-max", cfg.t_max, "final time; the step is t-max / steps")->capture_default_str();
  evolve_cmd->add_option("--steps", cfg.steps, "time steps")->capture_default_str();
  evolve_cmd->add_option("--state", cfg.state, "'ground' for |+>|0>, or a state file")->capture_default_str();
  evolve_cmd->add_flag("--trajectory", cfg.trajectory, "emit every state component instead of weights");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    // parity-table only takes k and dim; the other fields keep valid defaults.
    if (!table->parsed()) cfg.params.g = parse_complex(cfg.g_text);
    cfg.params.validate();
    if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) throw DomainError("--tol must be finite and > 0");
    warn_if_uneven(cfg.params, err);

    std::ostringstream buffer;
    int code = kExitOk;
    if (verify->parsed()) code = cmd_verify(cfg, buffer);
    else if (table->parsed()) code = cmd_parity_table(cfg, buffer);
    else if (spectrum->parsed()) code = cmd_spectrum(cfg, buffer);
    else if (sweep_cmd->parsed()) code = cmd_sweep(cfg, buffer);
    else if (evolve_cmd->parsed()) code = cmd_evolve(cfg, buffer);

    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path);
      if (!file) throw DomainError("cannot open output file '" + cfg.out_path + "'");
      file << buffer.str();
    }
    return code;
  } catch (const VerificationError& e) {
    err << "error: " << single_line(e.what()) << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    // DomainError and DimensionError: bad parameters or inputs.
    err << "error: " << single_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: internal: " << single_line(e.what()) << '\n';
    return kExitInternal;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace rabiparity::cli
