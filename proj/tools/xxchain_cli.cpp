// xxchain_cli.cpp — command-line front end: spectra, steady states, currents,
// rectification, parameter sweeps and the oracle verification suite

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxchain/bath.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/dynamics.hpp"
#include "xxchain/errors.hpp"
#include "xxchain/liouville.hpp"
#include "xxchain/spectral.hpp"
#include "xxchain/sweep.hpp"
#include "xxchain/transport.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw xxchain::io_error("cannot read config file \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw xxchain::io_error("cannot open \"" + output_path + "\" for writing");
  }
  out << text;
  if (!out) {
    throw xxchain::io_error("failed writing \"" + output_path + "\"");
  }
}

struct CommonArgs {
  std::string config_path;
  std::string output_path;
  int threads = 0;  // 0: take the config value
};

xxchain::RunConfig load_config(const CommonArgs& args) {
  if (args.config_path.empty()) {
    throw xxchain::validation_error("a --config file is required");
  }
  return xxchain::parse_run_config(read_file(args.config_path));
}

xxchain::BathPair require_baths(const xxchain::RunConfig& config) {
  if (!config.baths) {
    throw xxchain::validation_error(
        "config: this command needs a \"baths\" section");
  }
  return *config.baths;
}

void run_spectrum(const CommonArgs& args) {
  const xxchain::RunConfig config = load_config(args);
  const xxchain::ChainSpec chain = xxchain::instantiate(config.chain);
  const xxchain::SpectralData spec = xxchain::diagonalize(chain);
  std::ostringstream out;
  out << "k,eps,g_L,g_R\n";
  for (int k = 0; k < spec.size(); ++k) {
    out << (k + 1) << ',' << format_value(spec.eps[k]) << ','
        << format_value(spec.g_left[k]) << ',' << format_value(spec.g_right[k])
        << '\n';
  }
  write_output(out.str(), args.output_path);
  if (spec.degenerate()) {
    std::cerr << "warning: near-degenerate eigenvalues detected; the secular "
                 "master equation is unreliable for this chain\n";
  }
}

void run_steady(const CommonArgs& args) {
  const xxchain::RunConfig config = load_config(args);
  const xxchain::ChainSpec chain = xxchain::instantiate(config.chain);
  const xxchain::BathPair baths = require_baths(config);
  const xxchain::SpectralData spec = xxchain::diagonalize(chain);
  const xxchain::Occupations occupations =
      xxchain::steady_occupations(spec, baths);
  std::ostringstream out;
  out << "k,eps,n,flags\n";
  for (int k = 0; k < spec.size(); ++k) {
    const bool decoupled =
        std::find(occupations.decoupled.begin(), occupations.decoupled.end(),
                  k) != occupations.decoupled.end();
    out << (k + 1) << ',' << format_value(spec.eps[k]) << ','
        << format_value(occupations.n[k]) << ','
        << (decoupled ? "DECOUPLED" : "") << '\n';
  }
  write_output(out.str(), args.output_path);
}

void run_current(const CommonArgs& args) {
  const xxchain::RunConfig config = load_config(args);
  const xxchain::ChainSpec chain = xxchain::instantiate(config.chain);
  const xxchain::BathPair baths = require_baths(config);
  const xxchain::SpectralData spec = xxchain::diagonalize(chain);
  std::ostringstream out;
  out << "J_N,J_E\n"
      << format_value(xxchain::particle_current(spec, baths, chain.gamma)) << ','
      << format_value(xxchain::energy_current(spec, baths, chain.gamma)) << '\n';
  write_output(out.str(), args.output_path);
}

void run_rectify(const CommonArgs& args) {
  const xxchain::RunConfig config = load_config(args);
  const xxchain::ChainSpec chain = xxchain::instantiate(config.chain);
  const xxchain::BathPair baths = require_baths(config);
  const xxchain::RectificationResult result = xxchain::rectify(chain, baths);
  std::ostringstream out;
  out << "J_fwd,J_rev,R,flags\n"
      << format_value(result.forward) << ',' << format_value(result.reversed)
      << ',' << format_value(result.factor) << ',';
  std::vector<std::string> flags;
  if (result.degenerate_spectrum) flags.push_back("DEGENERATE");
  if (!result.factor_defined) flags.push_back("R_UNDEFINED");
  if (result.same_sign) flags.push_back("SAME_SIGN");
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i > 0) out << ';';
    out << flags[i];
  }
  out << '\n';
  write_output(out.str(), args.output_path);
}

void run_sweep_command(const CommonArgs& args) {
  if (args.config_path.empty()) {
    throw xxchain::validation_error("a --config file is required");
  }
  xxchain::SweepConfig config =
      xxchain::parse_config(read_file(args.config_path));
  if (args.threads > 0) config.threads = args.threads;
  if (!args.output_path.empty()) config.output = args.output_path;

  const std::vector<xxchain::SweepRow> rows = xxchain::run_sweep(config);
  if (config.output.empty()) {
    std::ostringstream out;
    xxchain::emit_csv(rows, out);
    std::cout << out.str();
  } else {
    xxchain::write_csv(rows, config.output);
    std::cerr << rows.size() << " rows written to " << config.output << '\n';
  }
}

// ---- verify: fermionic formulas against the dense Liouvillian oracle ----

struct Check {
  std::string name;
  double worst = 0.0;
  double threshold;
  bool passed = true;

  void record(double error) {
    worst = std::max(worst, error);
    passed = passed && error <= threshold;
  }
};

double relative_error(double value, double reference) {
  const double scale = std::max(std::abs(value), std::abs(reference));
  if (scale <= 1e-8) {
    // Both sides tiny: compare absolutely at 1e-12, rescaled so the
    // reported number shares the relative threshold.
    return std::abs(value - reference) * 1e4;
  }
  return std::abs(value - reference) / scale;
}

int run_verify(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> field_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> coupling_dist(0.3, 1.5);
  std::uniform_real_distribution<double> temperature_dist(0.2, 20.0);
  std::uniform_int_distribution<int> sites_dist(2, 3);

  Check occupations{"steady occupations", 0.0, 1e-8};
  Check particle{"particle current J_N", 0.0, 1e-8};
  Check energy{"energy current J_E", 0.0, 1e-8};
  Check contact{"contact antisymmetry", 0.0, 1e-9};
  Check parity{"parity-string irrelevance", 0.0, 1e-10};
  Check trace{"trace preservation", 0.0, 1e-10};

  int done = 0;
  int attempts = 0;
  while (done < trials && attempts < trials * 50) {
    ++attempts;
    const int n = sites_dist(rng);
    std::vector<double> h(static_cast<std::size_t>(n));
    std::vector<double> alpha(static_cast<std::size_t>(n - 1));
    for (double& v : h) v = field_dist(rng);
    for (double& v : alpha) v = coupling_dist(rng);
    const xxchain::ChainSpec chain = xxchain::build_custom(h, alpha, 1.0);
    const xxchain::SpectralData spec = xxchain::diagonalize(chain);

    // Reject draws whose transition frequencies {+-eps_k} nearly collide.
    std::vector<double> freqs;
    for (double eps : spec.eps) {
      freqs.push_back(eps);
      freqs.push_back(-eps);
    }
    std::sort(freqs.begin(), freqs.end());
    bool degenerate = false;
    for (std::size_t i = 0; i + 1 < freqs.size(); ++i) {
      if (freqs[i + 1] - freqs[i] < 1e-6) degenerate = true;
    }
    if (degenerate) continue;
    ++done;

    const xxchain::BathPair baths{
        xxchain::Temperature::finite(temperature_dist(rng)),
        xxchain::Temperature::finite(temperature_dist(rng))};

    const auto model = xxchain::oracle::build_dense_model(chain);
    const auto liouvillian =
        xxchain::oracle::total_liouvillian(model, baths, chain.gamma);
    const auto rho =
        xxchain::oracle::steady_state_from_liouvillian(liouvillian, model.dim);

    const auto oracle_occ = xxchain::oracle::mode_occupations(model, rho);
    const auto formula_occ = xxchain::steady_occupations(model.modes, baths);
    for (int k = 0; k < model.modes.size(); ++k) {
      occupations.record(relative_error(formula_occ.n[k], oracle_occ[k]));
    }

    const auto fluxes =
        xxchain::oracle::fluxes_from_density(model, baths, rho, chain.gamma);
    particle.record(relative_error(
        xxchain::particle_current(model.modes, baths, chain.gamma),
        fluxes.particle_left));
    energy.record(relative_error(
        xxchain::energy_current(model.modes, baths, chain.gamma),
        fluxes.heat_left));
    contact.record(std::abs(fluxes.heat_left + fluxes.heat_right));
    contact.record(std::abs(fluxes.particle_left + fluxes.particle_right));

    // Steady state with and without the fermion-parity string on the right.
    const auto ham_superop = xxchain::oracle::hamiltonian_superoperator(model);
    const auto left = xxchain::oracle::fermionic_dissipator(
        model, xxchain::oracle::Site::kLeft, baths.left, chain.gamma, false);
    const auto right_with = xxchain::oracle::fermionic_dissipator(
        model, xxchain::oracle::Site::kRight, baths.right, chain.gamma, true);
    const auto right_without = xxchain::oracle::fermionic_dissipator(
        model, xxchain::oracle::Site::kRight, baths.right, chain.gamma, false);
    const auto rho_with = xxchain::oracle::steady_state_from_liouvillian(
        ham_superop + left + right_with, model.dim);
    const auto rho_without = xxchain::oracle::steady_state_from_liouvillian(
        ham_superop + left + right_without, model.dim);
    parity.record((rho_with - rho_without).cwiseAbs().maxCoeff());

    // tr L(X) for a random Hermitian X.
    xxchain::oracle::ComplexMatrix x =
        xxchain::oracle::ComplexMatrix::Random(model.dim, model.dim);
    x = (x + x.adjoint()).eval();
    trace.record(std::abs(
        xxchain::oracle::apply_superoperator(liouvillian, x).trace()));
  }

  if (done < trials) {
    std::cerr << "verify: could not draw " << trials
              << " nondegenerate chains\n";
    return kExitNumeric;
  }

  std::printf("verification over %d random chains (N in {2,3}):\n", trials);
  std::printf("%-28s %-14s %-10s %s\n", "check", "max error", "threshold",
              "result");
  bool all_passed = true;
  for (const Check* check :
       {&occupations, &particle, &energy, &contact, &parity, &trace}) {
    std::printf("%-28s %-14.3e %-10.0e %s\n", check->name.c_str(), check->worst,
                check->threshold, check->passed ? "PASS" : "FAIL");
    all_passed = all_passed && check->passed;
  }
  return all_passed ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "xxchain: steady-state transport and heat rectification in "
      "boundary-driven XX spin chains"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs args;
  app.add_option("--config", args.config_path, "JSON configuration file");
  app.add_option("--output", args.output_path,
                 "write results to this path instead of stdout");
  app.add_option("--threads", args.threads,
                 "worker threads for sweeps (overrides the config)");

  app.add_subcommand("spectrum",
                     "eigenvalues and boundary coupling weights as CSV");
  app.add_subcommand("steady", "steady-state mode occupations as CSV");
  app.add_subcommand("current", "steady-state particle and energy currents");
  app.add_subcommand("rectify",
                     "forward/reversed heat currents and rectification factor");
  app.add_subcommand("sweep", "evaluate a two-parameter rectification grid");

  auto* verify = app.add_subcommand(
      "verify", "cross-check the mode formulas against a dense Liouvillian");
  int trials = 20;
  unsigned seed = 7041776;
  verify->add_option("--trials", trials, "number of random chains");
  verify->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("spectrum")) {
      run_spectrum(args);
    } else if (app.got_subcommand("steady")) {
      run_steady(args);
    } else if (app.got_subcommand("current")) {
      run_current(args);
    } else if (app.got_subcommand("rectify")) {
      run_rectify(args);
    } else if (app.got_subcommand("sweep")) {
      run_sweep_command(args);
    } else if (app.got_subcommand("verify")) {
      return run_verify(trials, seed);
    }
  } catch (const xxchain::validation_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitValidation;
  } catch (const xxchain::io_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitIo;
  } catch (const xxchain::numeric_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
