// rqi command-line tool: parameter sweeps, state dumps, and unit conversion
// for qubit teleportation to a uniformly accelerated receiver.
//
// Exit codes: 0 success, 2 invalid configuration or parameter domain,
// 3 broken numerical invariant or degenerate measurement branch, 4 io failure.
#include <charconv>
#include <cmath>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rqi/sweep.hpp"

namespace {

std::optional<int> parse_cutoff(const std::string& s) {
  if (s == "auto") return std::nullopt;
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size())
    throw rqi::ConfigError("cutoff must be an integer or \"auto\", got \"" + s + '"');
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated-mode teleportation sweeps for a uniformly accelerated receiver"};
  app.set_version_flag("--version", rqi::kVersion);
  app.require_subcommand(1);

  rqi::RunConfig cfg;
  std::string cutoff_str = "auto";
  std::string provenance = "analytic";
  double alpha_re = M_SQRT1_2, alpha_im = 0.0;
  double beta_re = M_SQRT1_2, beta_im = 0.0;

  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.output_path, "output CSV path (default: stdout)");
    sub->add_option("--manifest", cfg.manifest_path,
                    "path for the one-line JSON run manifest (default: stderr)");
  };
  auto add_grid = [&cfg](CLI::App* sub) {
    sub->add_option("--r-min", cfg.r_min, "first squeeze parameter (default 0)");
    sub->add_option("--r-max", cfg.r_max, "last squeeze parameter (default 3)");
    sub->add_option("--r-step", cfg.r_step, "grid spacing (default 0.05)");
  };
  auto add_cutoff = [&cutoff_str](CLI::App* sub) {
    sub->add_option("--cutoff", cutoff_str,
                    "occupations kept per wedge mode: integer, or \"auto\" for the "
                    "tail rule at the largest grid point")
        ->capture_default_str();
  };

  CLI::App* fid =
      app.add_subcommand("fidelity-sweep", "average teleportation fidelity against the squeeze parameter");
  add_grid(fid);
  add_output(fid);
  fid->add_option("--quadrature-points", cfg.quadrature_points,
                  "odd Simpson point count for the input-state average (default 1001)");

  CLI::App* ent =
      app.add_subcommand("entropy-sweep", "pre/post-measurement and vacuum entropies against the squeeze parameter");
  add_grid(ent);
  add_cutoff(ent);
  add_output(ent);

  CLI::App* gain =
      app.add_subcommand("gain-sweep", "measurement information gain against the squeeze parameter");
  add_grid(gain);
  add_cutoff(gain);
  add_output(gain);

  CLI::App* dump =
      app.add_subcommand("state-dump", "receiver-mode density matrix for one measurement outcome");
  dump->add_option("--r", cfg.r, "squeeze parameter (default 0)");
  dump->add_option("--l", cfg.l, "first classical measurement bit (default 0)");
  dump->add_option("--m", cfg.m, "second classical measurement bit (default 0)");
  dump->add_option("--alpha-re", alpha_re, "input amplitude alpha, real part");
  dump->add_option("--alpha-im", alpha_im, "input amplitude alpha, imaginary part");
  dump->add_option("--beta-re", beta_re, "input amplitude beta, real part");
  dump->add_option("--beta-im", beta_im, "input amplitude beta, imaginary part");
  dump->add_option("--provenance", provenance,
                   "construction route: closed-form band or full circuit simulation")
      ->check(CLI::IsMember({"analytic", "numeric"}))
      ->capture_default_str();
  add_cutoff(dump);
  add_output(dump);

  CLI::App* conv = app.add_subcommand(
      "convert", "translate between squeeze parameter, dimensionless frequency, and lab quantities");
  conv->add_option("--r", cfg.r, "squeeze parameter");
  conv->add_option("--omega", cfg.omega, "dimensionless mode frequency");
  conv->add_option("--omega-r", cfg.omega_r, "lab mode frequency in rad/s (pair with --acceleration)");
  conv->add_option("--acceleration", cfg.acceleration, "proper acceleration in m/s^2");
  add_output(conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  }

  if (fid->parsed()) cfg.command = rqi::Command::fidelity_sweep;
  if (ent->parsed()) cfg.command = rqi::Command::entropy_sweep;
  if (gain->parsed()) cfg.command = rqi::Command::gain_sweep;
  if (dump->parsed()) cfg.command = rqi::Command::state_dump;
  if (conv->parsed()) cfg.command = rqi::Command::convert;

  try {
    cfg.cutoff = parse_cutoff(cutoff_str);
    cfg.provenance =
        (provenance == "numeric") ? rqi::Provenance::numeric : rqi::Provenance::analytic;
    cfg.alpha = rqi::Complex(alpha_re, alpha_im);
    cfg.beta = rqi::Complex(beta_re, beta_im);

    rqi::write_result(rqi::run(cfg), cfg);
    return 0;
  } catch (const rqi::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const rqi::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const rqi::DegenerateOutcomeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const rqi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
}
