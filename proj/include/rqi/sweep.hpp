// sweep.hpp
// Parameter-sweep and dump plumbing behind the command-line tool: run
// configuration, grid construction, deterministic CSV rendering, and the
// one-line JSON run manifest.
#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rqi/entropy.hpp"
#include "rqi/fock.hpp"
#include "rqi/rindler.hpp"
#include "rqi/teleport.hpp"
#include "rqi/version.hpp"

namespace rqi {

enum class Command { fidelity_sweep, entropy_sweep, gain_sweep, state_dump, convert };

inline std::string command_name(Command c) {
  switch (c) {
    case Command::fidelity_sweep: return "fidelity-sweep";
    case Command::entropy_sweep: return "entropy-sweep";
    case Command::gain_sweep: return "gain-sweep";
    case Command::state_dump: return "state-dump";
    case Command::convert: return "convert";
  }
  throw ConfigError("unknown command");
}

struct RunConfig {
  Command command = Command::fidelity_sweep;

  // sweep grid
  double r_min = 0.0;
  double r_max = 3.0;
  double r_step = 0.05;
  std::optional<int> cutoff;  // empty: tail rule at the largest grid point
  int quadrature_points = 1001;

  std::string output_path;    // empty: stdout
  std::string manifest_path;  // empty: stderr

  // state-dump parameters
  std::optional<double> r;
  int l = 0;
  int m = 0;
  Complex alpha{M_SQRT1_2, 0.0};
  Complex beta{M_SQRT1_2, 0.0};
  Provenance provenance = Provenance::analytic;

  // convert inputs
  std::optional<double> omega;         // dimensionless frequency
  std::optional<double> omega_r;       // rad/s
  std::optional<double> acceleration;  // m/s^2
};

// Shortest 17-significant-digit rendering; locale-free and reproducible.
inline std::string format_double(double v) {
  std::array<char, 40> buf;
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  if (ec != std::errc())
    throw IoError("cannot format double value");
  return std::string(buf.data(), end);
}

inline void validate(const RunConfig& cfg) {
  auto finite = [](double v) { return std::isfinite(v); };
  switch (cfg.command) {
    case Command::fidelity_sweep:
    case Command::entropy_sweep:
    case Command::gain_sweep: {
      if (!finite(cfg.r_min) || !finite(cfg.r_max) || !finite(cfg.r_step))
        throw ConfigError("sweep grid parameters must be finite");
      if (cfg.r_min < 0.0) throw ConfigError("r-min must be >= 0");
      if (cfg.r_min > cfg.r_max) throw ConfigError("r-min must not exceed r-max");
      if (cfg.r_step <= 0.0) throw ConfigError("r-step must be positive");
      if ((cfg.r_max - cfg.r_min) / cfg.r_step > 1e6)
        throw ConfigError("sweep grid would exceed one million rows");
      if (cfg.quadrature_points < 3 || cfg.quadrature_points % 2 == 0)
        throw ConfigError("quadrature-points must be odd and >= 3");
      break;
    }
    case Command::state_dump: {
      const double rv = cfg.r.value_or(0.0);
      if (!finite(rv) || rv < 0.0) throw ConfigError("r must be finite and >= 0");
      if ((cfg.l != 0 && cfg.l != 1) || (cfg.m != 0 && cfg.m != 1))
        throw ConfigError("l and m must be 0 or 1");
      const double n2 = std::norm(cfg.alpha) + std::norm(cfg.beta);
      if (std::abs(n2 - 1.0) > 1e-12)
        throw ConfigError("input amplitudes must satisfy |alpha|^2 + |beta|^2 = 1, got " +
                          format_double(n2));
      break;
    }
    case Command::convert: {
      const bool has_pair = cfg.omega_r.has_value() && cfg.acceleration.has_value();
      const int forms = int(cfg.r.has_value()) + int(cfg.omega.has_value()) +
                        int(has_pair ? 1 : (cfg.acceleration.has_value() ? 1 : 0));
      if (cfg.omega_r.has_value() && !cfg.acceleration.has_value())
        throw ConfigError("omega-r alone determines nothing; pair it with acceleration");
      if (forms != 1)
        throw ConfigError(
            "convert needs exactly one input form: r | omega | acceleration | "
            "omega-r with acceleration");
      break;
    }
  }
  if (cfg.cutoff && *cfg.cutoff < 2) throw ConfigError("cutoff must be >= 2");
}

inline std::vector<double> r_grid(const RunConfig& cfg) {
  const auto count =
      static_cast<std::size_t>(std::floor((cfg.r_max - cfg.r_min) / cfg.r_step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = cfg.r_min + double(i) * cfg.r_step;
  return grid;
}

// One cutoff per sweep, sized for the deepest squeezing in the grid.
inline int resolve_cutoff(const RunConfig& cfg, double largest_r) {
  return cfg.cutoff ? *cfg.cutoff : cutoff_for(largest_r);
}

struct SweepResult {
  std::string output;            // CSV (or CSV-shaped text for convert)
  nlohmann::ordered_json manifest;
  std::optional<int> cutoff_used;
};

namespace detail {

inline double vacuum_tail(double r, int cutoff) {
  const double q = std::tanh(r) * std::tanh(r);
  return std::pow(q, cutoff);
}

inline double one_particle_tail(double r, int cutoff) {
  const double q = std::tanh(r) * std::tanh(r);
  const int m = cutoff - 1;
  return std::pow(q, m) * (double(m) * (1.0 - q) + 1.0);
}

inline nlohmann::ordered_json base_manifest(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = command_name(cfg.command);
  j["version"] = kVersion;
  return j;
}

inline void add_sweep_manifest(nlohmann::ordered_json& j, const RunConfig& cfg,
                               std::size_t rows, std::optional<int> cutoff_used,
                               double largest_r) {
  j["r_min"] = cfg.r_min;
  j["r_max"] = cfg.r_max;
  j["r_step"] = cfg.r_step;
  j["rows"] = rows;
  if (cfg.cutoff)
    j["cutoff"] = *cfg.cutoff;
  else
    j["cutoff"] = "auto";
  if (cutoff_used) {
    j["cutoff_used"] = *cutoff_used;
    j["tail_squeezed_vacuum"] = vacuum_tail(largest_r, *cutoff_used);
    j["tail_one_particle"] = one_particle_tail(largest_r, *cutoff_used);
  } else {
    j["cutoff_used"] = nullptr;
  }
}

}  // namespace detail

inline SweepResult run_fidelity_sweep(const RunConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = r_grid(cfg);
  std::string csv = "r,avg_fidelity,avg_fidelity_closed_form\n";
  for (double r : grid) {
    const SqueezeParam p = SqueezeParam::from_r(r);
    csv += format_double(r);
    csv += ',';
    csv += format_double(averaged_fidelity(p, cfg.quadrature_points));
    csv += ',';
    csv += format_double(averaged_fidelity_closed_form(p));
    csv += '\n';
  }
  SweepResult res{std::move(csv), detail::base_manifest(cfg), std::nullopt};
  detail::add_sweep_manifest(res.manifest, cfg, grid.size(), std::nullopt, grid.back());
  res.manifest["quadrature_points"] = cfg.quadrature_points;
  return res;
}

inline SweepResult run_entropy_sweep(const RunConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = r_grid(cfg);
  const int cutoff = resolve_cutoff(cfg, grid.back());
  std::string csv = "r,S_pre,S_post,S_vac\n";
  for (double r : grid) {
    const EntropyReport rep = info_gain(SqueezeParam::from_r(r), cutoff);
    csv += format_double(r);
    csv += ',';
    csv += format_double(rep.S_pre);
    csv += ',';
    csv += format_double(rep.S_post);
    csv += ',';
    csv += format_double(rep.S_vac);
    csv += '\n';
  }
  SweepResult res{std::move(csv), detail::base_manifest(cfg), cutoff};
  detail::add_sweep_manifest(res.manifest, cfg, grid.size(), cutoff, grid.back());
  return res;
}

inline SweepResult run_gain_sweep(const RunConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = r_grid(cfg);
  const int cutoff = resolve_cutoff(cfg, grid.back());
  std::string csv = "r,dS_gain,dS_gain_tsm\n";
  for (double r : grid) {
    const EntropyReport rep = info_gain(SqueezeParam::from_r(r), cutoff);
    csv += format_double(r);
    csv += ',';
    csv += format_double(rep.dS_gain);
    csv += ',';
    csv += format_double(rep.dS_gain_tsm);
    csv += '\n';
  }
  SweepResult res{std::move(csv), detail::base_manifest(cfg), cutoff};
  detail::add_sweep_manifest(res.manifest, cfg, grid.size(), cutoff, grid.back());
  return res;
}

inline SweepResult run_state_dump(const RunConfig& cfg) {
  validate(cfg);
  const double rv = cfg.r.value_or(0.0);
  const SqueezeParam p = SqueezeParam::from_r(rv);
  const int cutoff = cfg.cutoff ? *cfg.cutoff : cutoff_for(rv);
  const InputState input(cfg.alpha, cfg.beta);
  const OutcomeCoeffs o = outcome_coefficients(cfg.l, cfg.m, input);
  const RobState rs = (cfg.provenance == Provenance::analytic)
                          ? rob_state_analytic(o, p, cutoff)
                          : rob_state_numeric(o, input, p, cutoff);

  // full first band always; anything farther out only if it carries weight
  std::string csv = "row,col,re,im\n";
  const Matrix& mtx = rs.rho.matrix();
  for (Eigen::Index i = 0; i < mtx.rows(); ++i) {
    for (Eigen::Index j = 0; j < mtx.cols(); ++j) {
      const bool in_band = std::abs(i - j) <= 1;
      if (!in_band && std::abs(mtx(i, j)) <= 1e-12) continue;
      csv += std::to_string(i);
      csv += ',';
      csv += std::to_string(j);
      csv += ',';
      csv += format_double(mtx(i, j).real());
      csv += ',';
      csv += format_double(mtx(i, j).imag());
      csv += '\n';
    }
  }

  SweepResult res{std::move(csv), detail::base_manifest(cfg), cutoff};
  auto& j = res.manifest;
  j["r"] = rv;
  j["l"] = cfg.l;
  j["m"] = cfg.m;
  j["alpha_re"] = cfg.alpha.real();
  j["alpha_im"] = cfg.alpha.imag();
  j["beta_re"] = cfg.beta.real();
  j["beta_im"] = cfg.beta.imag();
  j["provenance"] = (cfg.provenance == Provenance::analytic) ? "analytic" : "numeric";
  j["cutoff_used"] = cutoff;
  j["trace"] = rs.rho.trace_real();
  j["fidelity"] = fidelity_numeric(rs);
  j["fidelity_closed_form"] = fidelity_closed_form(o, p);
  j["kept_trace"] = rs.kept_trace;
  if (rs.probability) j["probability"] = *rs.probability;
  j["tail_squeezed_vacuum"] = detail::vacuum_tail(rv, cutoff);
  j["tail_one_particle"] = detail::one_particle_tail(rv, cutoff);
  return res;
}

inline SweepResult run_convert(const RunConfig& cfg) {
  validate(cfg);
  std::string csv = "quantity,value,unit\n";
  auto row = [&csv](const char* name, double v, const char* unit) {
    if (!std::isfinite(v)) return;
    csv += name;
    csv += ',';
    csv += format_double(v);
    csv += ',';
    csv += unit;
    csv += '\n';
  };

  SweepResult res{{}, detail::base_manifest(cfg), std::nullopt};
  auto& j = res.manifest;
  if (cfg.r || cfg.omega) {
    const SqueezeParam p = cfg.r ? SqueezeParam::from_r(*cfg.r) : r_from_omega(*cfg.omega);
    row("r", p.r(), "dimensionless");
    row("omega", p.omega(), "dimensionless");
    row("tanh_r", p.tanh_r(), "dimensionless");
    j["r"] = p.r();
    j["underflowed"] = p.underflowed();
  } else if (cfg.omega_r) {
    const SqueezeParam p = r_from_physical(*cfg.omega_r, *cfg.acceleration);
    row("r", p.r(), "dimensionless");
    row("omega", p.omega(), "dimensionless");
    row("tanh_r", p.tanh_r(), "dimensionless");
    row("omega_r", *cfg.omega_r, "rad/s");
    row("acceleration", *cfg.acceleration, "m/s^2");
    row("a_over_c", *cfg.acceleration / kSpeedOfLight, "1/s");
    row("T_U", unruh_temperature(*cfg.acceleration), "K");
    j["r"] = p.r();
    j["underflowed"] = p.underflowed();
  } else {
    row("acceleration", *cfg.acceleration, "m/s^2");
    row("a_over_c", *cfg.acceleration / kSpeedOfLight, "1/s");
    row("T_U", unruh_temperature(*cfg.acceleration), "K");
  }
  res.output = std::move(csv);
  return res;
}

inline SweepResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::fidelity_sweep: return run_fidelity_sweep(cfg);
    case Command::entropy_sweep: return run_entropy_sweep(cfg);
    case Command::gain_sweep: return run_gain_sweep(cfg);
    case Command::state_dump: return run_state_dump(cfg);
    case Command::convert: return run_convert(cfg);
  }
  throw ConfigError("unknown command");
}

// Output to the configured file or stdout; manifest line to the configured
// file or stderr.
inline void write_result(const SweepResult& res, const RunConfig& cfg) {
  if (cfg.output_path.empty()) {
    std::cout << res.output;
    std::cout.flush();
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output path \"" + cfg.output_path + "\"");
    out << res.output;
    out.flush();
    if (!out) throw IoError("failed writing output path \"" + cfg.output_path + "\"");
  }
  const std::string line = res.manifest.dump() + "\n";
  if (cfg.manifest_path.empty()) {
    std::cerr << line;
  } else {
    std::ofstream out(cfg.manifest_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open manifest path \"" + cfg.manifest_path + "\"");
    out << line;
    out.flush();
    if (!out) throw IoError("failed writing manifest path \"" + cfg.manifest_path + "\"");
  }
}

}  // namespace rqi
