#include "cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/config.hpp"
#include "troute/compare.hpp"
#include "troute/design.hpp"
#include "troute/emit.hpp"
#include "troute/error.hpp"
#include "troute/fields.hpp"
#include "troute/lattice.hpp"
#include "troute/presets.hpp"
#include "troute/scattering.hpp"
#include "troute/sweep.hpp"
#include "troute/wavepacket.hpp"

#ifndef TROUTE_VERSION
#define TROUTE_VERSION "0.0.0"
#endif

namespace troute::cli {

namespace {

using json = nlohmann::ordered_json;

// Parameter flags shared by every subcommand.
struct CommonFlags {
  std::string config_file;
  ParamOverrides params;
};

void add_param_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config_file, "flat key = value TOML parameter file");
  sub->add_option("--omega", f.params.omega, "cavity frequency of both arms");
  sub->add_option("--xi", f.params.xi, "hopping strength of both arms (energy unit)");
  sub->add_option("--ga", f.params.ga, "emitter coupling to site j_a = 0");
  sub->add_option("--gb", f.params.gb, "emitter coupling to site j_b = 1");
  sub->add_option("--omegaA", f.params.omega_atom, "emitter splitting");
  sub->add_option("--omega-a", f.params.omega_a, "cavity frequency of arm a");
  sub->add_option("--omega-b", f.params.omega_b, "cavity frequency of arm b");
  sub->add_option("--xi-a", f.params.xi_a, "hopping strength of arm a");
  sub->add_option("--xi-b", f.params.xi_b, "hopping strength of arm b");
}

Port parse_port(const std::string& s) {
  if (s == "a") return Port::FromA;
  if (s == "b") return Port::FromB;
  throw Error(ErrorCode::InvalidParams, "port must be 'a' or 'b'");
}

json config_json(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  json j;
  j["generator"] = "troute " TROUTE_VERSION;
  j["units"] = "xi";
  j["config_file"] = cfg.config_file;
  j["omega_a"] = p.omega_a();
  j["omega_b"] = p.omega_b();
  j["xi_a"] = p.xi_a();
  j["xi_b"] = p.xi_b();
  j["ga"] = p.g_a();
  j["gb"] = p.g_b();
  j["omegaA"] = p.omega_atom();
  j["closed_form_valid"] = p.closed_form_valid();
  return j;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json mode_json(const BlochMode& m) {
  return {{"k", m.k}, {"E", m.energy}, {"v_g", m.group_velocity}, {"band_edge", m.band_edge}};
}

// Exactly one of E / k selects the mode on the incidence arm.
BlochMode select_mode(const ModelParams& p, Port port, const std::optional<double>& energy,
                      const std::optional<double>& k) {
  if (energy.has_value() == k.has_value()) {
    throw Error(ErrorCode::InvalidParams, "give exactly one of --E or --k");
  }
  const double omega = port == Port::FromA ? p.omega_a() : p.omega_b();
  const double xi = port == Port::FromA ? p.xi_a() : p.xi_b();
  return energy ? wavenumber_from_energy(*energy, omega, xi) : mode_from_wavenumber(*k, omega, xi);
}

void warn_band_edge(const BlochMode& m, std::ostream& err) {
  if (m.band_edge) {
    err << "warning: BandEdge: sin k < " << kBandEdgeTolerance
        << "; probabilities are not physical at vanishing group velocity\n";
  }
}

// ---------------------------------------------------------------- point

struct PointArgs {
  CommonFlags common;
  std::string port;
  std::optional<double> energy;
  std::optional<double> k;
};

int cmd_point(const PointArgs& a, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve(a.common.params, a.common.config_file);
  const ModelParams& p = cfg.params;
  require_closed_form(p);
  const Port port = parse_port(a.port);
  const BlochMode mode = select_mode(p, port, a.energy, a.k);
  warn_band_edge(mode, err);

  const ScatteringSolution sol = scatter(p, port, mode);
  const EffectiveCouplings eff = effective_couplings(p, mode);

  json j;
  j["command"] = "point";
  j["config"] = config_json(cfg);
  j["port"] = std::string(to_string(port));
  j["mode"] = mode_json(mode);
  json amps;
  json probs;
  if (port == Port::FromA) {
    amps["t"] = complex_json(sol.transmission);
    amps["r"] = complex_json(sol.reflection);
    amps["t_b"] = complex_json(sol.transfer);
    probs["T_aa"] = sol.probabilities.transmission;
    probs["R_aa"] = sol.probabilities.reflection;
    probs["T_ab"] = sol.probabilities.transfer;
  } else {
    amps["t_a"] = complex_json(sol.transfer);
    amps["r_b"] = complex_json(sol.reflection);
    probs["T_ba"] = sol.probabilities.transfer;
    probs["R_bb"] = sol.probabilities.reflection;
  }
  amps["U_1b"] = complex_json(sol.junction_b);
  amps["A"] = complex_json(sol.boundary_amplitude);
  amps["U_e"] = complex_json(sol.atom_amplitude);
  j["amplitudes"] = amps;
  j["probabilities"] = probs;
  j["lamb_shift"] = eff.lamb_shift;
  j["gamma_a"] = eff.gamma_a;
  j["gamma_b"] = eff.gamma_b;
  j["V_a"] = optional_json(eff.v_a);
  j["V_b"] = optional_json(eff.v_b);
  j["G"] = optional_json(eff.g_ab);
  j["unitarity_residual"] = sol.unitarity_residual();
  j["physical"] = sol.physical();
  out << j.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  CommonFlags common;
  std::string preset;
  std::string out_dir = ".";
  std::vector<std::string> formats;
  std::string variable = "E";
  std::optional<double> lo, hi;
  int n = 2001;
  std::string port = "a";
  std::optional<double> energy;
  std::vector<std::string> quantities;
  std::vector<std::string> outputs;
};

std::vector<Quantity> default_quantities(Port port) {
  if (port == Port::FromA) {
    return {Quantity::T_aa, Quantity::R_aa, Quantity::T_ab, Quantity::RT_aa};
  }
  return {Quantity::T_ba, Quantity::R_bb};
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<SweepSpec, std::vector<std::filesystem::path>>> jobs;
  json echo;

  if (!a.preset.empty()) {
    std::vector<Format> formats;
    std::vector<std::string> exts;
    for (const auto& f : a.formats.empty() ? std::vector<std::string>{"csv"} : a.formats) {
      if (f != "csv" && f != "json" && f != "svg") {
        throw Error(ErrorCode::InvalidParams, "format must be csv, json or svg");
      }
      exts.push_back("." + f);
    }
    std::filesystem::create_directories(a.out_dir);
    for (auto& named : preset_sweeps(a.preset, a.n)) {
      std::vector<std::filesystem::path> paths;
      for (const auto& ext : exts) paths.push_back(std::filesystem::path(a.out_dir) / (named.label + ext));
      jobs.emplace_back(std::move(named.spec), std::move(paths));
    }
    echo["preset"] = a.preset;
  } else {
    const RunConfig cfg = resolve(a.common.params, a.common.config_file);
    require_closed_form(cfg.params);
    SweepSpec spec;
    spec.port = parse_port(a.port);
    spec.params = cfg.params;
    if (a.variable == "E") {
      spec.variable = SweepVariable::IncidentEnergy;
    } else if (a.variable == "omegaA") {
      spec.variable = SweepVariable::AtomSplitting;
      if (!a.energy) {
        throw Error(ErrorCode::InvalidParams, "an omegaA sweep needs the incident energy --E");
      }
      spec.fixed_energy = *a.energy;
    } else {
      throw Error(ErrorCode::InvalidParams, "--var must be E or omegaA");
    }
    const double centre = cfg.params.omega();
    const double half = 2.0 * cfg.params.xi();
    spec.range = {a.lo.value_or(centre - half), a.hi.value_or(centre + half), a.n};
    if (a.quantities.empty()) {
      spec.quantities = default_quantities(spec.port);
    } else {
      for (const auto& q : a.quantities) spec.quantities.push_back(parse_quantity(q));
    }
    if (a.outputs.empty()) {
      throw Error(ErrorCode::InvalidParams, "give at least one --out file (.csv, .json or .svg)");
    }
    std::vector<std::filesystem::path> paths(a.outputs.begin(), a.outputs.end());
    for (const auto& path : paths) format_from_path(path);
    jobs.emplace_back(std::move(spec), std::move(paths));
    echo["config"] = config_json(cfg);
  }

  bool all_unitary = true;
  json files = json::array();
  for (const auto& [spec, paths] : jobs) {
    const SweepTable table = run_sweep(spec);
    for (const auto& w : table.warnings) err << "warning: " << w << "\n";
    all_unitary = all_unitary && table.all_unitary();
    for (const auto& path : paths) {
      emit(table, format_from_path(path), path);
      files.push_back({{"path", path.string()},
                       {"rows", table.rows()},
                       {"clipped", table.clipped},
                       {"all_unitary", table.all_unitary()}});
    }
  }

  echo["command"] = "sweep";
  echo["files"] = files;
  echo["all_unitary"] = all_unitary;
  out << echo.dump(2) << "\n";
  if (!all_unitary) {
    err << "error: some rows violate probability conservation beyond "
        << kRowUnitarityTolerance << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- design

struct DesignArgs {
  CommonFlags common;
  double energy = 0.0;
};

int cmd_design(const DesignArgs& a, std::ostream& out, std::ostream&) {
  const RunConfig cfg = resolve(a.common.params, a.common.config_file);
  require_closed_form(cfg.params);
  const DesignReport rep = design_for_energy(cfg.params, a.energy);

  json j;
  j["command"] = "design";
  j["config"] = config_json(cfg);
  j["target_E"] = rep.target_energy;
  j["k"] = rep.k;
  j["lamb_shift"] = rep.lamb_shift;
  j["resonant_omegaA"] = rep.resonant_omega_atom;
  j["decay_matched"] = rep.decay_matched;
  j["NoDecayMatch"] = rep.no_decay_match;
  j["required_ga"] = rep.required_g_a;
  j["achievable_T_ba"] = rep.achievable_transfer_from_b;
  j["achievable_T_ab"] = rep.achievable_transfer_from_a;
  j["diagnostic"] = rep.diagnostic;
  out << j.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  CommonFlags common;
  std::string method = "stationary";
  std::string port = "a";
  std::optional<double> energy;
  std::optional<double> k;
  std::optional<int> n_a, n_b;
  double sigma = 40.0;
  std::optional<int> j0;
  std::optional<double> time;
  std::optional<double> tolerance;
};

json report_json(const ComparisonReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"quantity", e.quantity},
                       {"analytic", e.analytic},
                       {"oracle", e.oracle},
                       {"abs_diff", e.abs_diff},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass}});
  }
  return {{"method", rep.method},
          {"port", std::string(to_string(rep.port))},
          {"k", rep.k},
          {"entries", entries},
          {"max_diff", rep.max_diff()},
          {"pass", rep.pass()}};
}

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = resolve(a.common.params, a.common.config_file);
  const ModelParams& p = cfg.params;
  const Port port = parse_port(a.port);
  const BlochMode mode = select_mode(p, port, a.energy, a.k);
  warn_band_edge(mode, err);
  const bool closed = p.closed_form_valid();
  if (!closed) {
    err << "warning: unequal arms; closed forms do not apply, checking the oracle "
           "against probability conservation only\n";
  }

  json j;
  j["command"] = "oracle";
  j["config"] = config_json(cfg);
  ComparisonReport rep;

  if (a.method == "stationary") {
    const LatticeModel lat(a.n_a.value_or(200), a.n_b.value_or(200), p);
    const StationaryResult res = stationary_scatter(lat, port, mode.k);
    const double tol = a.tolerance.value_or(kStationaryTolerance);
    if (closed) {
      rep = compare(scatter(p, port, mode), res, tol);
    } else {
      rep.method = "stationary";
      rep.port = port;
      rep.k = mode.k;
      const double total = res.solution.probabilities.total();
      rep.entries.push_back({"unitarity", 1.0, total, std::abs(total - 1.0), tol,
                             std::abs(total - 1.0) < tol});
    }
    j["lattice"] = {{"n_a", lat.n_a()}, {"n_b", lat.n_b()}, {"rcond", res.rcond}};
    j["oracle_probabilities"] = {{"transmission", res.solution.probabilities.transmission},
                                 {"reflection", res.solution.probabilities.reflection},
                                 {"transfer", res.solution.probabilities.transfer}};
  } else if (a.method == "wavepacket") {
    const LatticeModel lat(a.n_a.value_or(600), a.n_b.value_or(600), p);
    WavePacketSpec spec;
    spec.carrier_k0 = mode.k;
    spec.width_sigma = a.sigma;
    spec.center_j0 = a.j0.value_or(port == Port::FromA ? -200 : 200);
    spec.port = port;
    validate_packet(lat, spec);
    const RegionProbabilities regions = wavepacket_scatter(lat, spec, a.time);
    const double tol = a.tolerance.value_or(kWavePacketTolerance);
    if (closed) {
      rep = compare(scatter(p, port, mode), regions, tol);
    } else {
      rep.method = "wavepacket";
      rep.port = port;
      rep.k = mode.k;
      const double total = regions.total();
      rep.entries.push_back({"norm", 1.0, total, std::abs(total - 1.0), tol,
                             std::abs(total - 1.0) < tol});
    }
    j["lattice"] = {{"n_a", lat.n_a()}, {"n_b", lat.n_b()}};
    j["packet"] = {{"k0", spec.carrier_k0},
                   {"sigma", spec.width_sigma},
                   {"j0", spec.center_j0},
                   {"time", regions.time}};
    j["regions"] = {{"P_left_a", regions.left_a},
                    {"P_right_a", regions.right_a},
                    {"P_b", regions.b},
                    {"P_atom", regions.atom},
                    {"max_norm_drift", regions.max_norm_drift},
                    {"max_end_leak", regions.max_end_leak}};
  } else {
    throw Error(ErrorCode::InvalidParams, "--method must be stationary or wavepacket");
  }

  j["report"] = report_json(rep);
  out << j.dump(2) << "\n";
  if (!rep.pass()) {
    err << "error: oracle disagrees with the closed form beyond tolerance (max diff "
        << rep.max_diff() << ")\n";
    return kExitTolerance;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-photon scattering through a T-shaped resonator waveguide "
               "with an emitter at the junction"};
  app.set_version_flag("--version", TROUTE_VERSION);
  app.require_subcommand(1);

  PointArgs point;
  auto* sp = app.add_subcommand("point", "closed-form amplitudes at one energy");
  add_param_flags(sp, point.common);
  sp->add_option("--port", point.port, "incidence port: a or b")->required();
  sp->add_option("--E", point.energy, "incident energy");
  sp->add_option("--k", point.k, "incident wavenumber in (0, pi)");

  SweepArgs sweep;
  auto* ss = app.add_subcommand("sweep", "tabulate spectra to CSV / JSON / SVG");
  add_param_flags(ss, sweep.common);
  ss->add_option("--preset", sweep.preset, "named spectrum set")
      ->check(CLI::IsMember(preset_names()));
  ss->add_option("--out-dir", sweep.out_dir, "directory for preset output");
  ss->add_option("--format", sweep.formats, "preset output formats (csv, json, svg)");
  ss->add_option("--var", sweep.variable, "swept variable: E or omegaA");
  ss->add_option("--lo", sweep.lo, "grid start (default band bottom)");
  ss->add_option("--hi", sweep.hi, "grid end (default band top)");
  ss->add_option("--n", sweep.n, "number of grid points");
  ss->add_option("--port", sweep.port, "incidence port: a or b");
  ss->add_option("--E", sweep.energy, "incident energy for an omegaA sweep");
  ss->add_option("--quantities", sweep.quantities,
                 "T_aa, R_aa, T_ab, R_aa+T_aa, T_ba, R_bb")
      ->delimiter(',');
  ss->add_option("--out", sweep.outputs, "output file(s); format from extension");

  DesignArgs design;
  auto* sd = app.add_subcommand("design", "emitter splitting that maximises routing");
  add_param_flags(sd, design.common);
  sd->add_option("--E", design.energy, "target incident energy")->required();

  OracleArgs oracle;
  auto* so = app.add_subcommand("oracle", "check closed forms against a lattice solve");
  add_param_flags(so, oracle.common);
  so->add_option("--method", oracle.method, "stationary or wavepacket");
  so->add_option("--port", oracle.port, "incidence port: a or b");
  so->add_option("--E", oracle.energy, "incident energy");
  so->add_option("--k", oracle.k, "incident wavenumber / packet carrier");
  so->add_option("--na", oracle.n_a, "sites per side of arm a");
  so->add_option("--nb", oracle.n_b, "sites of arm b");
  so->add_option("--sigma", oracle.sigma, "packet width in sites");
  so->add_option("--j0", oracle.j0, "packet centre on the incidence arm");
  so->add_option("--time", oracle.time, "evolution time");
  so->add_option("--tol", oracle.tolerance, "override the comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << TROUTE_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  try {
    if (sp->parsed()) return cmd_point(point, out, err);
    if (ss->parsed()) return cmd_sweep(sweep, out, err);
    if (sd->parsed()) return cmd_design(design, out, err);
    if (so->parsed()) return cmd_oracle(oracle, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_precondition() ? kExitPrecondition : kExitTolerance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnexpected;
  }
  return kExitUnexpected;
}

}  // namespace troute::cli
