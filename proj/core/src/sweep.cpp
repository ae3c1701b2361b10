#include "troute/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "troute/error.hpp"
#include "troute/scattering.hpp"

#ifndef TROUTE_VERSION
#define TROUTE_VERSION "0.0.0"
#endif

namespace troute {

std::string_view to_string(SweepVariable v) noexcept {
  return v == SweepVariable::IncidentEnergy ? "E" : "omegaA";
}

std::string_view to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::T_aa: return "T_aa";
    case Quantity::R_aa: return "R_aa";
    case Quantity::T_ab: return "T_ab";
    case Quantity::RT_aa: return "R_aa+T_aa";
    case Quantity::T_ba: return "T_ba";
    case Quantity::R_bb: return "R_bb";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::T_aa, Quantity::R_aa, Quantity::T_ab, Quantity::RT_aa,
                     Quantity::T_ba, Quantity::R_bb}) {
    if (to_string(q) == name) return q;
  }
  throw Error(ErrorCode::InvalidParams, "unknown quantity '" + std::string(name) + "'");
}

Port port_of(Quantity q) noexcept {
  return q == Quantity::T_ba || q == Quantity::R_bb ? Port::FromB : Port::FromA;
}

bool SweepTable::all_unitary() const noexcept {
  return std::all_of(unitarity_residual.begin(), unitarity_residual.end(),
                     [](double r) { return r <= kRowUnitarityTolerance; });
}

const std::vector<double>& SweepTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return values[i];
  }
  throw Error(ErrorCode::InvalidParams, "no column '" + std::string(name) + "'");
}

namespace {

double pick(const Probabilities& pr, Quantity q) {
  switch (q) {
    case Quantity::T_aa: return pr.transmission;
    case Quantity::R_aa: return pr.reflection;
    case Quantity::T_ab: return pr.transfer;
    case Quantity::RT_aa: return pr.reflection + pr.transmission;
    case Quantity::T_ba: return pr.transfer;
    case Quantity::R_bb: return pr.reflection;
  }
  return 0.0;
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec) {
  require_grid(spec.range);
  require_closed_form(spec.params);
  for (Quantity q : spec.quantities) {
    if (port_of(q) != spec.port) {
      throw Error(ErrorCode::InvalidParams,
                  std::string(to_string(q)) + " is not defined for incidence from " +
                      std::string(to_string(spec.port)));
    }
  }
  const bool energy_sweep = spec.variable == SweepVariable::IncidentEnergy;
  const ModelParams& p = spec.params;

  SweepTable table;
  table.x_name = std::string(to_string(spec.variable));
  auto& meta = table.metadata;
  meta.emplace_back("generator", std::string("troute " TROUTE_VERSION));
  meta.emplace_back("units", std::string("xi"));
  meta.emplace_back("variable", table.x_name);
  meta.emplace_back("port", std::string(to_string(spec.port)));
  meta.emplace_back("omega_a", p.omega_a());
  meta.emplace_back("omega_b", p.omega_b());
  meta.emplace_back("xi_a", p.xi_a());
  meta.emplace_back("xi_b", p.xi_b());
  meta.emplace_back("ga", p.g_a());
  meta.emplace_back("gb", p.g_b());
  if (energy_sweep) {
    meta.emplace_back("omegaA", p.omega_atom());
  } else {
    meta.emplace_back("E", spec.fixed_energy);
  }
  meta.emplace_back("lo", spec.range.lo);
  meta.emplace_back("hi", spec.range.hi);
  meta.emplace_back("n_points", static_cast<double>(spec.range.n));

  for (Quantity q : spec.quantities) table.columns.emplace_back(to_string(q));
  table.values.resize(spec.quantities.size());

  BlochMode fixed_mode;
  if (!energy_sweep) fixed_mode = mode_at_energy(p, spec.fixed_energy);

  for (int i = 0; i < spec.range.n; ++i) {
    const double x = spec.range.at(i);
    BlochMode mode = fixed_mode;
    ModelParams point = p;
    if (energy_sweep) {
      const double detuning = std::abs(x - p.omega());
      if (!(detuning < 2.0 * p.xi())) {
        ++table.clipped;
        continue;
      }
      mode = wavenumber_from_energy(x, p.omega(), p.xi());
      if (mode.band_edge) {
        ++table.clipped;
        continue;
      }
    } else {
      point = p.with_omega_atom(x);
    }
    const ScatteringSolution sol = scatter(point, spec.port, mode);
    table.x.push_back(x);
    for (std::size_t c = 0; c < spec.quantities.size(); ++c) {
      table.values[c].push_back(pick(sol.probabilities, spec.quantities[c]));
    }
    table.unitarity_residual.push_back(std::abs(sol.unitarity_residual()));
  }
  meta.emplace_back("clipped", static_cast<double>(table.clipped));
  if (table.clipped > 0) {
    std::ostringstream os;
    os << table.clipped << " grid point(s) on or outside the band edge were dropped";
    table.warnings.push_back(os.str());
  }
  return table;
}

}  // namespace troute
