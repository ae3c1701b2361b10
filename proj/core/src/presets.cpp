#include "troute/presets.hpp"

#include <cmath>

#include "troute/emit.hpp"
#include "troute/error.hpp"

namespace troute {

namespace {

constexpr double kOmega = 10.0;
constexpr double kXi = 1.0;

struct SplittingSetting {
  double g;
  double energy;
  const char* tag;
};

const SplittingSetting kSplittingSettings[] = {
    {0.15, kOmega - std::sqrt(2.0), "g0.15"},
    {0.3, kOmega, "g0.3"},
    {0.25, kOmega + std::sqrt(2.0), "g0.25"},
};

const double kSpectrumSplittings[] = {9.0, 10.0, 11.3};

std::vector<NamedSweep> energy_set(std::string_view name, Port port, int n) {
  std::vector<NamedSweep> out;
  for (double wa : kSpectrumSplittings) {
    SweepSpec s;
    s.variable = SweepVariable::IncidentEnergy;
    s.range = {kOmega - 2.0 * kXi, kOmega + 2.0 * kXi, n};
    s.port = port;
    s.params = ModelParams::uniform(kOmega, kXi, 0.3, 0.3, wa);
    s.quantities = port == Port::FromA
                       ? std::vector<Quantity>{Quantity::T_aa, Quantity::R_aa, Quantity::T_ab}
                       : std::vector<Quantity>{Quantity::T_ba, Quantity::R_bb};
    out.push_back({std::string(name) + "_omegaA" + format_number(wa), std::move(s)});
  }
  return out;
}

std::vector<NamedSweep> splitting_set(std::string_view name, Port port, int n) {
  std::vector<NamedSweep> out;
  for (const auto& set : kSplittingSettings) {
    SweepSpec s;
    s.variable = SweepVariable::AtomSplitting;
    s.range = {kOmega - 2.0 * kXi, kOmega + 2.0 * kXi, n};
    s.port = port;
    s.params = ModelParams::uniform(kOmega, kXi, set.g, set.g, kOmega);
    s.fixed_energy = set.energy;
    s.quantities = port == Port::FromA
                       ? std::vector<Quantity>{Quantity::RT_aa, Quantity::T_ab}
                       : std::vector<Quantity>{Quantity::T_ba, Quantity::R_bb};
    out.push_back({std::string(name) + "_" + set.tag, std::move(s)});
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"spectrum-a", "spectrum-b", "splitting-a", "splitting-b"};
}

std::vector<NamedSweep> preset_sweeps(std::string_view name, int n_points) {
  if (name == "spectrum-a") return energy_set(name, Port::FromA, n_points);
  if (name == "spectrum-b") return energy_set(name, Port::FromB, n_points);
  if (name == "splitting-a") return splitting_set(name, Port::FromA, n_points);
  if (name == "splitting-b") return splitting_set(name, Port::FromB, n_points);
  throw Error(ErrorCode::InvalidParams, "unknown preset '" + std::string(name) + "'");
}

}  // namespace troute
