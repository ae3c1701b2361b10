#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "troute/design.hpp"
#include "troute/params.hpp"

namespace troute {

enum class SweepVariable { IncidentEnergy, AtomSplitting };

enum class Quantity { T_aa, R_aa, T_ab, RT_aa, T_ba, R_bb };

std::string_view to_string(SweepVariable v) noexcept;
std::string_view to_string(Quantity q) noexcept;
/// Accepts the names produced by to_string(Quantity); throws InvalidParams.
Quantity parse_quantity(std::string_view name);
/// Port whose scattering state defines the quantity.
Port port_of(Quantity q) noexcept;

struct SweepSpec {
  SweepVariable variable = SweepVariable::IncidentEnergy;
  Grid range;
  Port port = Port::FromA;
  /// Fixed model; the swept field (omega_atom for AtomSplitting) is ignored.
  ModelParams params = ModelParams::uniform(10.0, 1.0, 0.3, 0.3, 10.0);
  /// Incident energy held fixed in an AtomSplitting sweep.
  double fixed_energy = 0.0;
  std::vector<Quantity> quantities;
};

using MetaValue = std::variant<std::string, double>;

/// Tabulated spectrum, stored by column.
struct SweepTable {
  std::vector<std::pair<std::string, MetaValue>> metadata;
  std::string x_name;
  std::vector<double> x;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // values[column][row]
  std::vector<double> unitarity_residual;   // |sum of port probabilities - 1|
  int clipped = 0;
  std::vector<std::string> warnings;

  std::size_t rows() const noexcept { return x.size(); }
  /// Every row conserves probability to within 1e-12.
  bool all_unitary() const noexcept;
  const std::vector<double>& column(std::string_view name) const;
};

inline constexpr double kRowUnitarityTolerance = 1e-12;

/// Evaluates the closed forms on every grid point. Energies on or outside
/// the band edge are dropped (counted in `clipped`, with a warning) rather
/// than reported as errors.
SweepTable run_sweep(const SweepSpec& spec);

}  // namespace troute
