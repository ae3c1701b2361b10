#pragma once

#include <string>

#include "troute/params.hpp"

namespace troute {

/// Relative tolerance on g_a^2 versus 2 g_b^2 sin^2 k.
inline constexpr double kDecayMatchTolerance = 1e-9;

/// Router settings for a chosen incident energy.
///
/// resonant_omega_atom solves E - omega_atom + Lamb shift(E) = 0. The
/// decay-match condition 2 g_b^2 sin^2 k = g_a^2 can only be met when
/// g_a <= sqrt(2) g_b; otherwise no_decay_match is set and the achievable
/// transfer stays below one.
struct DesignReport {
  double target_energy = 0.0;
  double k = 0.0;
  double lamb_shift = 0.0;
  double resonant_omega_atom = 0.0;
  bool decay_matched = false;
  bool no_decay_match = false;
  double required_g_a = 0.0;  // sqrt(2) g_b sin k
  double achievable_transfer_from_b = 0.0;
  double achievable_transfer_from_a = 0.0;
  std::string diagnostic;
};

/// p.omega_atom() is ignored; the report's resonant_omega_atom replaces it.
DesignReport design_for_energy(const ModelParams& p, double energy);

/// Uniform closed grid lo..hi with n points.
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;

  double at(int i) const noexcept {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  double step() const noexcept { return (hi - lo) / static_cast<double>(n - 1); }
};

/// Throws EmptyGrid unless n >= 2 and lo < hi.
void require_grid(const Grid& g);

struct PeakResult {
  double omega_atom = 0.0;   // refined location
  double value = 0.0;        // transfer rate at the refined location
  int grid_index = 0;        // argmax on the raw grid
  double grid_value = 0.0;
  bool clipped = false;      // argmax sat on a grid boundary
};

/// Transfer rate of the port (T_ab for FromA, T_ba for FromB) maximised
/// over the emitter splitting at fixed incident energy.
PeakResult peak_scan(const ModelParams& p, Port port, double energy,
                     const Grid& omega_atom_grid);

}  // namespace troute
