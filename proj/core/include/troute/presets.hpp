#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "troute/sweep.hpp"

namespace troute {

struct NamedSweep {
  std::string label;  // used as the output file stem
  SweepSpec spec;
};

/// Standard spectrum sets at omega = 10, xi = 1:
///   spectrum-a   incidence from a vs E, omega_atom in {9, 10, 11.3}, g = 0.3
///   spectrum-b   incidence from b vs E, same three splittings
///   splitting-a  incidence from a vs omega_atom at
///                (g, E) in {(0.15, 10 - sqrt 2), (0.3, 10), (0.25, 10 + sqrt 2)}
///   splitting-b  incidence from b vs omega_atom, same three settings
/// Energy sweeps span the closed band [8, 12] (edges are clipped);
/// splitting sweeps span omega_atom in [8, 12].
std::vector<NamedSweep> preset_sweeps(std::string_view name, int n_points = 2001);

std::vector<std::string> preset_names();

}  // namespace troute
