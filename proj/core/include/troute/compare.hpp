#pragma once

#include <string>
#include <vector>

#include "troute/lattice.hpp"
#include "troute/scattering.hpp"
#include "troute/wavepacket.hpp"

namespace troute {

inline constexpr double kStationaryTolerance = 1e-10;
inline constexpr double kWavePacketTolerance = 0.02;

struct ComparisonEntry {
  std::string quantity;
  double analytic = 0.0;  // |value| for amplitudes
  double oracle = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ComparisonReport {
  std::string method;  // "stationary" or "wavepacket"
  Port port = Port::FromA;
  double k = 0.0;
  std::vector<ComparisonEntry> entries;

  bool pass() const noexcept;
  double max_diff() const noexcept;
};

/// Amplitude-by-amplitude comparison (complex differences). Throws
/// MismatchedConfig if port or wavenumber differ.
ComparisonReport compare(const ScatteringSolution& analytic,
                         const StationaryResult& oracle,
                         double tolerance = kStationaryTolerance);

/// Region probabilities against the closed-form probabilities at k0.
ComparisonReport compare(const ScatteringSolution& analytic,
                         const RegionProbabilities& oracle,
                         double tolerance = kWavePacketTolerance);

}  // namespace troute
