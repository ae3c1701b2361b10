#include "troute/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "troute/error.hpp"

namespace troute {

double band_energy(double k, double omega, double xi) noexcept {
  return omega - 2.0 * xi * std::cos(k);
}

namespace {

BlochMode finish(double k, double energy, double xi) {
  BlochMode mode;
  mode.k = k;
  mode.energy = energy;
  const double s = std::sin(k);
  mode.group_velocity = 2.0 * xi * s;
  mode.band_edge = s < kBandEdgeTolerance;
  return mode;
}

}  // namespace

BlochMode wavenumber_from_energy(double energy, double omega, double xi) {
  if (!(xi > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "hopping strength must be positive");
  }
  const double detuning = energy - omega;
  if (!(std::abs(detuning) < 2.0 * xi)) {
    std::ostringstream os;
    os << "energy " << energy << " outside the open band (" << omega - 2 * xi
       << ", " << omega + 2 * xi << ")";
    throw Error(ErrorCode::OutOfBand, os.str());
  }
  const double k = std::acos((omega - energy) / (2.0 * xi));
  return finish(k, energy, xi);
}

BlochMode mode_from_wavenumber(double k, double omega, double xi) {
  if (!(xi > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "hopping strength must be positive");
  }
  if (!(k > 0.0 && k < std::numbers::pi)) {
    std::ostringstream os;
    os << "wavenumber " << k << " outside the open interval (0, pi)";
    throw Error(ErrorCode::OutOfBand, os.str());
  }
  return finish(k, band_energy(k, omega, xi), xi);
}

}  // namespace troute
