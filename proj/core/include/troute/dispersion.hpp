#pragma once

namespace troute {

/// Below this value of sin(k) a mode is treated as sitting on the band edge:
/// amplitudes stay finite but the group velocity vanishes and probabilities
/// lose their flux meaning.
inline constexpr double kBandEdgeTolerance = 1e-6;

/// A propagating Bloch wave on a cosine band E = omega - 2 xi cos k.
/// The wavenumber is always on the branch (0, pi) so that v_g > 0; the
/// direction of travel is carried by the sign of the exponent in the ansatz.
struct BlochMode {
  double k = 0.0;
  double energy = 0.0;
  double group_velocity = 0.0;
  bool band_edge = false;
};

double band_energy(double k, double omega, double xi) noexcept;

/// Inverts the dispersion relation. Throws OutOfBand unless
/// |energy - omega| < 2 xi.
BlochMode wavenumber_from_energy(double energy, double omega, double xi);

/// Builds the mode for a given wavenumber; throws OutOfBand unless
/// 0 < k < pi.
BlochMode mode_from_wavenumber(double k, double omega, double xi);

}  // namespace troute
