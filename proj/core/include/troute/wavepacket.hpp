#pragma once

#include <optional>

#include <Eigen/Dense>

#include "troute/lattice.hpp"

namespace troute {

/// Gaussian packet exp(+-i k0 j - (j - j0)^2 / (4 sigma^2)) launched toward
/// the junction: on arm a from j0 < 0 moving right, on arm b from j0 >= 1
/// moving down.
struct WavePacketSpec {
  double carrier_k0 = 0.0;
  double width_sigma = 0.0;
  int center_j0 = 0;
  Port port = Port::FromA;
};

/// Probability beyond which a packet counts as having reached a lattice end.
inline constexpr double kEndLeakTolerance = 1e-6;
inline constexpr double kNormTolerance = 1e-10;

/// Summed |amplitude|^2 per region after the evolution. Site j_a = 0 is
/// booked to the right half of arm a.
struct RegionProbabilities {
  Port port = Port::FromA;
  double k0 = 0.0;
  double sigma = 0.0;
  double time = 0.0;
  double left_a = 0.0;
  double right_a = 0.0;
  double b = 0.0;
  double atom = 0.0;
  double max_norm_drift = 0.0;  // over all checkpoints
  double max_end_leak = 0.0;    // over all checkpoints

  double total() const noexcept { return left_a + right_a + b + atom; }
};

/// Exact unitary propagator exp(-i H t) from one eigendecomposition of the
/// lattice Hamiltonian; cost is paid once per lattice and reused across
/// packets and times.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const LatticeModel& lat);

  const LatticeModel& lattice() const noexcept { return lattice_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return energies_; }

  /// Coefficients of a state in the eigenbasis.
  Eigen::VectorXcd to_eigenbasis(const Eigen::VectorXcd& psi) const;
  /// State at time t from eigenbasis coefficients at t = 0.
  Eigen::VectorXcd evolve_from(const Eigen::VectorXcd& coeffs, double t) const;
  Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi, double t) const;

 private:
  LatticeModel lattice_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd modes_;
};

/// Throws PacketClipped unless 3 sigma fits between the centre and both the
/// junction and the lattice end of the incidence arm.
void validate_packet(const LatticeModel& lat, const WavePacketSpec& spec);

/// Normalised initial state.
Eigen::VectorXcd initial_packet(const LatticeModel& lat, const WavePacketSpec& spec);

/// (d + max(d / 2, 5 sigma)) / v_g(k0), with d the distance from the packet
/// centre to the junction: long enough for the trailing tail of the packet
/// to pass the junction and for the emitter to decay.
double default_evolve_time(const LatticeModel& lat, const WavePacketSpec& spec);

/// Evolves the packet and books the final probabilities by region. The norm
/// and the end zones are monitored at evenly spaced checkpoints; NormDrift
/// is thrown past 1e-10 and PacketClipped when more than 1e-6 reaches the
/// outermost sites of any open end.
RegionProbabilities wavepacket_scatter(const SpectralPropagator& prop,
                                       const WavePacketSpec& spec,
                                       std::optional<double> evolve_time = {});

RegionProbabilities wavepacket_scatter(const LatticeModel& lat,
                                       const WavePacketSpec& spec,
                                       std::optional<double> evolve_time = {});

}  // namespace troute
