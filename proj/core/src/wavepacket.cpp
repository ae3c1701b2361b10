#include "troute/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "troute/error.hpp"

namespace troute {

SpectralPropagator::SpectralPropagator(const LatticeModel& lat) : lattice_(lat) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(build_hamiltonian(lat));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NormDrift, "eigendecomposition of the lattice failed");
  }
  energies_ = solver.eigenvalues();
  modes_ = solver.eigenvectors();
}

Eigen::VectorXcd SpectralPropagator::to_eigenbasis(const Eigen::VectorXcd& psi) const {
  Eigen::VectorXcd c(psi.size());
  c.real() = modes_.transpose() * psi.real();
  c.imag() = modes_.transpose() * psi.imag();
  return c;
}

Eigen::VectorXcd SpectralPropagator::evolve_from(const Eigen::VectorXcd& coeffs,
                                                 double t) const {
  Eigen::VectorXcd phased(coeffs.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    phased(i) = coeffs(i) * std::polar(1.0, -energies_(i) * t);
  }
  Eigen::VectorXcd psi(coeffs.size());
  psi.real() = modes_ * phased.real();
  psi.imag() = modes_ * phased.imag();
  return psi;
}

Eigen::VectorXcd SpectralPropagator::evolve(const Eigen::VectorXcd& psi,
                                            double t) const {
  return evolve_from(to_eigenbasis(psi), t);
}

namespace {

int distance_to_junction(const WavePacketSpec& spec) {
  return spec.port == Port::FromA ? -spec.center_j0 : spec.center_j0 - 1;
}

int end_zone(int arm_sites) { return std::max(5, arm_sites / 20); }

double incoming_velocity(const LatticeModel& lat, const WavePacketSpec& spec) {
  const double xi = spec.port == Port::FromA ? lat.params().xi_a() : lat.params().xi_b();
  return 2.0 * xi * std::sin(spec.carrier_k0);
}

}  // namespace

void validate_packet(const LatticeModel& lat, const WavePacketSpec& spec) {
  if (!(spec.carrier_k0 > 0.0 && spec.carrier_k0 < std::numbers::pi)) {
    throw Error(ErrorCode::OutOfBand, "carrier wavenumber outside (0, pi)");
  }
  if (!(spec.width_sigma > 0.0)) {
    throw Error(ErrorCode::InvalidParams, "packet width must be positive");
  }
  const int to_junction = distance_to_junction(spec);
  const int to_end = spec.port == Port::FromA ? lat.n_a() + spec.center_j0
                                              : lat.n_b() - spec.center_j0;
  const double reach = 3.0 * spec.width_sigma;
  if (!(reach < to_junction) || !(reach < to_end)) {
    std::ostringstream os;
    os << "3*sigma = " << reach << " must be below the distance from j0="
       << spec.center_j0 << " to the junction (" << to_junction
       << ") and to the lattice end (" << to_end << ")";
    throw Error(ErrorCode::PacketClipped, os.str());
  }
}

Eigen::VectorXcd initial_packet(const LatticeModel& lat, const WavePacketSpec& spec) {
  validate_packet(lat, spec);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(lat.dimension());
  const double four_var = 4.0 * spec.width_sigma * spec.width_sigma;
  const auto envelope = [&](int j) {
    const double d = j - spec.center_j0;
    return std::exp(-d * d / four_var);
  };
  if (spec.port == Port::FromA) {
    for (int j = -lat.n_a(); j <= lat.n_a(); ++j) {
      psi(lat.index_a(j)) = envelope(j) * std::polar(1.0, spec.carrier_k0 * j);
    }
  } else {
    for (int j = 1; j <= lat.n_b(); ++j) {
      psi(lat.index_b(j)) = envelope(j) * std::polar(1.0, -spec.carrier_k0 * j);
    }
  }
  psi /= psi.norm();
  return psi;
}

double default_evolve_time(const LatticeModel& lat, const WavePacketSpec& spec) {
  const double d = std::abs(distance_to_junction(spec));
  return (d + std::max(0.5 * d, 5.0 * spec.width_sigma)) / incoming_velocity(lat, spec);
}

RegionProbabilities wavepacket_scatter(const SpectralPropagator& prop,
                                       const WavePacketSpec& spec,
                                       std::optional<double> evolve_time) {
  const LatticeModel& lat = prop.lattice();
  const Eigen::VectorXcd psi0 = initial_packet(lat, spec);
  const double t_final = evolve_time.value_or(default_evolve_time(lat, spec));
  if (!(t_final >= 0.0)) {
    throw Error(ErrorCode::InvalidParams, "evolution time must be non-negative");
  }
  const Eigen::VectorXcd coeffs = prop.to_eigenbasis(psi0);

  const int zone_a = end_zone(lat.n_a());
  const int zone_b = end_zone(lat.n_b());
  const auto prob = [](const Eigen::VectorXcd& psi, int from, int count) {
    return psi.segment(from, count).squaredNorm();
  };

  RegionProbabilities out;
  out.port = spec.port;
  out.k0 = spec.carrier_k0;
  out.sigma = spec.width_sigma;
  out.time = t_final;

  constexpr int kCheckpoints = 16;
  Eigen::VectorXcd psi;
  for (int c = 1; c <= kCheckpoints; ++c) {
    const double t = t_final * c / kCheckpoints;
    psi = prop.evolve_from(coeffs, t);
    out.max_norm_drift = std::max(out.max_norm_drift, std::abs(1.0 - psi.squaredNorm()));
    const double leak = prob(psi, lat.index_a(-lat.n_a()), zone_a) +
                        prob(psi, lat.index_a(lat.n_a() - zone_a + 1), zone_a) +
                        prob(psi, lat.index_b(lat.n_b() - zone_b + 1), zone_b);
    out.max_end_leak = std::max(out.max_end_leak, leak);
  }

  out.left_a = prob(psi, lat.index_a(-lat.n_a()), lat.n_a());
  out.right_a = prob(psi, lat.index_a(0), lat.n_a() + 1);
  out.b = prob(psi, lat.index_b(1), lat.n_b());
  out.atom = std::norm(psi(lat.index_atom()));

  if (out.max_norm_drift > kNormTolerance) {
    std::ostringstream os;
    os << "norm drifted by " << out.max_norm_drift;
    throw Error(ErrorCode::NormDrift, os.str());
  }
  if (out.max_end_leak > kEndLeakTolerance) {
    std::ostringstream os;
    os << "probability " << out.max_end_leak
       << " reached the lattice ends; enlarge the lattice or shorten the run";
    throw Error(ErrorCode::PacketClipped, os.str());
  }
  return out;
}

RegionProbabilities wavepacket_scatter(const LatticeModel& lat,
                                       const WavePacketSpec& spec,
                                       std::optional<double> evolve_time) {
  validate_packet(lat, spec);
  return wavepacket_scatter(SpectralPropagator(lat), spec, evolve_time);
}

}  // namespace troute
