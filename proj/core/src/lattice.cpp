#include "troute/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "troute/error.hpp"

namespace troute {

LatticeModel::LatticeModel(int n_a, int n_b, ModelParams params)
    : n_a_(n_a), n_b_(n_b), params_(params) {
  if (n_a < 2 || n_b < 2) {
    std::ostringstream os;
    os << "lattice needs n_a >= 2 and n_b >= 2 (got n_a=" << n_a
       << ", n_b=" << n_b << ")";
    throw Error(ErrorCode::SizeTooSmall, os.str());
  }
}

Eigen::MatrixXd build_hamiltonian(const LatticeModel& lat) {
  const ModelParams& p = lat.params();
  const int n = lat.dimension();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);

  for (int j = -lat.n_a(); j <= lat.n_a(); ++j) {
    const int i = lat.index_a(j);
    h(i, i) = p.omega_a();
    if (j < lat.n_a()) {
      h(i, i + 1) = -p.xi_a();
      h(i + 1, i) = -p.xi_a();
    }
  }
  for (int j = 1; j <= lat.n_b(); ++j) {
    const int i = lat.index_b(j);
    h(i, i) = p.omega_b();
    if (j < lat.n_b()) {
      h(i, i + 1) = -p.xi_b();
      h(i + 1, i) = -p.xi_b();
    }
  }
  // The a-chain and the b-chain touch only through the emitter.
  const int e = lat.index_atom();
  h(e, e) = p.omega_atom();
  h(e, lat.index_a(0)) = h(lat.index_a(0), e) = p.g_a();
  h(e, lat.index_b(1)) = h(lat.index_b(1), e) = p.g_b();
  return h;
}

namespace {

// Plane-wave factor per site (u_{j+1} = lambda u_j for the outgoing wave)
// and flux velocity on one arm at energy E. Outside the band the decaying
// root of xi lambda^2 + (E - omega) lambda + xi = 0 is used.
struct ArmWave {
  cplx lambda;
  double k = 0.0;
  double velocity = 0.0;
  bool propagating = false;
};

ArmWave arm_wave(double energy, double omega, double xi) {
  ArmWave w;
  const double x = (omega - energy) / (2.0 * xi);
  if (std::abs(x) < 1.0) {
    w.k = std::acos(x);
    w.lambda = std::polar(1.0, w.k);
    w.velocity = 2.0 * xi * std::sin(w.k);
    w.propagating = true;
  } else {
    // lambda + 1/lambda = 2x with |lambda| < 1.
    const double root = std::sqrt(x * x - 1.0);
    w.lambda = x > 0 ? x - root : x + root;
  }
  return w;
}

cplx power(cplx base, int j) { return std::pow(base, j); }

}  // namespace

StationaryResult stationary_scatter(const LatticeModel& lat, Port port, double k) {
  const ModelParams& p = lat.params();
  if (!(k > 0.0 && k < std::numbers::pi)) {
    throw Error(ErrorCode::OutOfBand, "incident wavenumber outside (0, pi)");
  }
  const bool from_a = port == Port::FromA;
  const double energy = from_a ? band_energy(k, p.omega_a(), p.xi_a())
                               : band_energy(k, p.omega_b(), p.xi_b());
  const ArmWave wa = arm_wave(energy, p.omega_a(), p.xi_a());
  const ArmWave wb = arm_wave(energy, p.omega_b(), p.xi_b());
  const ArmWave& incoming = from_a ? wa : wb;

  const int n = lat.dimension();
  Eigen::MatrixXcd m = -build_hamiltonian(lat).cast<cplx>();
  m.diagonal().array() += energy;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);

  // Left end of arm a and top end of arm b, where the missing neighbour is
  // u_out = inc_out + lambda (u_edge - inc_edge).
  const int left = lat.index_a(-lat.n_a());
  const int right = lat.index_a(lat.n_a());
  const int top = lat.index_b(lat.n_b());
  m(left, left) += p.xi_a() * wa.lambda;
  m(right, right) += p.xi_a() * wa.lambda;
  m(top, top) += p.xi_b() * wb.lambda;

  // Incident wave: e^{ikj} on arm a, e^{-ikj} on arm b.
  if (from_a) {
    const int edge = -lat.n_a();
    const cplx inc_out = std::polar(1.0, k * (edge - 1));
    const cplx inc_edge = std::polar(1.0, k * edge);
    rhs(left) = -p.xi_a() * (inc_out - wa.lambda * inc_edge);
  } else {
    const int edge = lat.n_b();
    const cplx inc_out = std::polar(1.0, -k * (edge + 1));
    const cplx inc_edge = std::polar(1.0, -k * edge);
    rhs(top) = -p.xi_b() * (inc_out - wb.lambda * inc_edge);
  }

  const int e = lat.index_atom();
  if (p.g_a() == 0.0 && p.g_b() == 0.0) {
    // A decoupled emitter carries no amplitude; pin it to zero so that
    // E = omega_atom does not leave a null row.
    m.row(e).setZero();
    m(e, e) = 1.0;
  }

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  StationaryResult res;
  res.rcond = lu.rcond();
  if (!(res.rcond > 1e-14)) {
    std::ostringstream os;
    os << "closed lattice system is singular at E=" << energy
       << " (rcond estimate " << res.rcond << ")";
    throw Error(ErrorCode::SingularSystem, os.str());
  }
  const Eigen::VectorXcd u = lu.solve(rhs);
  if (!u.allFinite()) {
    throw Error(ErrorCode::SingularSystem, "non-finite lattice solution");
  }

  ScatteringSolution& sol = res.solution;
  sol.port = port;
  sol.mode.k = k;
  sol.mode.energy = energy;
  sol.mode.group_velocity = incoming.velocity;
  sol.mode.band_edge = std::sin(k) < kBandEdgeTolerance;
  sol.atom_amplitude = u(e);
  sol.junction_b = u(lat.index_b(1));
  sol.boundary_amplitude = sol.junction_b / std::sin(k);

  const auto ua = [&](int j) { return u(lat.index_a(j)); };
  const auto ub = [&](int j) { return u(lat.index_b(j)); };
  if (from_a) {
    sol.transmission = ua(1) / wa.lambda;
    sol.reflection = (ua(-1) - std::polar(1.0, -k)) * std::polar(1.0, -k);
    sol.transfer = ub(2) / power(wb.lambda, 2);
    sol.probabilities.transmission = std::norm(sol.transmission);
    sol.probabilities.reflection = std::norm(sol.reflection);
    sol.probabilities.transfer =
        wb.propagating ? std::norm(sol.transfer) * wb.velocity / wa.velocity : 0.0;
  } else {
    sol.transfer = ua(1) / wa.lambda;
    res.transfer_backward = ua(-1) / wa.lambda;
    sol.reflection = (ub(2) - std::polar(1.0, -2.0 * k)) * std::polar(1.0, -2.0 * k);
    sol.probabilities.reflection = std::norm(sol.reflection);
    sol.probabilities.transfer =
        wa.propagating ? (std::norm(sol.transfer) + std::norm(res.transfer_backward)) *
                             wa.velocity / wb.velocity
                       : 0.0;
  }

  FieldProfile& prof = res.profile;
  prof.window = SiteWindow{};
  if (lat.n_a() <= prof.window.a_hi || lat.n_b() <= prof.window.b_hi) {
    prof.u_e = u(e);
    return res;  // too short for the standard window; profile left empty
  }
  for (int j = prof.window.a_lo; j <= prof.window.a_hi; ++j) prof.u_a.push_back(ua(j));
  for (int j = 1; j <= prof.window.b_hi; ++j) prof.u_b.push_back(ub(j));
  prof.u_e = u(e);
  return res;
}

}  // namespace troute
