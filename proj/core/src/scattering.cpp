#include "troute/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "troute/error.hpp"

namespace troute {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_in_band(const BlochMode& mode) {
  if (!(mode.k > 0.0 && mode.k < std::numbers::pi)) {
    throw Error(ErrorCode::OutOfBand, "mode wavenumber outside (0, pi)");
  }
}

// Shared denominator of every amplitude, with E - omega_atom entering
// polynomially:
//   v_g (E - omega_atom) + g_b^2 sin 2k + i (g_a^2 + 2 g_b^2 sin^2 k)
cplx resonance_denominator(const ModelParams& p, const BlochMode& mode) {
  const double s = std::sin(mode.k);
  const double c = std::cos(mode.k);
  const double gb2 = p.g_b() * p.g_b();
  const double detuning = mode.energy - p.omega_atom();
  return {mode.group_velocity * detuning + gb2 * 2.0 * s * c,
          p.g_a() * p.g_a() + 2.0 * gb2 * s * s};
}

bool decoupled(const ModelParams& p) { return p.g_a() == 0.0 && p.g_b() == 0.0; }

}  // namespace

BlochMode mode_at_energy(const ModelParams& p, double energy) {
  require_closed_form(p);
  return wavenumber_from_energy(energy, p.omega(), p.xi());
}

EffectiveCouplings effective_couplings(const ModelParams& p,
                                       const BlochMode& mode) {
  require_closed_form(p);
  require_in_band(mode);
  EffectiveCouplings out;
  const double detuning = mode.energy - p.omega_atom();
  const double scale = std::max(std::abs(mode.energy), p.xi());
  if (std::abs(detuning) >= kPoleTolerance * scale) {
    out.v_a = p.g_a() * p.g_a() / detuning;
    out.v_b = p.g_b() * p.g_b() / detuning;
    out.g_ab = p.g_a() * p.g_b() / detuning;
  }
  const double s = std::sin(mode.k);
  out.lamb_shift = p.g_b() * p.g_b() * std::cos(mode.k) / p.xi();
  out.gamma_a = p.g_a() * p.g_a() / mode.group_velocity;
  out.gamma_b = 2.0 * p.g_b() * p.g_b() * s * s / mode.group_velocity;
  return out;
}

ScatteringSolution scatter_from_a(const ModelParams& p, const BlochMode& mode) {
  require_closed_form(p);
  require_in_band(mode);

  ScatteringSolution sol;
  sol.port = Port::FromA;
  sol.mode = mode;
  const double s = std::sin(mode.k);
  const cplx phase = std::polar(1.0, mode.k);

  if (decoupled(p)) {
    sol.transmission = 1.0;
  } else {
    const cplx den = resonance_denominator(p, mode);
    const double gb2 = p.g_b() * p.g_b();
    const double detuning = mode.energy - p.omega_atom();
    const cplx num_t{mode.group_velocity * detuning + gb2 * 2.0 * s *
                         std::cos(mode.k),
                     2.0 * gb2 * s * s};
    sol.transmission = num_t / den;
    sol.reflection = -kI * (p.g_a() * p.g_a()) / den;
    sol.transfer = -2.0 * p.g_a() * p.g_b() * s / den;
    sol.atom_amplitude = p.g_a() * mode.group_velocity / den;
  }
  sol.junction_b = sol.transfer * phase;
  sol.boundary_amplitude = sol.junction_b / s;

  sol.probabilities.transmission = std::norm(sol.transmission);
  sol.probabilities.reflection = std::norm(sol.reflection);
  sol.probabilities.transfer = std::norm(sol.transfer);
  return sol;
}

ScatteringSolution scatter_from_b(const ModelParams& p, const BlochMode& mode) {
  require_closed_form(p);
  require_in_band(mode);

  ScatteringSolution sol;
  sol.port = Port::FromB;
  sol.mode = mode;
  const double s = std::sin(mode.k);
  const cplx phase = std::polar(1.0, mode.k);

  if (decoupled(p)) {
    sol.reflection = -1.0;
  } else {
    const double v = mode.group_velocity;
    const double detuning = mode.energy - p.omega_atom();
    const double gb2_over_xi = p.g_b() * p.g_b() / p.xi();
    const cplx ga2{0.0, p.g_a() * p.g_a()};
    const cplx den_t{v * detuning + p.g_b() * p.g_b() * std::sin(2.0 * mode.k),
                     2.0 * p.g_b() * p.g_b() * s * s + p.g_a() * p.g_a()};
    sol.transfer = -2.0 * p.g_a() * p.g_b() * s / den_t;
    sol.reflection = -(v * (detuning + gb2_over_xi * std::conj(phase)) + ga2) /
                     (v * (detuning + gb2_over_xi * phase) + ga2);
    sol.atom_amplitude = -2.0 * kI * p.g_b() * s * v / den_t;
  }
  sol.junction_b = std::conj(phase) + sol.reflection * phase;
  sol.boundary_amplitude = sol.junction_b / s;

  sol.probabilities.reflection = std::norm(sol.reflection);
  sol.probabilities.transfer = 2.0 * std::norm(sol.transfer);
  return sol;
}

ScatteringSolution scatter(const ModelParams& p, Port port,
                           const BlochMode& mode) {
  return port == Port::FromA ? scatter_from_a(p, mode) : scatter_from_b(p, mode);
}

}  // namespace troute
