#include "troute/fields.hpp"

#include <algorithm>
#include <cmath>

#include "troute/error.hpp"

namespace troute {

namespace {

cplx wave(double k, int j) { return std::polar(1.0, k * j); }

}  // namespace

FieldProfile reconstruct_fields(const ScatteringSolution& sol,
                                const SiteWindow& window) {
  if (window.a_lo > 0 || window.a_hi < 0 || window.b_hi < 2) {
    throw Error(ErrorCode::WindowTooSmall,
                "window must include j_a = 0 and j_b = 1, 2");
  }
  FieldProfile prof;
  prof.window = window;
  prof.u_e = sol.atom_amplitude;
  const double k = sol.mode.k;

  prof.u_a.reserve(static_cast<std::size_t>(window.a_hi - window.a_lo + 1));
  for (int j = window.a_lo; j <= window.a_hi; ++j) {
    cplx u;
    if (sol.port == Port::FromA) {
      u = j < 0 ? wave(k, j) + sol.reflection * wave(k, -j)
                : sol.transmission * wave(k, j);
    } else {
      u = sol.transfer * wave(k, std::abs(j));
    }
    prof.u_a.push_back(u);
  }

  prof.u_b.reserve(static_cast<std::size_t>(window.b_hi));
  for (int j = 1; j <= window.b_hi; ++j) {
    if (j == 1) {
      prof.u_b.push_back(sol.junction_b);
    } else if (sol.port == Port::FromA) {
      prof.u_b.push_back(sol.transfer * wave(k, j));
    } else {
      prof.u_b.push_back(wave(k, -j) + sol.reflection * wave(k, j));
    }
  }
  return prof;
}

double residual_check(const ModelParams& p, double energy,
                      const FieldProfile& prof) {
  const SiteWindow& w = prof.window;
  if (w.a_lo > -5 || w.a_hi < 5 || w.b_hi < 6) {
    throw Error(ErrorCode::WindowTooSmall,
                "residual check needs j_a in [-5, 5] and j_b in [1, 6]");
  }
  if (prof.u_a.size() != static_cast<std::size_t>(w.a_hi - w.a_lo + 1) ||
      prof.u_b.size() != static_cast<std::size_t>(w.b_hi)) {
    throw Error(ErrorCode::WindowTooSmall, "profile does not fill its window");
  }

  double worst = 0.0;
  // Arm a: E u_j = omega_a u_j - xi_a (u_{j-1} + u_{j+1}) + g_a u_e [j = 0]
  for (int j = w.a_lo + 1; j < w.a_hi; ++j) {
    cplx lhs = energy * prof.a(j);
    cplx rhs = p.omega_a() * prof.a(j) - p.xi_a() * (prof.a(j - 1) + prof.a(j + 1));
    if (j == 0) rhs += p.g_a() * prof.u_e;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  // Arm b: the chain ends at j = 1, so that site has a single neighbour.
  for (int j = 1; j < w.b_hi; ++j) {
    cplx lhs = energy * prof.b(j);
    cplx hop = prof.b(j + 1);
    if (j > 1) hop += prof.b(j - 1);
    cplx rhs = p.omega_b() * prof.b(j) - p.xi_b() * hop;
    if (j == 1) rhs += p.g_b() * prof.u_e;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  // Emitter: E u_e = omega_atom u_e + g_a u_0 + g_b u_1
  const cplx lhs = energy * prof.u_e;
  const cplx rhs = p.omega_atom() * prof.u_e + p.g_a() * prof.a(0) + p.g_b() * prof.b(1);
  worst = std::max(worst, std::abs(lhs - rhs));
  return worst;
}

double residual_check(const ModelParams& p, const ScatteringSolution& sol,
                      const FieldProfile& profile) {
  return residual_check(p, sol.mode.energy, profile);
}

}  // namespace troute
