#pragma once

#include <vector>

#include "troute/params.hpp"
#include "troute/scattering.hpp"

namespace troute {

/// Sites covered by a field profile: arm a over [a_lo, a_hi], arm b over
/// [1, b_hi].
struct SiteWindow {
  int a_lo = -5;
  int a_hi = 5;
  int b_hi = 6;
};

/// Site amplitudes of a stationary state on a finite window.
struct FieldProfile {
  SiteWindow window;
  std::vector<cplx> u_a;  // index j - a_lo
  std::vector<cplx> u_b;  // index j - 1
  cplx u_e{0.0, 0.0};

  cplx a(int j) const { return u_a.at(static_cast<std::size_t>(j - window.a_lo)); }
  cplx b(int j) const { return u_b.at(static_cast<std::size_t>(j - 1)); }
};

/// Evaluates the port's piecewise plane-wave ansatz on the window.
/// Throws WindowTooSmall unless a_lo <= 0 <= a_hi and b_hi >= 2.
FieldProfile reconstruct_fields(const ScatteringSolution& sol,
                                const SiteWindow& window = {});

/// Largest |LHS - RHS| of the stationary equations over every site of the
/// profile whose neighbours are inside the window, plus the emitter row.
/// The window must cover j_a in [-5, 5] and j_b in [1, 6].
double residual_check(const ModelParams& p, double energy,
                      const FieldProfile& profile);

double residual_check(const ModelParams& p, const ScatteringSolution& sol,
                      const FieldProfile& profile);

}  // namespace troute
