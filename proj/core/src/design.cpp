#include "troute/design.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "troute/error.hpp"
#include "troute/scattering.hpp"

namespace troute {

DesignReport design_for_energy(const ModelParams& p, double energy) {
  const BlochMode mode = mode_at_energy(p, energy);
  const double s = std::sin(mode.k);

  DesignReport rep;
  rep.target_energy = energy;
  rep.k = mode.k;
  rep.lamb_shift = p.g_b() * p.g_b() * std::cos(mode.k) / p.xi();
  rep.resonant_omega_atom = energy + rep.lamb_shift;
  rep.required_g_a = std::sqrt(2.0) * p.g_b() * s;

  const double rate_b = 2.0 * p.g_b() * p.g_b() * s * s;
  const double rate_a = p.g_a() * p.g_a();
  rep.no_decay_match = p.g_b() == 0.0 || p.g_a() > std::sqrt(2.0) * p.g_b();
  rep.decay_matched =
      !rep.no_decay_match &&
      std::abs(rate_b - rate_a) < kDecayMatchTolerance * std::max(rate_a, rate_b);

  const ModelParams tuned = p.with_omega_atom(rep.resonant_omega_atom);
  rep.achievable_transfer_from_b = scatter_from_b(tuned, mode).probabilities.transfer;
  rep.achievable_transfer_from_a = scatter_from_a(tuned, mode).probabilities.transfer;

  std::ostringstream os;
  os.precision(17);
  if (p.g_b() == 0.0) {
    os << "g_b = 0: the emitter does not couple to arm b, no routing possible";
  } else if (rep.no_decay_match) {
    os << "decay match needs sin k = g_a / (sqrt(2) g_b) = "
       << p.g_a() / (std::sqrt(2.0) * p.g_b())
       << " > 1; unreachable for these couplings";
  } else if (!rep.decay_matched) {
    const double sin_needed = p.g_a() / (std::sqrt(2.0) * p.g_b());
    const double cos_needed = std::sqrt(std::max(0.0, 1.0 - sin_needed * sin_needed));
    os << "decay match for these couplings needs sin k = " << sin_needed
       << ", i.e. E = " << p.omega() - 2.0 * p.xi() * cos_needed << " or E = "
       << p.omega() + 2.0 * p.xi() * cos_needed;
  } else {
    os << "resonant and decay matched";
  }
  rep.diagnostic = os.str();
  return rep;
}

void require_grid(const Grid& g) {
  if (g.n < 2 || !(g.lo < g.hi)) {
    std::ostringstream os;
    os << "grid needs n >= 2 and lo < hi (got lo=" << g.lo << ", hi=" << g.hi
       << ", n=" << g.n << ")";
    throw Error(ErrorCode::EmptyGrid, os.str());
  }
}

namespace {

double transfer_rate(const ModelParams& p, Port port, const BlochMode& mode,
                     double omega_atom) {
  return scatter(p.with_omega_atom(omega_atom), port, mode).probabilities.transfer;
}

}  // namespace

PeakResult peak_scan(const ModelParams& p, Port port, double energy,
                     const Grid& grid) {
  require_grid(grid);
  const BlochMode mode = mode_at_energy(p, energy);

  std::vector<double> values(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    values[static_cast<std::size_t>(i)] = transfer_rate(p, port, mode, grid.at(i));
  }
  // First maximum wins, so ties resolve toward lower omega_atom.
  int best = 0;
  for (int i = 1; i < grid.n; ++i) {
    if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }

  PeakResult res;
  res.grid_index = best;
  res.grid_value = values[static_cast<std::size_t>(best)];
  res.omega_atom = grid.at(best);
  if (best == 0 || best == grid.n - 1) {
    res.clipped = true;
    res.value = res.grid_value;
    return res;
  }

  const double y0 = values[static_cast<std::size_t>(best - 1)];
  const double y1 = values[static_cast<std::size_t>(best)];
  const double y2 = values[static_cast<std::size_t>(best + 1)];
  const double curvature = y0 - 2.0 * y1 + y2;
  double offset = 0.0;
  if (curvature < 0.0) {
    offset = std::clamp(0.5 * (y0 - y2) / curvature, -1.0, 1.0);
  }
  res.omega_atom = grid.at(best) + offset * grid.step();
  res.value = transfer_rate(p, port, mode, res.omega_atom);
  return res;
}

}  // namespace troute
