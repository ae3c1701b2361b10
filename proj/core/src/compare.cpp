#include "troute/compare.hpp"

#include <algorithm>
#include <cmath>

#include "troute/error.hpp"

namespace troute {

bool ComparisonReport::pass() const noexcept {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ComparisonEntry& e) { return e.pass; });
}

double ComparisonReport::max_diff() const noexcept {
  double worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, e.abs_diff);
  return worst;
}

namespace {

void check_config(const ScatteringSolution& analytic, Port port, double k) {
  if (analytic.port != port) {
    throw Error(ErrorCode::MismatchedConfig, "analytic and oracle ports differ");
  }
  if (std::abs(analytic.mode.k - k) > 1e-12) {
    throw Error(ErrorCode::MismatchedConfig, "analytic and oracle wavenumbers differ");
  }
}

ComparisonEntry amplitude_entry(std::string name, cplx a, cplx o, double tol) {
  const double diff = std::abs(a - o);
  return {std::move(name), std::abs(a), std::abs(o), diff, tol, diff < tol};
}

ComparisonEntry probability_entry(std::string name, double a, double o, double tol) {
  const double diff = std::abs(a - o);
  return {std::move(name), a, o, diff, tol, diff < tol};
}

}  // namespace

ComparisonReport compare(const ScatteringSolution& analytic,
                         const StationaryResult& oracle, double tolerance) {
  const ScatteringSolution& num = oracle.solution;
  check_config(analytic, num.port, num.mode.k);

  ComparisonReport rep;
  rep.method = "stationary";
  rep.port = analytic.port;
  rep.k = analytic.mode.k;
  if (analytic.port == Port::FromA) {
    rep.entries.push_back(amplitude_entry("t", analytic.transmission, num.transmission, tolerance));
    rep.entries.push_back(amplitude_entry("r", analytic.reflection, num.reflection, tolerance));
    rep.entries.push_back(amplitude_entry("t_b", analytic.transfer, num.transfer, tolerance));
  } else {
    rep.entries.push_back(amplitude_entry("t_a", analytic.transfer, num.transfer, tolerance));
    rep.entries.push_back(
        amplitude_entry("t_a_backward", analytic.transfer, oracle.transfer_backward, tolerance));
    rep.entries.push_back(amplitude_entry("r_b", analytic.reflection, num.reflection, tolerance));
  }
  rep.entries.push_back(amplitude_entry("U_1b", analytic.junction_b, num.junction_b, tolerance));
  rep.entries.push_back(amplitude_entry("U_e", analytic.atom_amplitude, num.atom_amplitude, tolerance));
  return rep;
}

ComparisonReport compare(const ScatteringSolution& analytic,
                         const RegionProbabilities& oracle, double tolerance) {
  check_config(analytic, oracle.port, oracle.k0);

  ComparisonReport rep;
  rep.method = "wavepacket";
  rep.port = analytic.port;
  rep.k = analytic.mode.k;
  const Probabilities& pr = analytic.probabilities;
  if (analytic.port == Port::FromA) {
    rep.entries.push_back(probability_entry("P_right_a", pr.transmission, oracle.right_a, tolerance));
    rep.entries.push_back(probability_entry("P_left_a", pr.reflection, oracle.left_a, tolerance));
    rep.entries.push_back(probability_entry("P_b", pr.transfer, oracle.b, tolerance));
  } else {
    rep.entries.push_back(probability_entry("P_left_a", 0.5 * pr.transfer, oracle.left_a, tolerance));
    rep.entries.push_back(probability_entry("P_right_a", 0.5 * pr.transfer, oracle.right_a, tolerance));
    rep.entries.push_back(probability_entry("P_b", pr.reflection, oracle.b, tolerance));
  }
  rep.entries.push_back(probability_entry("P_atom", 0.0, oracle.atom, tolerance));
  return rep;
}

}  // namespace troute
