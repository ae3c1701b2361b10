#include "troute/params.hpp"

#include <cmath>
#include <sstream>

#include "troute/error.hpp"

namespace troute {

std::string_view to_string(Port port) noexcept {
  return port == Port::FromA ? "a" : "b";
}

ModelParams::ModelParams(double omega_a, double omega_b, double xi_a,
                         double xi_b, double g_a, double g_b,
                         double omega_atom)
    : omega_a_(omega_a),
      omega_b_(omega_b),
      xi_a_(xi_a),
      xi_b_(xi_b),
      g_a_(g_a),
      g_b_(g_b),
      omega_atom_(omega_atom) {
  const double all[] = {omega_a, omega_b, xi_a, xi_b, g_a, g_b, omega_atom};
  for (double v : all) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidParams, "parameters must be finite");
    }
  }
  if (!(xi_a > 0.0) || !(xi_b > 0.0)) {
    std::ostringstream os;
    os << "hopping strengths must be positive (xi_a=" << xi_a
       << ", xi_b=" << xi_b << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  if (g_a < 0.0 || g_b < 0.0) {
    std::ostringstream os;
    os << "couplings must be non-negative (g_a=" << g_a << ", g_b=" << g_b
       << ")";
    throw Error(ErrorCode::InvalidParams, os.str());
  }
}

ModelParams ModelParams::uniform(double omega, double xi, double g_a,
                                 double g_b, double omega_atom) {
  return ModelParams(omega, omega, xi, xi, g_a, g_b, omega_atom);
}

ModelParams ModelParams::general(double omega_a, double omega_b, double xi_a,
                                 double xi_b, double g_a, double g_b,
                                 double omega_atom) {
  return ModelParams(omega_a, omega_b, xi_a, xi_b, g_a, g_b, omega_atom);
}

ModelParams ModelParams::with_omega_atom(double omega_atom) const {
  return ModelParams(omega_a_, omega_b_, xi_a_, xi_b_, g_a_, g_b_,
                     omega_atom);
}

ModelParams ModelParams::with_couplings(double g_a, double g_b) const {
  return ModelParams(omega_a_, omega_b_, xi_a_, xi_b_, g_a, g_b,
                     omega_atom_);
}

void require_closed_form(const ModelParams& p) {
  if (!p.closed_form_valid()) {
    throw Error(ErrorCode::InvalidParams,
                "closed-form amplitudes need omega_a == omega_b and "
                "xi_a == xi_b; use the lattice oracle for unequal arms");
  }
}

}  // namespace troute
