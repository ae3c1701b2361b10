#pragma once

#include <string_view>

namespace troute {

/// Incidence port: arm a is the infinite waveguide, arm b the
/// semi-infinite one terminated at site j_b = 1.
enum class Port { FromA, FromB };

std::string_view to_string(Port port) noexcept;

/// Parameters of the T-junction: two tight-binding resonator chains and a
/// two-level emitter at the node. Energies share one unit (normally the
/// hopping strength).
///
/// Construction validates xi_a, xi_b > 0 and g_a, g_b >= 0 and throws
/// Error{InvalidParams} otherwise. Values are immutable afterwards.
class ModelParams {
 public:
  /// Equal-arm router: omega_a = omega_b = omega and xi_a = xi_b = xi.
  static ModelParams uniform(double omega, double xi, double g_a, double g_b,
                             double omega_atom);

  static ModelParams general(double omega_a, double omega_b, double xi_a,
                             double xi_b, double g_a, double g_b,
                             double omega_atom);

  double omega_a() const noexcept { return omega_a_; }
  double omega_b() const noexcept { return omega_b_; }
  double xi_a() const noexcept { return xi_a_; }
  double xi_b() const noexcept { return xi_b_; }
  double g_a() const noexcept { return g_a_; }
  double g_b() const noexcept { return g_b_; }
  double omega_atom() const noexcept { return omega_atom_; }

  /// Shared cavity frequency / hopping of the equal-arm case. Only
  /// meaningful when closed_form_valid().
  double omega() const noexcept { return omega_a_; }
  double xi() const noexcept { return xi_a_; }

  /// The closed-form amplitudes exist only for bitwise-equal arms.
  bool closed_form_valid() const noexcept {
    return omega_a_ == omega_b_ && xi_a_ == xi_b_;
  }

  ModelParams with_omega_atom(double omega_atom) const;
  ModelParams with_couplings(double g_a, double g_b) const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(double omega_a, double omega_b, double xi_a, double xi_b,
              double g_a, double g_b, double omega_atom);

  double omega_a_;
  double omega_b_;
  double xi_a_;
  double xi_b_;
  double g_a_;
  double g_b_;
  double omega_atom_;
};

/// Throws InvalidParams unless the closed-form layer applies.
void require_closed_form(const ModelParams& p);

}  // namespace troute
