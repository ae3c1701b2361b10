#pragma once

#include <complex>
#include <optional>

#include "troute/dispersion.hpp"
#include "troute/params.hpp"

namespace troute {

using cplx = std::complex<double>;

/// Emitter-induced quantities at one energy.
///
/// The deltalike potentials V_a, V_b and the interchannel coupling G diverge
/// at E = omega_atom and are left empty there; they are diagnostics only and
/// never feed the amplitude formulas. The Lamb shift and both decay rates are
/// finite everywhere inside the band.
struct EffectiveCouplings {
  std::optional<double> v_a;
  std::optional<double> v_b;
  std::optional<double> g_ab;
  double lamb_shift = 0.0;
  double gamma_a = 0.0;
  double gamma_b = 0.0;
};

/// |E - omega_atom| below this (scaled by max(|E|, xi)) counts as the pole.
inline constexpr double kPoleTolerance = 1e-12;

EffectiveCouplings effective_couplings(const ModelParams& p,
                                       const BlochMode& mode);

struct Probabilities {
  double transmission = 0.0;  // T_aa; zero for incidence from b
  double reflection = 0.0;    // R_aa or R_bb
  double transfer = 0.0;      // T_ab, or T_ba = 2|t^a|^2

  double total() const noexcept {
    return transmission + reflection + transfer;
  }
};

/// Stationary scattering state for one incidence port.
///
/// Amplitude naming by port:
///   FromA: transmission = t, reflection = r, transfer = t^b
///   FromB: transmission = 0, reflection = r^b, transfer = t^a
/// For FromB the forward and backward transfer amplitudes coincide, so one
/// value describes both halves of arm a.
struct ScatteringSolution {
  Port port = Port::FromA;
  BlochMode mode;
  cplx transmission{0.0, 0.0};
  cplx reflection{0.0, 0.0};
  cplx transfer{0.0, 0.0};
  cplx junction_b{0.0, 0.0};          // U_1^[b]
  cplx boundary_amplitude{0.0, 0.0};  // A with A sin k = U_1^[b]
  cplx atom_amplitude{0.0, 0.0};      // U_e
  Probabilities probabilities;

  /// False on the band edge, where v_g -> 0.
  bool physical() const noexcept { return !mode.band_edge; }
  double unitarity_residual() const noexcept {
    return probabilities.total() - 1.0;
  }
};

/// Incidence along the infinite arm. Requires p.closed_form_valid().
ScatteringSolution scatter_from_a(const ModelParams& p, const BlochMode& mode);

/// Incidence down the semi-infinite arm. Requires p.closed_form_valid().
ScatteringSolution scatter_from_b(const ModelParams& p, const BlochMode& mode);

ScatteringSolution scatter(const ModelParams& p, Port port,
                           const BlochMode& mode);

/// Convenience: mode on the shared band at the given energy.
BlochMode mode_at_energy(const ModelParams& p, double energy);

}  // namespace troute
