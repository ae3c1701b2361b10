#pragma once

#include <Eigen/Dense>

#include "troute/fields.hpp"
#include "troute/params.hpp"
#include "troute/scattering.hpp"

namespace troute {

/// Truncated single-excitation lattice of the T-junction.
///
/// Basis ordering: arm-a sites j = -n_a..n_a, then arm-b sites j = 1..n_b,
/// then the emitter. Unlike the closed forms, the lattice accepts unequal
/// arm parameters.
class LatticeModel {
 public:
  /// Throws SizeTooSmall unless n_a >= 2 and n_b >= 2.
  LatticeModel(int n_a, int n_b, ModelParams params);

  int n_a() const noexcept { return n_a_; }
  int n_b() const noexcept { return n_b_; }
  const ModelParams& params() const noexcept { return params_; }

  int dimension() const noexcept { return 2 * n_a_ + n_b_ + 2; }
  int index_a(int j) const noexcept { return j + n_a_; }
  int index_b(int j) const noexcept { return 2 * n_a_ + j; }
  int index_atom() const noexcept { return 2 * n_a_ + n_b_ + 1; }

 private:
  int n_a_;
  int n_b_;
  ModelParams params_;
};

/// Real symmetric (hence Hermitian) Hamiltonian matrix in the basis above.
Eigen::MatrixXd build_hamiltonian(const LatticeModel& lat);

struct StationaryResult {
  /// Amplitudes extracted next to the junction. For unequal arms the
  /// transfer probability is flux-weighted by v_out / v_in.
  ScatteringSolution solution;
  /// FromB only: amplitude of the left-going half in arm a.
  cplx transfer_backward{0.0, 0.0};
  /// Reciprocal condition estimate of the closed linear system.
  double rcond = 0.0;
  /// Raw amplitudes on j_a in [-5, 5], j_b in [1, 6].
  FieldProfile profile;
};

/// Solves (E - H) u = source on the finite lattice with exact outgoing
/// plane-wave closure at every truncation boundary; the incoming wave is
/// injected as a source on the boundary row of the incidence arm.
/// k is the wavenumber on the incidence arm. The other arm may be
/// evanescent at that energy, in which case it carries no flux.
StationaryResult stationary_scatter(const LatticeModel& lat, Port port, double k);

}  // namespace troute
