#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "junction_oracle.hpp"
#include "random_params.hpp"
#include "troute/error.hpp"
#include "troute/scattering.hpp"

namespace troute {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
const cplx kI{0.0, 1.0};

ModelParams p0() { return ModelParams::uniform(10.0, 1.0, 0.3, 0.3, 10.0); }

void expect_complex_near(cplx actual, cplx expected, double tol) {
  EXPECT_NEAR(actual.real(), expected.real(), tol);
  EXPECT_NEAR(actual.imag(), expected.imag(), tol);
}

TEST(ModelParams, Validation) {
  EXPECT_THROW(ModelParams::uniform(10, 0.0, 0.1, 0.1, 10), Error);
  EXPECT_THROW(ModelParams::uniform(10, 1.0, -0.1, 0.1, 10), Error);
  EXPECT_THROW(ModelParams::uniform(10, 1.0, 0.1, -0.1, 10), Error);
  EXPECT_THROW(ModelParams::uniform(10, 1.0, 0.1, NAN, 10), Error);
  EXPECT_TRUE(p0().closed_form_valid());
  EXPECT_FALSE(ModelParams::general(10, 10.5, 1, 1, 0.3, 0.3, 10).closed_form_valid());
  // Bitwise equality only: a one-ulp difference already disables the closed form.
  EXPECT_FALSE(ModelParams::general(10, std::nextafter(10.0, 11.0), 1, 1, 0.3, 0.3, 10)
                   .closed_form_valid());
}

TEST(ScatterFromA, BandCentreAtResonance) {
  const auto sol = scatter_from_a(p0(), mode_from_wavenumber(kHalfPi, 10, 1));
  expect_complex_near(sol.transmission, 2.0 / 3.0, 1e-15);
  expect_complex_near(sol.reflection, -1.0 / 3.0, 1e-15);
  expect_complex_near(sol.transfer, 2.0 / 3.0 * kI, 1e-15);
  EXPECT_NEAR(sol.probabilities.transmission, 4.0 / 9.0, 1e-15);
  EXPECT_NEAR(sol.probabilities.reflection, 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(sol.probabilities.transfer, 4.0 / 9.0, 1e-15);
  // U_1^[b] = t^b e^{ik} = -2/3 and A sin k = U_1^[b].
  expect_complex_near(sol.junction_b, -2.0 / 3.0, 1e-15);
  expect_complex_near(sol.boundary_amplitude * std::sin(kHalfPi), sol.junction_b, 1e-15);
}

TEST(ScatterFromA, NoArmBCouplingGivesResonantReflection) {
  for (double e : {8.5, 9.3, 10.0, 11.7}) {
    const auto p = ModelParams::uniform(10, 1, 0.4, 0.0, e);
    const auto sol = scatter_from_a(p, wavenumber_from_energy(e, 10, 1));
    expect_complex_near(sol.transmission, 0.0, 1e-15);
    expect_complex_near(sol.reflection, -1.0, 1e-15);
    expect_complex_near(sol.transfer, 0.0, 1e-15);
  }
}

TEST(ScatterFromA, DecoupledEmitterIsTransparent) {
  for (double e : {8.2, 10.0, 11.9}) {
    const auto p = ModelParams::uniform(10, 1, 0.0, 0.0, 10.0);
    const auto sol = scatter_from_a(p, wavenumber_from_energy(e, 10, 1));
    EXPECT_EQ(sol.transmission, cplx(1.0));
    EXPECT_EQ(sol.reflection, cplx(0.0));
    EXPECT_EQ(sol.transfer, cplx(0.0));
  }
}

TEST(ScatterFromA, RequiresEqualArms) {
  const auto p = ModelParams::general(10, 10.5, 1, 1, 0.3, 0.3, 10);
  const auto mode = mode_from_wavenumber(1.0, 10, 1);
  try {
    scatter_from_a(p, mode);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
  EXPECT_THROW(scatter_from_b(p, mode), Error);
  EXPECT_THROW(effective_couplings(p, mode), Error);
}

TEST(ScatterFromA, BandEdgeIsNonPhysicalButFinite) {
  const auto sol = scatter_from_a(p0(), mode_from_wavenumber(1e-8, 10, 1));
  EXPECT_FALSE(sol.physical());
  EXPECT_TRUE(std::isfinite(std::abs(sol.transmission)));
  EXPECT_TRUE(std::isfinite(std::abs(sol.transfer)));
}

TEST(ScatterFromB, BandCentreAtResonance) {
  const auto sol = scatter_from_b(p0(), mode_from_wavenumber(kHalfPi, 10, 1));
  expect_complex_near(sol.transfer, 2.0 / 3.0 * kI, 1e-15);
  expect_complex_near(sol.reflection, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(sol.probabilities.transfer, 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(sol.probabilities.reflection, 1.0 / 9.0, 1e-15);
  EXPECT_EQ(sol.probabilities.transmission, 0.0);
  // U_1^[b] = e^{-ik} + r^b e^{ik}
  expect_complex_near(sol.junction_b, -kI + kI / 3.0, 1e-15);
}

TEST(ScatterFromB, NoArmACouplingReflectsEverything) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> kd(0.05, 3.09);
  for (int i = 0; i < 200; ++i) {
    const auto p = ModelParams::uniform(10, 1, 0.0, 0.05 + 0.01 * (i % 50), 9.0 + 0.01 * i);
    const auto sol = scatter_from_b(p, mode_from_wavenumber(kd(rng), 10, 1));
    EXPECT_NEAR(std::abs(sol.reflection), 1.0, 1e-14);
    EXPECT_EQ(sol.transfer, cplx(0.0));
  }
}

TEST(ScatterFromB, DecayMatchedResonanceTransfersEverything) {
  const auto p = ModelParams::uniform(10, 1, 0.3 * std::sqrt(2.0), 0.3, 10.0);
  const auto sol = scatter_from_b(p, mode_from_wavenumber(kHalfPi, 10, 1));
  EXPECT_NEAR(sol.probabilities.transfer, 1.0, 1e-12);
  EXPECT_NEAR(sol.probabilities.reflection, 0.0, 1e-12);
  expect_complex_near(sol.transfer, std::sqrt(2.0) / 2.0 * kI, 1e-15);
}

TEST(ScatterFromB, DecoupledEmitterHardWall) {
  const auto p = ModelParams::uniform(10, 1, 0.0, 0.0, 10.0);
  const auto sol = scatter_from_b(p, mode_from_wavenumber(kHalfPi, 10, 1));
  EXPECT_EQ(sol.reflection, cplx(-1.0));
  EXPECT_EQ(sol.transfer, cplx(0.0));
}

TEST(EffectiveCouplings, LambShiftAndRates) {
  const auto p = ModelParams::uniform(10, 1, 0.15, 0.15, 9.0);
  const auto eff = effective_couplings(p, mode_from_wavenumber(std::numbers::pi / 4, 10, 1));
  EXPECT_NEAR(eff.lamb_shift, 0.015909902576697322, 1e-16);

  const auto at_centre = effective_couplings(p0(), mode_from_wavenumber(kHalfPi, 10, 1));
  EXPECT_NEAR(at_centre.lamb_shift, 0.0, 1e-17);
  EXPECT_NEAR(at_centre.gamma_a, 0.045, 1e-16);
  EXPECT_NEAR(at_centre.gamma_b, 0.09, 1e-16);
}

TEST(EffectiveCouplings, PoleLeavesPotentialsUndefined) {
  const auto eff = effective_couplings(p0(), mode_from_wavenumber(kHalfPi, 10, 1));
  EXPECT_FALSE(eff.v_a.has_value());
  EXPECT_FALSE(eff.v_b.has_value());
  EXPECT_FALSE(eff.g_ab.has_value());
  EXPECT_TRUE(std::isfinite(eff.lamb_shift));
  EXPECT_TRUE(std::isfinite(eff.gamma_a));
  EXPECT_TRUE(std::isfinite(eff.gamma_b));

  const auto p = ModelParams::uniform(10, 1, 0.2, 0.7, 9.4);
  const auto off = effective_couplings(p, mode_from_wavenumber(1.2, 10, 1));
  ASSERT_TRUE(off.v_a && off.v_b && off.g_ab);
  EXPECT_NEAR(*off.g_ab * *off.g_ab, *off.v_a * *off.v_b, 1e-14);
}

// Property sweep over random parameters; closed forms against the
// independent junction-matching solve and against the stated invariants.
TEST(ScatteringProperties, RandomParameterSweep) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const auto pt = testing::random_point(rng);
    const BlochMode mode = mode_from_wavenumber(pt.k, 10, 1);
    const auto a = scatter_from_a(pt.params, mode);
    const auto b = scatter_from_b(pt.params, mode);

    EXPECT_NEAR(a.probabilities.total(), 1.0, 1e-12);
    EXPECT_NEAR(b.probabilities.total(), 1.0, 1e-12);
    EXPECT_LT(std::abs(a.reflection - (a.transmission - 1.0)), 1e-15);
    EXPECT_LT(std::abs(a.transfer - b.transfer), 1e-14);
    EXPECT_LE(a.probabilities.transfer, 0.5 + 1e-12);
    EXPECT_LE(b.probabilities.transfer, 1.0 + 1e-12);

    const auto ma = testing::match_from_a(pt.params, pt.k);
    const auto mb = testing::match_from_b(pt.params, pt.k);
    EXPECT_LT(std::abs(a.transmission - ma.t), 1e-10);
    EXPECT_LT(std::abs(a.reflection - ma.r), 1e-10);
    EXPECT_LT(std::abs(a.transfer - ma.t_b), 1e-10);
    EXPECT_LT(std::abs(a.atom_amplitude - ma.u_e), 1e-10 * std::max(1.0, std::abs(ma.u_e)));
    EXPECT_LT(std::abs(b.transfer - mb.t_a), 1e-10);
    EXPECT_LT(std::abs(b.reflection - mb.r_b), 1e-10);
    EXPECT_LT(std::abs(b.atom_amplitude - mb.u_e), 1e-10 * std::max(1.0, std::abs(mb.u_e)));
    if (HasFailure()) {
      ADD_FAILURE() << "first failure at ga=" << pt.params.g_a() << " gb=" << pt.params.g_b()
                    << " wA=" << pt.params.omega_atom() << " k=" << pt.k;
      return;
    }
  }
}

}  // namespace
}  // namespace troute
