#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "troute/design.hpp"
#include "troute/error.hpp"
#include "troute/scattering.hpp"

namespace troute {
namespace {

const double kSqrt2 = std::sqrt(2.0);

TEST(DesignForEnergy, QuarterBandDecayMatched) {
  const auto p = ModelParams::uniform(10, 1, 0.15, 0.15, 0.0);
  const auto rep = design_for_energy(p, 10 - kSqrt2);
  EXPECT_NEAR(rep.resonant_omega_atom, 8.6016963402036, 1e-12);
  EXPECT_NEAR(rep.k, std::numbers::pi / 4, 1e-15);
  EXPECT_TRUE(rep.decay_matched);
  EXPECT_FALSE(rep.no_decay_match);
  EXPECT_NEAR(rep.achievable_transfer_from_b, 1.0, 1e-12);
  EXPECT_NEAR(rep.achievable_transfer_from_a, 0.5, 1e-12);
  EXPECT_NEAR(rep.required_g_a, 0.15, 1e-15);
  // The designed splitting satisfies E - omega_A + Delta(E) = 0.
  EXPECT_NEAR(rep.target_energy - rep.resonant_omega_atom + rep.lamb_shift, 0.0, 1e-14);
}

TEST(DesignForEnergy, BandCentreNotMatched) {
  const auto p = ModelParams::uniform(10, 1, 0.3, 0.3, 3.0);
  const auto rep = design_for_energy(p, 10.0);
  EXPECT_NEAR(rep.resonant_omega_atom, 10.0, 1e-15);
  EXPECT_FALSE(rep.decay_matched);
  EXPECT_FALSE(rep.no_decay_match);
  EXPECT_NEAR(rep.achievable_transfer_from_b, 8.0 / 9.0, 1e-12);
}

TEST(DesignForEnergy, UncoupledArmB) {
  const auto rep = design_for_energy(ModelParams::uniform(10, 1, 0.3, 0.0, 10), 9.5);
  EXPECT_TRUE(rep.no_decay_match);
  EXPECT_FALSE(rep.decay_matched);
  EXPECT_EQ(rep.achievable_transfer_from_b, 0.0);
}

TEST(DesignForEnergy, CouplingRatioTooLarge) {
  const auto rep = design_for_energy(ModelParams::uniform(10, 1, 0.3, 0.1, 10), 10.0);
  EXPECT_TRUE(rep.no_decay_match);
  EXPECT_LT(rep.achievable_transfer_from_b, 1.0);
  EXPECT_NE(rep.diagnostic.find("> 1"), std::string::npos) << rep.diagnostic;
}

TEST(DesignForEnergy, OutOfBand) {
  try {
    design_for_energy(ModelParams::uniform(10, 1, 0.3, 0.3, 10), 12.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfBand);
  }
}

TEST(DesignForEnergy, Idempotent) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> g(0.01, 1.0), e(8.1, 11.9);
  for (int i = 0; i < 500; ++i) {
    const auto p = ModelParams::uniform(10, 1, g(rng), g(rng), 10.0);
    const double energy = e(rng);
    const auto first = design_for_energy(p, energy);
    const auto again = design_for_energy(p.with_omega_atom(first.resonant_omega_atom), energy);
    EXPECT_EQ(first.resonant_omega_atom, again.resonant_omega_atom);
    EXPECT_EQ(first.decay_matched, again.decay_matched);
    EXPECT_EQ(first.no_decay_match, again.no_decay_match);
  }
}

TEST(PeakScan, BandCentre) {
  const auto p = ModelParams::uniform(10, 1, 0.3, 0.3, 0.0);
  const Grid grid{8.0, 12.0, 2001};
  const auto peak = peak_scan(p, Port::FromB, 10.0, grid);
  EXPECT_FALSE(peak.clipped);
  EXPECT_NEAR(peak.omega_atom, 10.0, grid.step());
  EXPECT_NEAR(peak.value, 8.0 / 9.0, 1e-9);
}

TEST(PeakScan, QuarterBandReachesUnity) {
  const auto p = ModelParams::uniform(10, 1, 0.15, 0.15, 0.0);
  const Grid grid{8.0, 12.0, 2001};
  const auto peak = peak_scan(p, Port::FromB, 10 - kSqrt2, grid);
  EXPECT_NEAR(peak.omega_atom, 8.6016963402036, grid.step());
  EXPECT_NEAR(peak.value, 1.0, 1e-6);
  EXPECT_LE(peak.value, 1.0 + 1e-12);
}

TEST(PeakScan, ArmAPeakIsReportedToo) {
  const auto p = ModelParams::uniform(10, 1, 0.25, 0.25, 0.0);
  const auto peak = peak_scan(p, Port::FromA, 10 + kSqrt2, {8.0, 12.0, 801});
  EXPECT_FALSE(peak.clipped);
  EXPECT_LE(peak.value, 0.5 + 1e-12);
}

TEST(PeakScan, ClippedWhenPeakOutsideGrid) {
  const auto p = ModelParams::uniform(10, 1, 0.3, 0.3, 0.0);
  const auto peak = peak_scan(p, Port::FromB, 10.0, {10.5, 11.5, 101});
  EXPECT_TRUE(peak.clipped);
  EXPECT_EQ(peak.grid_index, 0);
  EXPECT_EQ(peak.omega_atom, 10.5);
}

TEST(PeakScan, TiesResolveTowardLowerSplitting) {
  // g_a = 0: nothing is transferred anywhere, every grid value ties at zero.
  const auto p = ModelParams::uniform(10, 1, 0.0, 0.3, 0.0);
  const auto peak = peak_scan(p, Port::FromB, 10.0, {9.0, 11.0, 51});
  EXPECT_EQ(peak.grid_index, 0);
}

TEST(PeakScan, EmptyGrid) {
  const auto p = ModelParams::uniform(10, 1, 0.3, 0.3, 0.0);
  for (const Grid g : {Grid{9.0, 9.0, 11}, Grid{9.0, 11.0, 1}, Grid{11.0, 9.0, 11}}) {
    try {
      peak_scan(p, Port::FromB, 10.0, g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyGrid);
    }
  }
}

TEST(RouterProperties, DecayMatchedDesignIsTheGlobalMaximum) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> kd(0.3, std::numbers::pi - 0.3), gd(0.05, 0.5);
  for (int i = 0; i < 20; ++i) {
    const double k = kd(rng);
    const double gb = gd(rng);
    const double ga = kSqrt2 * gb * std::sin(k);
    const auto p = ModelParams::uniform(10, 1, ga, gb, 0.0);
    const double energy = band_energy(k, 10, 1);
    const auto rep = design_for_energy(p, energy);
    ASSERT_TRUE(rep.decay_matched);
    EXPECT_NEAR(rep.achievable_transfer_from_b, 1.0, 1e-12);
    const Grid grid{6.0, 14.0, 4001};
    const auto peak = peak_scan(p, Port::FromB, energy, grid);
    EXPECT_NEAR(peak.omega_atom, rep.resonant_omega_atom, grid.step());
    for (int j = 0; j < grid.n; ++j) {
      const double t = scatter_from_b(p.with_omega_atom(grid.at(j)), mode_at_energy(p, energy))
                           .probabilities.transfer;
      ASSERT_LE(t, rep.achievable_transfer_from_b + 1e-12);
    }
  }
}

TEST(RouterProperties, ArmATransferNeverExceedsHalf) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> kd(1e-3, std::numbers::pi - 1e-3), gd(0.0, 1.0),
      wd(7.0, 13.0);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const auto p = ModelParams::uniform(10, 1, gd(rng), gd(rng), wd(rng));
    const double t = scatter_from_a(p, mode_from_wavenumber(kd(rng), 10, 1)).probabilities.transfer;
    worst = std::max(worst, t);
  }
  EXPECT_LE(worst, 0.5 + 1e-12);
}

}  // namespace
}  // namespace troute
