#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "troute/error.hpp"
#include "troute/wavepacket.hpp"

namespace troute {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

TEST(SpectralPropagator, IsUnitaryAndReversible) {
  const LatticeModel lat(40, 30, ModelParams::uniform(10, 1, 0.3, 0.3, 10));
  const SpectralPropagator prop(lat);
  const WavePacketSpec spec{kHalfPi, 4.0, -20, Port::FromA};
  const Eigen::VectorXcd psi = initial_packet(lat, spec);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-14);
  EXPECT_LT((prop.evolve(psi, 0.0) - psi).norm(), 1e-13);
  const Eigen::VectorXcd later = prop.evolve(psi, 7.5);
  EXPECT_NEAR(later.norm(), 1.0, 1e-12);
  const Eigen::VectorXcd back = prop.evolve_from(prop.to_eigenbasis(later), -7.5);
  EXPECT_LT((back - psi).norm(), 1e-12);
}

TEST(SpectralPropagator, DecoupledSpectrumInsideBands) {
  const LatticeModel lat(20, 20, ModelParams::uniform(10, 1, 0.0, 0.0, 13.5));
  const SpectralPropagator prop(lat);
  int outside = 0;
  for (double e : prop.eigenvalues()) {
    if (e <= 8.0 || e >= 12.0) {
      ++outside;
      EXPECT_NEAR(e, 13.5, 1e-12);
    }
  }
  EXPECT_EQ(outside, 1);
}

TEST(InitialPacket, PlacesPacketOnIncidenceArm) {
  const LatticeModel lat(60, 60, ModelParams::uniform(10, 1, 0.3, 0.3, 10));
  const Eigen::VectorXcd from_b = initial_packet(lat, {1.0, 5.0, 30, Port::FromB});
  double on_b = 0.0;
  for (int j = 1; j <= lat.n_b(); ++j) on_b += std::norm(from_b(lat.index_b(j)));
  EXPECT_NEAR(on_b, 1.0, 1e-14);
  // Downward motion on arm b means the phase decreases with j.
  const cplx ratio = from_b(lat.index_b(31)) / from_b(lat.index_b(30));
  EXPECT_NEAR(std::arg(ratio), -1.0, 1e-12);
}

TEST(ValidatePacket, RejectsClippedPackets) {
  const LatticeModel lat(100, 100, ModelParams::uniform(10, 1, 0.3, 0.3, 10));
  EXPECT_NO_THROW(validate_packet(lat, {kHalfPi, 10.0, -50, Port::FromA}));
  for (const WavePacketSpec& bad :
       {WavePacketSpec{kHalfPi, 20.0, -50, Port::FromA},
        WavePacketSpec{kHalfPi, 10.0, -85, Port::FromA},
        WavePacketSpec{kHalfPi, 10.0, 10, Port::FromA},
        WavePacketSpec{kHalfPi, 10.0, 20, Port::FromB},
        WavePacketSpec{kHalfPi, 10.0, 90, Port::FromB}}) {
    try {
      validate_packet(lat, bad);
      ADD_FAILURE() << "sigma " << bad.width_sigma << " j0 " << bad.center_j0;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::PacketClipped);
    }
  }
}

TEST(WavepacketScatter, FreePacketPassesStraightThrough) {
  const LatticeModel lat(300, 50, ModelParams::uniform(10, 1, 0.0, 0.0, 10));
  const WavePacketSpec spec{kHalfPi, 10.0, -150, Port::FromA};
  const auto res = wavepacket_scatter(lat, spec, 125.0);
  EXPECT_GT(res.right_a, 1.0 - 1e-10);
  EXPECT_LT(res.left_a, 1e-10);
  EXPECT_EQ(res.b, 0.0);
  EXPECT_LT(res.max_norm_drift, kNormTolerance);
}

TEST(WavepacketScatter, ConservesNorm) {
  const LatticeModel lat(250, 250, ModelParams::uniform(10, 1, 0.3, 0.3, 10));
  const auto res = wavepacket_scatter(lat, {kHalfPi, 15.0, -100, Port::FromA});
  EXPECT_NEAR(res.total(), 1.0, 1e-10);
  EXPECT_LT(res.max_norm_drift, kNormTolerance);
  EXPECT_LT(res.max_end_leak, kEndLeakTolerance);
  EXPECT_LT(res.atom, 1e-3);
  EXPECT_DOUBLE_EQ(res.time, default_evolve_time(lat, {kHalfPi, 15.0, -100, Port::FromA}));
}

// Closed-form R_bb weighted by the packet's momentum distribution.
double spectral_average_reflection(const ModelParams& p, double k0, double sigma) {
  double num = 0.0, den = 0.0;
  for (int i = 1; i < 20000; ++i) {
    const double k = std::numbers::pi * i / 20000.0;
    const double w = std::exp(-2.0 * sigma * sigma * (k - k0) * (k - k0));
    const BlochMode mode = mode_from_wavenumber(k, p.omega(), p.xi());
    num += w * scatter_from_b(p, mode).probabilities.reflection;
    den += w;
  }
  return num / den;
}

TEST(WavepacketScatter, DecayMatchedEmitterRoutesArmBIntoArmA) {
  const double gb = 0.3 / std::sqrt(2.0);
  const auto p = ModelParams::uniform(10, 1, 0.3, gb, 10);
  const SpectralPropagator prop(LatticeModel(600, 600, p));
  double previous = 1.0;
  for (double sigma : {10.0, 20.0, 40.0}) {
    const auto res = wavepacket_scatter(prop, {kHalfPi, sigma, 300, Port::FromB});
    EXPECT_NEAR(res.b, spectral_average_reflection(p, kHalfPi, sigma), 1e-3) << "sigma " << sigma;
    EXPECT_LT(res.b, 0.5 * previous) << "sigma " << sigma;
    EXPECT_NEAR(res.left_a, res.right_a, 1e-4);
    EXPECT_NEAR(res.total(), 1.0, 1e-10);
    previous = res.b;
  }
}

TEST(WavepacketScatter, NoTransferWithoutArmACoupling) {
  const LatticeModel lat(150, 200, ModelParams::uniform(10, 1, 0.0, 0.3, 10));
  const auto res = wavepacket_scatter(lat, {kHalfPi, 10.0, 80, Port::FromB});
  EXPECT_LT(res.left_a + res.right_a, 1e-12);
  EXPECT_NEAR(res.b + res.atom, 1.0, 1e-10);
}

TEST(WavepacketScatter, FlagsPacketsReachingTheEnds) {
  const LatticeModel lat(100, 100, ModelParams::uniform(10, 1, 0.3, 0.3, 10));
  try {
    wavepacket_scatter(lat, {kHalfPi, 8.0, -50, Port::FromA}, 200.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PacketClipped);
  }
}

TEST(DefaultEvolveTime, ScalesWithDistanceAndWidth) {
  const LatticeModel lat(400, 400, ModelParams::uniform(10, 1, 0.3, 0.3, 10));
  // d = 200, v_g = 2.
  EXPECT_DOUBLE_EQ(default_evolve_time(lat, {kHalfPi, 10.0, -200, Port::FromA}), 150.0);
  EXPECT_DOUBLE_EQ(default_evolve_time(lat, {kHalfPi, 40.0, -200, Port::FromA}), 200.0);
}

}  // namespace
}  // namespace troute
