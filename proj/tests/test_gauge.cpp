/*
 * Copyright 2026 The cpshrink Authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cpshrink/gauge.hpp"
#include "cpshrink/sampling.hpp"

using namespace cpshrink;

namespace {

SingularSpectrum spec(std::vector<double> v, std::size_t pad) {
  return SingularSpectrum::from_values(std::move(v), pad);
}

ComplexMatrix diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d)
    v(i++) = x;
  return v.cast<complex_t>().asDiagonal();
}

std::vector<GaugeNorm> all_variants() { return norm_battery(6); }

} // namespace

TEST(GaugeEval, Examples) {
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeNorm::ky_fan(2), spec({3, 2, 1}, 3)), 5.0);
  EXPECT_NEAR(gauge_eval(GaugeNorm::schatten(2), spec({3, 4, 0}, 3)), 5.0,
              1e-14);
  // k beyond the dimension is the trace norm.
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeNorm::ky_fan(5), spec({3, 2, 1}, 3)), 6.0);
  EXPECT_DOUBLE_EQ(gauge_eval(GaugeNorm::spectral(), spec({3, 2, 1}, 3)), 3.0);
  const auto combo = GaugeNorm::combination(
      {{2.0, GaugeNorm::ky_fan(1)}, {0.5, GaugeNorm::trace()}});
  EXPECT_DOUBLE_EQ(gauge_eval(combo, spec({3, 2, 1}, 3)), 2 * 3 + 0.5 * 6);
}

TEST(NormOf, Examples) {
  EXPECT_NEAR(norm_of(GaugeNorm::trace(), diag({2, -5, 1}), 3), 8.0, 1e-13);
  EXPECT_NEAR(norm_of(GaugeNorm::spectral(), diag({2, -5, 1}), 3), 5.0,
              1e-13);
}

TEST(NormOf, KyFanOneIsSpectralExactly) {
  Rng rng = make_rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = random_gaussian(3, 4, rng);
    EXPECT_EQ(norm_of(GaugeNorm::ky_fan(1), m, 4),
              norm_of(GaugeNorm::spectral(), m, 4));
  }
}

TEST(GaugeNorm, InvalidParameters) {
  EXPECT_THROW(GaugeNorm::ky_fan(0), Error);
  EXPECT_THROW(GaugeNorm::schatten(0.5), Error);
  EXPECT_THROW(GaugeNorm::schatten(std::nan("")), Error);
  EXPECT_THROW(GaugeNorm::combination({}), Error);
  EXPECT_THROW(GaugeNorm::combination({{0.0, GaugeNorm::trace()}}), Error);
  EXPECT_THROW(GaugeNorm::combination({{-1.0, GaugeNorm::trace()}}), Error);
  const auto inner = GaugeNorm::combination({{1.0, GaugeNorm::trace()}});
  EXPECT_THROW(GaugeNorm::combination({{1.0, inner}}), Error);
}

TEST(GaugeNorm, ParseSyntax) {
  EXPECT_EQ(GaugeNorm::parse("kyfan:3").name(), "kyfan:3");
  EXPECT_EQ(GaugeNorm::parse("schatten:inf").name(), "schatten:inf");
  EXPECT_EQ(GaugeNorm::parse("schatten:1.5").name(), "schatten:1.5");
  const auto c = GaugeNorm::parse("combo:0.5*kyfan:2+2*schatten:inf");
  EXPECT_EQ(c.name(), "combo:0.5*kyfan:2+2*schatten:inf");
  EXPECT_DOUBLE_EQ(gauge_eval(c, spec({3, 2, 1}, 3)), 0.5 * 5 + 2 * 3);
  EXPECT_EQ(GaugeNorm::parse("combo:1e+1*kyfan:1").name(), "combo:10*kyfan:1");

  for (const char *bad : {"kyfan", "kyfan:0", "kyfan:x", "schatten:0.5",
                          "schatten:", "frob:2", "combo:kyfan:1",
                          "combo:1*combo:1*kyfan:1", "combo:-1*kyfan:1"})
    EXPECT_THROW(GaugeNorm::parse(bad), Error) << bad;
}

TEST(GaugeNorm, NameRoundTripsThroughParse) {
  Rng rng = make_rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto &norm : all_variants()) {
    const auto again = GaugeNorm::parse(norm.name());
    EXPECT_EQ(again.name(), norm.name());
    std::vector<double> v(5);
    for (auto &x : v)
      x = 3.0 * u(rng);
    EXPECT_EQ(gauge_eval(norm, spec(v, 5)), gauge_eval(again, spec(v, 5)));
  }
}

TEST(GaugeProperties, NormAxioms) {
  Rng rng = make_rng(23);
  std::normal_distribution<double> normal;
  for (const auto &norm : all_variants()) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix x = random_gaussian(4, 4, rng);
      const ComplexMatrix y = random_gaussian(4, 4, rng);
      const double c = normal(rng);
      const double nx = norm_of(norm, x, 4);
      const double ny = norm_of(norm, y, 4);
      EXPECT_GT(nx, 0.0);
      EXPECT_NEAR(norm_of(norm, x * c, 4), std::abs(c) * nx,
                  1e-9 * std::max(1.0, nx));
      EXPECT_LE(norm_of(norm, x + y, 4), (nx + ny) * (1 + 1e-9));
    }
    EXPECT_EQ(norm_of(norm, ComplexMatrix::Zero(3, 3), 3), 0.0);
  }
}

TEST(GaugeProperties, UnitaryInvariance) {
  Rng rng = make_rng(24);
  for (const auto &norm : all_variants()) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix x = random_gaussian(4, 4, rng);
      const ComplexMatrix u = random_unitary(4, rng);
      const ComplexMatrix v = random_unitary(4, rng);
      const double nx = norm_of(norm, x, 4);
      EXPECT_NEAR(norm_of(norm, u * x * v, 4), nx, 1e-9 * std::max(1.0, nx));
    }
  }
}

TEST(GaugeProperties, PaddingInvarianceIsExact) {
  Rng rng = make_rng(25);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (const auto &norm : all_variants()) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> v(4);
      for (auto &x : v)
        x = u(rng);
      const double base = gauge_eval(norm, spec(v, 4));
      for (std::size_t pad : {5u, 7u, 12u})
        EXPECT_EQ(gauge_eval(norm, spec(v, pad)), base) << norm.name();
    }
  }
}

TEST(GaugeProperties, KyFanMonotoneAndTraceLimit) {
  Rng rng = make_rng(26);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(6);
    for (auto &x : v)
      x = u(rng);
    const auto s = spec(v, 6);
    for (std::size_t k = 1; k < 6; ++k)
      EXPECT_LE(gauge_eval(GaugeNorm::ky_fan(k), s),
                gauge_eval(GaugeNorm::ky_fan(k + 1), s));
    EXPECT_EQ(gauge_eval(GaugeNorm::ky_fan(6), s),
              gauge_eval(GaugeNorm::trace(), s));
  }
}

TEST(GaugeProperties, PermutationInvariance) {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (const auto &norm : all_variants()) {
    std::vector<double> v(6);
    for (auto &x : v)
      x = u(rng);
    const double base = gauge_eval(norm, spec(v, 6));
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(v.begin(), v.end(), rng);
      EXPECT_EQ(gauge_eval(norm, spec(v, 6)), base);
      EXPECT_EQ(gauge_eval(norm, PaddedVector(v)), base);
    }
  }
}

TEST(FanDominance, Examples) {
  EXPECT_TRUE(fan_dominance(PaddedVector({1, 1, 0}), PaddedVector({2, 0, 0})));
  EXPECT_FALSE(fan_dominance(PaddedVector({2, 0}), PaddedVector({1, 1})));
  EXPECT_TRUE(fan_dominance(PaddedVector({1, 1}), PaddedVector({2, 0})));
  try {
    fan_dominance(PaddedVector({1, 1}), PaddedVector({1, 1, 1}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(FanDominance, ImpliesSchattenOrdering) {
  Rng rng = make_rng(28);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t dominated = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> a(4), b(4);
    for (auto &x : a)
      x = u(rng);
    for (auto &x : b)
      x = u(rng);
    // Tilt b upward half of the time so that dominance occurs often.
    if (trial % 2 == 0)
      for (auto &x : b)
        x += 0.5;
    const PaddedVector pu(a), pv(b);
    if (!fan_dominance(pu, pv))
      continue;
    ++dominated;
    for (double p : {1.0, 1.5, 2.0, 3.0, HUGE_VAL}) {
      const auto norm = GaugeNorm::schatten(p);
      EXPECT_LE(gauge_eval(norm, pu), gauge_eval(norm, pv) + 1e-12);
    }
  }
  EXPECT_GT(dominated, 100u);
}
