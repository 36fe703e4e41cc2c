#include "explore/ad_scalar.h"

#include <gtest/gtest.h>

#include <random>

namespace explore::ad {
namespace {

TEST(AdScalar, ConstantsCarryNoPartials) {
  const AdScalar c(3.5);
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c.dim(), 0u);
  EXPECT_DOUBLE_EQ(c.value(), 3.5);
  EXPECT_DOUBLE_EQ(c.partial(0), 0.0);
}

TEST(AdScalar, VariableSeedsUnitPartial) {
  const AdScalar x = AdScalar::variable(2.0, 1, 3);
  EXPECT_DOUBLE_EQ(x.value(), 2.0);
  EXPECT_DOUBLE_EQ(x.partial(0), 0.0);
  EXPECT_DOUBLE_EQ(x.partial(1), 1.0);
  EXPECT_DOUBLE_EQ(x.partial(2), 0.0);
}

TEST(AdScalar, LinearityIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    AdScalar a(u(rng), {u(rng), u(rng)});
    AdScalar b(u(rng), {u(rng), u(rng)});
    const double ca = u(rng), cb = u(rng);
    const AdScalar combo = AdScalar(ca) * a + AdScalar(cb) * b;
    for (int i = 0; i < 2; ++i) {
      EXPECT_DOUBLE_EQ(combo.partial(i), ca * a.partial(i) + cb * b.partial(i));
    }
  }
}

TEST(AdScalar, ProductRuleIsExact) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    AdScalar a(u(rng), {u(rng), u(rng)});
    AdScalar b(u(rng), {u(rng), u(rng)});
    const AdScalar p = a * b;
    EXPECT_DOUBLE_EQ(p.value(), a.value() * b.value());
    for (int i = 0; i < 2; ++i) {
      EXPECT_DOUBLE_EQ(p.partial(i),
                       a.partial(i) * b.value() + b.partial(i) * a.value());
    }
  }
}

TEST(AdScalar, QuotientRule) {
  const AdScalar a(3.0, {1.0, 0.5});
  const AdScalar b(2.0, {0.25, -1.0});
  const AdScalar q = a / b;
  EXPECT_DOUBLE_EQ(q.value(), 1.5);
  for (int i = 0; i < 2; ++i) {
    const double expected =
        (a.partial(i) * b.value() - a.value() * b.partial(i)) /
        (b.value() * b.value());
    EXPECT_NEAR(q.partial(i), expected, 1e-15);
  }
}

TEST(AdScalar, ChainRuleThroughMathFunctions) {
  const AdScalar x = AdScalar::variable(0.7, 0, 1);
  EXPECT_NEAR(sqrt(x).partial(0), 0.5 / std::sqrt(0.7), 1e-15);
  EXPECT_NEAR(sin(x).partial(0), std::cos(0.7), 1e-15);
  EXPECT_NEAR(cos(x).partial(0), -std::sin(0.7), 1e-15);
}

TEST(AdScalar, CompositeMatchesFiniteDifferences) {
  const auto f = [](const AdScalar& x, const AdScalar& y) {
    return sqrt(x * x + y * y) * sin(x) / (AdScalar(1.0) + cos(y) * cos(y));
  };
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double xv = u(rng), yv = u(rng);
    const AdScalar r =
        f(AdScalar::variable(xv, 0, 2), AdScalar::variable(yv, 1, 2));
    const double h = 1e-6;
    const double fdx = (f(AdScalar(xv + h), AdScalar(yv)).value() -
                        f(AdScalar(xv - h), AdScalar(yv)).value()) /
                       (2 * h);
    const double fdy = (f(AdScalar(xv), AdScalar(yv + h)).value() -
                        f(AdScalar(xv), AdScalar(yv - h)).value()) /
                       (2 * h);
    EXPECT_NEAR(r.partial(0), fdx, 1e-6 * std::max(1.0, std::abs(fdx)));
    EXPECT_NEAR(r.partial(1), fdy, 1e-6 * std::max(1.0, std::abs(fdy)));
  }
}

TEST(AdScalar, WrapAngleShiftsValueOnly) {
  const AdScalar x = AdScalar::variable(3.0 * M_PI / 2.0, 0, 1);
  const AdScalar w = wrap_angle(x);
  EXPECT_NEAR(w.value(), -M_PI / 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(w.partial(0), 1.0);
}

TEST(Dual4, MatchesAdScalarOnCompositeExpression) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.3, 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double values[4] = {u(rng), u(rng), u(rng), u(rng)};
    Dual4 dx[4];
    AdScalar ax[4];
    for (int i = 0; i < 4; ++i) {
      dx[i] = Dual4::variable(values[i], i);
      ax[i] = AdScalar::variable(values[i], i, 4);
    }
    const Dual4 d =
        sqrt(dx[0] * dx[0] + dx[1] * dx[1]) * sin(dx[3]) / dx[2] - cos(dx[3]);
    const AdScalar a =
        sqrt(ax[0] * ax[0] + ax[1] * ax[1]) * sin(ax[3]) / ax[2] - cos(ax[3]);
    EXPECT_NEAR(d.v, a.value(), 1e-14);
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(d.d[i], a.partial(i), 1e-14);
    }
  }
}

TEST(Dual4, ConstantHasZeroPartials) {
  const Dual4 c(2.0);
  for (int i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(c.d[i], 0.0);
  }
}

}  // namespace
}  // namespace explore::ad
