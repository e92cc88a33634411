#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "dyck/angles.hpp"
#include "oracles.hpp"

using namespace dyck;

TEST(ReduceModPi, Examples) {
  EXPECT_EQ(reduce_mod_pi(kPi).value(), 0.0);
  EXPECT_NEAR(reduce_mod_pi(-kPi / 4).value(), 3 * kPi / 4, 1e-15);
  EXPECT_NEAR(reduce_mod_pi(2 * kPi / 3).value(), 2 * kPi / 3, 1e-15);
  EXPECT_EQ(reduce_mod_pi(0.0).value(), 0.0);
  EXPECT_FALSE(std::signbit(reduce_mod_pi(-0.0).value()));
}

TEST(ReduceModPi, RejectsNonFinite) {
  EXPECT_THROW(reduce_mod_pi(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(reduce_mod_pi(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(ReduceModPi, RangeAndPeriodOnRandomInputs) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> x(-1e3, 1e3);
  std::uniform_int_distribution<int> k(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    const double v = x(rng);
    const double r = reduce_mod_pi(v).value();
    ASSERT_GE(r, 0.0);
    ASSERT_LT(r, kPi);
    EXPECT_LT(angle_dist(reduce_mod_pi(v + k(rng) * kPi), reduce_mod_pi(v)), 1e-10);
    EXPECT_LT(oracle::mod_pi_gap(r, v), 1e-10);
  }
}

TEST(AngleModPi, ArithmeticIsClosed) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> x(0, kPi);
  for (int i = 0; i < 500; ++i) {
    const auto a = reduce_mod_pi(x(rng)), b = reduce_mod_pi(x(rng)), c = reduce_mod_pi(x(rng));
    for (auto r : {a + b, a - b, -a}) {
      EXPECT_GE(r.value(), 0.0);
      EXPECT_LT(r.value(), kPi);
    }
    EXPECT_LT(angle_dist((a + b) + c, a + (b + c)), 1e-12);
    EXPECT_LT(angle_dist(a - a, AngleModPi{}), 1e-15);
    EXPECT_LT(angle_dist(a + (-a), AngleModPi{}), 1e-12);
  }
}

TEST(AngleDist, Examples) {
  EXPECT_EQ(angle_dist(AngleModPi{}, AngleModPi{}), 0.0);
  EXPECT_NEAR(angle_dist(reduce_mod_pi(0.01), reduce_mod_pi(kPi - 0.01)), 0.02, 1e-15);
  EXPECT_NEAR(angle_dist(reduce_mod_pi(kPi / 4), reduce_mod_pi(3 * kPi / 4)), kPi / 2, 1e-15);
}

TEST(AngleDist, IsAMetric) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const auto a = reduce_mod_pi(x(rng)), b = reduce_mod_pi(x(rng)), c = reduce_mod_pi(x(rng));
    EXPECT_EQ(angle_dist(a, b), angle_dist(b, a));
    EXPECT_LE(angle_dist(a, c), angle_dist(a, b) + angle_dist(b, c) + 1e-15);
    EXPECT_GE(angle_dist(a, b), 0.0);
    EXPECT_LE(angle_dist(a, b), kPi / 2);
  }
}

TEST(UnwrapNear, PicksClosestRepresentative) {
  EXPECT_NEAR(unwrap_near(reduce_mod_pi(0.1), 10 * kPi), 10 * kPi + 0.1, 1e-12);
  EXPECT_NEAR(unwrap_near(reduce_mod_pi(kPi - 0.1), 0.0), -0.1, 1e-12);
  EXPECT_NEAR(reduce_mod_pi(-0.3).centered(), -0.3, 1e-15);
  EXPECT_NEAR(reduce_mod_pi(kPi / 2).centered(), kPi / 2, 1e-15);
}

TEST(ProjPoint1R, Canonicalization) {
  const ProjPoint1R p(-2, 4);
  EXPECT_EQ(p.x(), 0.5);
  EXPECT_EQ(p.y(), -1.0);
  EXPECT_EQ(ProjPoint1R(0, -3), ProjPoint1R(0, 1));
  EXPECT_EQ(ProjPoint1R(3, 3), ProjPoint1R(-1, -1));
  EXPECT_THROW(ProjPoint1R(0, 0), DomainError);
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(ProjPoint1R(1, 0)).value(), 0.0);
  EXPECT_NEAR(rho(ProjPoint1R(0, 1)).value(), kPi / 2, 1e-15);
  EXPECT_NEAR(rho(ProjPoint1R(-1, -1)).value(), oracle::rho(-1, -1), 1e-15);
  EXPECT_NEAR(rho(ProjPoint1R(-1, -1)).value(), kPi / 4, 1e-15);
}

TEST(Rho, ScaleInvariantAndMatchesAtan2) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> x(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const double a = x(rng), b = x(rng), lambda = x(rng);
    if (lambda == 0)
      continue;
    const auto r = rho(ProjPoint1R(a, b));
    EXPECT_LT(angle_dist(r, rho(ProjPoint1R(lambda * a, lambda * b))), 1e-12);
    EXPECT_LT(oracle::mod_pi_gap(r.value(), oracle::rho(a, b)), 1e-12);
  }
}

TEST(Rho, LiftRoundTrips) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(0, kPi);
  std::uniform_real_distribution<double> c(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const auto xi = reduce_mod_pi(x(rng));
    EXPECT_LT(angle_dist(rho(lift(xi)), xi), 1e-12);
    const ProjPoint1R p(c(rng), c(rng));
    const ProjPoint1R q = lift(rho(p));
    EXPECT_NEAR(q.x(), p.x(), 1e-12);
    EXPECT_NEAR(q.y(), p.y(), 1e-12);
  }
}

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(1.0), "1");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_real(x)), x);
  EXPECT_EQ(std::stod(format_real(kPi)), kPi);
}
