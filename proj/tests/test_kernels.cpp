#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>
#include <sstream>

#include "dyck/figures.hpp"
#include "dyck/kernels.hpp"
#include "dyck/sampling.hpp"

using namespace dyck;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const ShapeClass& x, const ShapeClass& y) {
  for (int i = 0; i < 3; ++i) {
    if (!same_bits(x.sides()[i].real(), y.sides()[i].real()) ||
        !same_bits(x.sides()[i].imag(), y.sides()[i].imag()) ||
        !same_bits(x.angles()[i].value(), y.angles()[i].value()))
      return false;
  }
  return true;
}

std::vector<ShapeClass> classes(int n) {
  std::vector<ShapeClass> out;
  for (int i = 0; i < n; ++i) {
    auto rng = sampling::rng_for(71, i);
    out.push_back(sampling::random_nondegenerate_class(rng));
  }
  return out;
}

} // namespace

TEST(Sampling, StreamsDependOnlyOnSeedAndIndex) {
  auto a = sampling::rng_for(5, 17);
  auto b = sampling::rng_for(5, 17);
  auto c = sampling::rng_for(5, 18);
  const auto x = a(), y = b(), z = c();
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
}

TEST(Sampling, GeneratorsHonorTheirContracts) {
  for (int i = 0; i < 200; ++i) {
    auto rng = sampling::rng_for(72, i);
    const auto Tp = sampling::random_triangle(rng, Orientation::Positive);
    EXPECT_EQ(orientation(Tp), Orientation::Positive);
    const auto Tn = sampling::random_triangle(rng, Orientation::Negative);
    EXPECT_EQ(orientation(Tn), Orientation::Negative);
    EXPECT_EQ(point_kind(lift(sampling::random_simple_class(rng))), PointKind::SimplePoint);
    const auto d = sampling::random_double_class(rng, i % 3);
    EXPECT_TRUE(d.sides().is_zero(i % 3));
    const auto t = sampling::random_torus_point(rng);
    EXPECT_FALSE(t.p == AngleModPi{} && t.q == AngleModPi{} && t.r == AngleModPi{});
    const auto dir = sampling::random_fiber_direction(rng);
    EXPECT_NEAR(dir[0] + dir[1] + dir[2], 0.0, 1e-15);
    const auto cfg = sampling::random_poncelet_config(rng);
    EXPECT_LE(cfg.r, cfg.R / 2);
    EXPECT_LT(std::abs(cfg.chapple_residual()), 1e-12);
  }
}

TEST(Kernels, BatchesMatchSerialBitwise) {
  const auto cs = classes(2000);
  const auto s1 = kernels::serial::sphere_batch(cs), s2 = kernels::omp::sphere_batch(cs);
  const auto t1 = kernels::serial::torus_batch(cs), t2 = kernels::omp::torus_batch(cs);
  ASSERT_EQ(s1.size(), cs.size());
  ASSERT_EQ(s2.size(), cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_TRUE(same_bits(s1[i].x, s2[i].x) && same_bits(s1[i].y, s2[i].y) && same_bits(s1[i].z, s2[i].z));
    EXPECT_TRUE(t1[i].p == t2[i].p && t1[i].q == t2[i].q && t1[i].r == t2[i].r);
    // And both agree with the scalar entry points.
    EXPECT_TRUE(same_bits(s1[i].y, to_sphere(cs[i]).y));
  }
}

TEST(Kernels, ScheduleAndAtlasMatchSerialBitwise) {
  const Family f = constant_angle_family(reduce_mod_pi(1.0));
  std::vector<double> ts;
  for (int i = 1; i <= 500; ++i)
    ts.push_back(1.0 / i);
  const auto e1 = kernels::serial::eval_schedule(f, ts), e2 = kernels::omp::eval_schedule(f, ts);
  for (std::size_t i = 0; i < ts.size(); ++i)
    EXPECT_TRUE(same_bits(e1[i], e2[i]));

  const auto a1 = kernels::serial::sample_atlas(1500, 9, kDefaultTol);
  const auto a2 = kernels::omp::sample_atlas(1500, 9, kDefaultTol);
  int kinds[3] = {0, 0, 0};
  for (std::size_t i = 0; i < a1.size(); ++i) {
    EXPECT_EQ(a1[i].id, i);
    EXPECT_EQ(a1[i].kind, a2[i].kind);
    EXPECT_EQ(a1[i].orientation, a2[i].orientation);
    EXPECT_TRUE(same_bits(a1[i].cls, a2[i].cls));
    EXPECT_EQ(a1[i].loci, a2[i].loci);
    ++kinds[static_cast<int>(a1[i].kind)];
  }
  EXPECT_GT(kinds[0], 1000);
  EXPECT_GT(kinds[1], 50);
  EXPECT_GT(kinds[2], 50);
}

TEST(Kernels, LevelCurves) {
  const std::vector<double> levels{0.1, 0.3, 0.5};
  const auto l1 = kernels::serial::level_curves(levels, 200);
  const auto l2 = kernels::omp::level_curves(levels, 200);
  ASSERT_EQ(l1.size(), l2.size());
  ASSERT_FALSE(l1.empty());
  for (std::size_t i = 0; i < l1.size(); ++i) {
    EXPECT_TRUE(same_bits(l1[i].beta, l2[i].beta));
    const auto& s = l1[i];
    EXPECT_NEAR(s.value, s.level, 1e-9);
    EXPECT_NEAR(s.alpha + s.beta + s.gamma, kPi, 1e-12);
    EXPECT_GE(s.beta, -1e-12);
    EXPECT_GE(s.gamma, -1e-12);
    const double v = level_value({reduce_mod_pi(s.alpha), reduce_mod_pi(s.beta), reduce_mod_pi(s.gamma)});
    EXPECT_NEAR(v, s.level, 1e-9);
  }
  // r/R = 1/2 only at alpha = pi/3, which this grid skips.
  EXPECT_EQ(std::count_if(l1.begin(), l1.end(), [](const auto& s) { return s.level == 0.5; }), 0);
}

TEST(Figures, DeterministicAndSerialEqualsParallel) {
  for (Figure f : {Figure::PonceletLevels, Figure::SphereAtlas, Figure::TorusAtlas}) {
    FigureOptions o;
    o.samples = 300;
    const auto a = emit_figure(f, o);
    EXPECT_EQ(a, emit_figure(f, o));
    o.parallel = false;
    EXPECT_EQ(a, emit_figure(f, o));
  }
}

TEST(Figures, Headers) {
  FigureOptions o;
  o.samples = 10;
  auto header = [&](Figure f) {
    const auto s = emit_figure(f, o);
    return s.substr(0, s.find('\n'));
  };
  EXPECT_EQ(header(Figure::PonceletLevels), "level,branch,alpha,beta,gamma,r_over_R");
  EXPECT_EQ(header(Figure::SphereAtlas), "id,kind,orientation,alpha,beta,gamma,X,Y,Z,hemisphere,hemisphere_ok,loci");
  EXPECT_EQ(header(Figure::TorusAtlas), "id,kind,orientation,P,Q,R,lifted_sum,sheet");
}

TEST(Figures, AtlasRowsAreConsistent) {
  FigureOptions o;
  o.samples = 400;
  std::istringstream sphere(emit_figure(Figure::SphereAtlas, o));
  std::string line;
  std::getline(sphere, line);
  int rows = 0;
  while (std::getline(sphere, line)) {
    ++rows;
    // hemisphere_ok is the 11th column.
    std::size_t pos = 0;
    for (int k = 0; k < 10; ++k)
      pos = line.find(',', pos) + 1;
    EXPECT_EQ(line[pos], '1') << line;
  }
  EXPECT_EQ(rows, 400);

  std::istringstream torus(emit_figure(Figure::TorusAtlas, o));
  std::getline(torus, line);
  while (std::getline(torus, line)) {
    const bool positive = line.find(",Positive,") != std::string::npos;
    const bool negative = line.find(",Negative,") != std::string::npos;
    const std::string sheet = line.substr(line.rfind(',') + 1);
    if (positive)
      EXPECT_EQ(sheet, "pi");
    else if (negative)
      EXPECT_EQ(sheet, "2pi");
  }
}

TEST(Figures, OptionValidation) {
  EXPECT_FALSE(figure_from_name("nope").has_value());
  EXPECT_EQ(figure_from_name("torus-atlas"), Figure::TorusAtlas);
  FigureOptions bad;
  bad.levels = {0.7};
  EXPECT_THROW(emit_figure(Figure::PonceletLevels, bad), std::invalid_argument);
  bad = {};
  bad.grid = 0;
  EXPECT_THROW(emit_figure(Figure::PonceletLevels, bad), std::invalid_argument);
}
