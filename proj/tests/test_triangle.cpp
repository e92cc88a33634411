#include <gtest/gtest.h>

#include "dyck/families.hpp"
#include "dyck/sampling.hpp"
#include "oracles.hpp"

using namespace dyck;

namespace {

TriangleVariable triple_point(std::array<double, 6> d, ArgumentTriple free_args = {}) {
  VertexOptions o;
  o.directions = DirectionTriple{d};
  o.free_args = free_args;
  return from_vertices(0.0, 0.0, 0.0, o);
}

std::vector<TriangleVariable> random_triangles(int n, std::uint64_t seed) {
  std::vector<TriangleVariable> out;
  for (int i = 0; i < n; ++i) {
    auto rng = sampling::rng_for(seed, i);
    out.push_back(sampling::random_triangle(rng));
  }
  return out;
}

int sign(Orientation o) { return o == Orientation::Positive ? 1 : o == Orientation::Negative ? -1 : 0; }

} // namespace

TEST(FromVertices, Equilateral) {
  const cplx A = std::polar(1.0, kPi / 3);
  const auto T = from_vertices(A, 0.0, 1.0);
  EXPECT_LT(std::abs(T.sides.a() - 1.0), 1e-15);
  EXPECT_LT(std::abs(T.sides.b() - std::polar(1.0, 2 * kPi / 3)), 1e-15);
  EXPECT_LT(std::abs(T.sides.c() + A), 1e-15);
  ASSERT_TRUE(T.arguments[0] && T.arguments[1] && T.arguments[2]);
  EXPECT_NEAR(T.arguments[0]->value(), 0.0, 1e-15);
  EXPECT_NEAR(T.arguments[1]->value(), oracle::rho(T.sides.b().real(), T.sides.b().imag()), 1e-15);
  EXPECT_NEAR(T.arguments[1]->value(), 2 * kPi / 3, 1e-15);
  EXPECT_NEAR(T.arguments[2]->value(), kPi / 3, 1e-15);
  EXPECT_EQ(classify(T), DegeneracyType::Nondegenerate);
  EXPECT_TRUE(validate(T).empty());
}

TEST(FromVertices, DoublePointLeavesFreeArgumentUnset) {
  const auto T = from_vertices(0.0, 0.0, 1.0);
  EXPECT_EQ(T.sides.a(), cplx(1.0));
  EXPECT_EQ(T.sides.b(), cplx(-1.0));
  EXPECT_EQ(T.sides.c(), cplx(0.0));
  EXPECT_FALSE(T.arguments[2].has_value());
  EXPECT_EQ(point_kind(T), PointKind::DoublePoint);
  EXPECT_THROW(interior_angles(T), DomainError);

  VertexOptions o;
  o.free_args[2] = reduce_mod_pi(kPi / 2);
  const auto U = from_vertices(0.0, 0.0, 1.0, o);
  EXPECT_EQ(classify(U), DegeneracyType::Double);
  EXPECT_TRUE(validate(U).empty());

  VertexOptions along;
  along.inscribed_default = true;
  const auto V = from_vertices(0.0, 0.0, 1.0, along);
  ASSERT_TRUE(V.arguments[2].has_value());
  EXPECT_EQ(V.arguments[2]->value(), 0.0);
  EXPECT_EQ(classify(V), DegeneracyType::DoubledSimple);
}

TEST(FromVertices, SimplePoint) {
  const auto T = from_vertices(0.0, 1.0, 2.0);
  EXPECT_EQ(T.sides.a(), cplx(1.0));
  EXPECT_EQ(T.sides.b(), cplx(-2.0));
  EXPECT_EQ(T.sides.c(), cplx(1.0));
  EXPECT_EQ(classify(T), DegeneracyType::Simple);
  EXPECT_EQ(point_kind(T), PointKind::SimplePoint);
}

TEST(FromVertices, Errors) {
  try {
    (void)from_vertices(1.0, 1.0, 1.0);
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "underdetermined triple point");
  }
  VertexOptions wrong;
  wrong.directions = DirectionTriple{{0, 1, 0, -1, 0, 0}};
  EXPECT_THROW(from_vertices(0.0, 1.0, 2.0, wrong), DomainError);
  VertexOptions fixed;
  fixed.free_args[0] = reduce_mod_pi(1.0);
  EXPECT_THROW(from_vertices(0.0, 1.0, {0, 1}, fixed), DomainError);
}

TEST(FromVertices, VerticesRoundTrip) {
  const cplx A{0.3, 2.0}, B{-1.5, 0.25}, C{4.0, -1.0};
  const auto [a, b, c] = from_vertices(A, B, C).vertices();
  EXPECT_LT(std::abs(a - A), 1e-15);
  EXPECT_LT(std::abs(b - B), 1e-15);
  EXPECT_LT(std::abs(c - C), 1e-15);
}

TEST(SideTriple, ClosureIsExact) {
  const SideTriple s{{1, 2}, {-3, 0.5}, {2, -2.5}};
  EXPECT_EQ(s.a() + s.b() + s.c(), cplx(0.0));
  EXPECT_THROW(SideTriple(1.0, 1.0, 1.0), DomainError);
}

TEST(DirectionTriple, Canonical) {
  const DirectionTriple d{{0, -2, 1, 1, -1, 1}};
  EXPECT_EQ(d.coords(), (std::array<double, 6>{0, 1, -0.5, -0.5, 0.5, -0.5}));
  EXPECT_THROW(DirectionTriple({0, 0, 0, 0, 0, 0}), DomainError);
}

TEST(Classify, TriplePointStrata) {
  EXPECT_EQ(classify(triple_point({1, 0, 0, 1, -1, -1})), DegeneracyType::Triple);
  EXPECT_EQ(classify(triple_point({1, 0, -2, 0, 1, 0})), DegeneracyType::TripledSimple);
  EXPECT_EQ(classify(triple_point({1, 0, 0, 0, -1, 0}, {std::nullopt, reduce_mod_pi(kPi / 2), std::nullopt})),
            DegeneracyType::TripledDouble);
  const auto T = triple_point({1, 0, 0, 0, -1, 0});
  EXPECT_EQ(classify(T), DegeneracyType::TripledDoubledSimple);
  // Each defining equation of the stratum, evaluated directly.
  const auto& d = T.directions.coords();
  EXPECT_TRUE(T.sides.all_zero());
  EXPECT_EQ(cplx(d[0], d[1]) * cplx(d[2], d[3]) * cplx(d[4], d[5]), cplx(0.0));
  EXPECT_EQ(d[0] * d[5] - d[1] * d[4], 0.0);
  EXPECT_EQ(point_kind(T), PointKind::TriplePoint);
}

TEST(Classify, ScaleInvariant) {
  for (const auto& T : random_triangles(50, 11)) {
    const auto [A, B, C] = T.vertices();
    for (double lambda : {1e-6, -3.0, 1e6}) {
      const auto U = from_vertices(lambda * A, lambda * B, lambda * C);
      EXPECT_EQ(classify(U), classify(T));
    }
  }
  EXPECT_EQ(classify(from_vertices(0.0, 1e-7, 2e-7)), DegeneracyType::Simple);
  EXPECT_EQ(classify(from_vertices(0.0, 1e7, 2e7)), DegeneracyType::Simple);
}

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation(from_vertices(0.0, 1.0, {0, 1})), Orientation::Positive);
  EXPECT_EQ(orientation(from_vertices(0.0, {0, 1}, 1.0)), Orientation::Negative);
  EXPECT_EQ(orientation(from_vertices(0.0, 1.0, 2.0)), Orientation::Zero);
  EXPECT_EQ(orientation(triple_point({1, 0, 0, 1, -1, -1})), Orientation::Zero);
}

TEST(InteriorAngles, Examples) {
  const auto eq = interior_angles(std::array{reduce_mod_pi(0), reduce_mod_pi(2 * kPi / 3), reduce_mod_pi(kPi / 3)});
  for (const auto& a : eq)
    EXPECT_NEAR(a.value(), kPi / 3, 1e-15);
  const auto x0 = reduce_mod_pi(1.234);
  for (const auto& a : interior_angles(std::array{x0, x0, x0}))
    EXPECT_EQ(a.value(), 0.0);

  // Double point with sides (1, 0, -1) and xi_b = pi/2.
  VertexOptions o;
  o.free_args[1] = reduce_mod_pi(kPi / 2);
  const auto T = from_vertices(1.0, 0.0, 1.0, o);
  ASSERT_TRUE(T.sides.b() == cplx(0.0));
  const auto a = interior_angles(T);
  EXPECT_NEAR(a[0].value(), kPi / 2, 1e-15);
  EXPECT_NEAR(a[1].value(), 0.0, 1e-15);
  EXPECT_NEAR(a[2].value(), kPi / 2, 1e-15);
}

TEST(InteriorAngles, MatchVertexMeasurementAndSumToZero) {
  for (const auto& T : random_triangles(500, 12)) {
    const auto [A, B, C] = T.vertices();
    const auto want = oracle::vertex_angles(A, B, C);
    const auto got = interior_angles(T);
    for (int k = 0; k < 3; ++k)
      EXPECT_LT(oracle::mod_pi_gap(got[k].value(), want[k]), 1e-9);
    EXPECT_LT(angle_dist(got[0] + got[1] + got[2], AngleModPi{}), 1e-12);
  }
}

TEST(Validate, Examples) {
  for (const auto& T : random_triangles(200, 13))
    EXPECT_TRUE(validate(T).empty());

  TriangleVariable bad;
  bad.sides = SideTriple{1.0, -1.0, 0.0};
  bad.directions = DirectionTriple::of_sides(bad.sides);
  bad.arguments = {reduce_mod_pi(kPi / 2), reduce_mod_pi(0), std::nullopt};
  EXPECT_EQ(validate(bad), std::vector<std::string>{"argument ξ_a inconsistent with direction"});

  TriangleVariable open;
  open.sides = SideTriple{};
  open.directions = DirectionTriple{{1, 0, 0, 0, 0, 0}};
  open.arguments = {reduce_mod_pi(0), reduce_mod_pi(0), reduce_mod_pi(0)};
  const auto v = validate(open);
  EXPECT_NE(std::find(v.begin(), v.end(), "direction triple violates a1+b1+c1=0"), v.end());

  TriangleVariable missing = from_vertices({0, 1}, 0.0, 1.0);
  missing.arguments[1].reset();
  EXPECT_EQ(validate(missing), std::vector<std::string>{"argument ξ_b missing"});
}

TEST(GroupElement, TableIsD6) {
  const auto& G = GroupElement::all();
  EXPECT_EQ(G[0], GroupElement::identity());
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      EXPECT_FALSE(G[i] == G[j]);
  for (const auto& g : G) {
    EXPECT_EQ(g * g.inverse(), GroupElement::identity());
    for (const auto& h : G) {
      const auto gh = g * h;
      EXPECT_NE(std::find(G.begin(), G.end(), gh), G.end());
      EXPECT_EQ(gh.parity(), g.parity() * h.parity());
      for (const auto& k : G)
        EXPECT_EQ((g * h) * k, g * (h * k));
    }
  }
  // Not abelian: some pair fails to commute.
  int noncommuting = 0;
  for (const auto& g : G)
    for (const auto& h : G)
      noncommuting += !(g * h == h * g);
  EXPECT_GT(noncommuting, 0);
}

TEST(Act, IsAGroupAction) {
  const auto& G = GroupElement::all();
  for (const auto& T : random_triangles(5, 14)) {
    EXPECT_TRUE(same_variable(act(GroupElement::identity(), T), T));
    for (const auto& g : G)
      for (const auto& h : G)
        EXPECT_TRUE(same_variable(act(g * h, T), act(g, act(h, T))));
  }
  // Also at a double point carrying a free argument.
  VertexOptions o;
  o.free_args[1] = reduce_mod_pi(0.7);
  const auto D = from_vertices(1.0, 0.0, 1.0, o);
  for (const auto& g : G)
    for (const auto& h : G)
      EXPECT_TRUE(same_variable(act(g * h, D), act(g, act(h, D))));
}

TEST(Act, OrientationEquivariance) {
  for (const auto& T : random_triangles(100, 15)) {
    for (const auto& g : GroupElement::all()) {
      const auto U = act(g, T);
      EXPECT_EQ(sign(orientation(U)), sign(orientation(T)) * g.parity() * g.flip);
      EXPECT_TRUE(validate(U).empty());
      EXPECT_EQ(U.basepoint, T.basepoint);
    }
  }
}

TEST(Act, ThreeCycleFixesEquilateralClass) {
  const cplx w = std::polar(1.0, 2 * kPi / 3);
  const auto T = from_vertices(-w * w, 0.0, 1.0); // sides (1, w, w^2)
  ASSERT_LT(std::abs(T.sides.b() - w), 1e-15);
  const GroupElement cycle{{1, 2, 0}, 1};
  const auto U = act(cycle, T);
  EXPECT_LT(oracle::complex_proj_gap(U.sides.v, T.sides.v), 1e-12);
}

TEST(InscribedFamily, AnglesContinuousThroughDoublePoint) {
  const Family f = inscribed_family(-1.0, 1.0, 0.0, 1.0);
  const auto at0 = interior_angles(f.eval(0.0));
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    const auto before = f.eval(-eps), after = f.eval(eps);
    EXPECT_EQ(orientation(before), Orientation::Negative);
    EXPECT_EQ(orientation(after), Orientation::Positive);
    const auto ab = interior_angles(before), aa = interior_angles(after);
    EXPECT_LT(angle_dist(ab[0], aa[0]), 1e-9); // Thales: pi/2 on both sides
    for (int k = 0; k < 3; ++k) {
      EXPECT_LT(angle_dist(ab[k], at0[k]), 2 * eps);
      EXPECT_LT(angle_dist(aa[k], at0[k]), 2 * eps);
    }
  }
}
