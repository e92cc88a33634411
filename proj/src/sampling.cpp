#include "dyck/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyck::sampling {

namespace {

const cplx kI{0.0, 1.0};

double vertex_angle(cplx at, cplx p, cplx q) {
  const cplx u = p - at, v = q - at;
  return std::acos(std::clamp((u.real() * v.real() + u.imag() * v.imag()) /
                                  (std::abs(u) * std::abs(v)),
                              -1.0, 1.0));
}

ShapeClass class_from(cplx A, cplx B, cplx C) { return class_of(from_vertices(A, B, C)); }

// Angle uniform in [lo, pi - lo] with random sign, avoiding a window around +-avoid.
double angle_avoiding(Rng& rng, double lo, double avoid) {
  for (;;) {
    const double t = signed_uniform(rng, lo, kPi - lo);
    if (std::abs(std::abs(t) - avoid) > 0.05)
      return t;
  }
}

} // namespace

Rng rng_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double signed_uniform(Rng& rng, double lo, double hi) {
  const double x = uniform(rng, lo, hi);
  return std::bernoulli_distribution(0.5)(rng) ? x : -x;
}

TriangleVariable random_triangle(Rng& rng) {
  for (;;) {
    const cplx A{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const cplx B{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const cplx C{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const double m = std::min({vertex_angle(A, B, C), vertex_angle(B, C, A), vertex_angle(C, A, B)});
    if (m >= 0.05)
      return from_vertices(A, B, C);
  }
}

TriangleVariable random_triangle(Rng& rng, Orientation o) {
  if (o == Orientation::Zero)
    throw std::invalid_argument("random_triangle: orientation must be Positive or Negative");
  TriangleVariable T = random_triangle(rng);
  if (orientation(T) != o) {
    const auto [A, B, C] = T.vertices();
    T = from_vertices(std::conj(A), std::conj(B), std::conj(C));
  }
  return T;
}

ShapeClass random_nondegenerate_class(Rng& rng) { return class_of(random_triangle(rng)); }

ShapeClass random_simple_class(Rng& rng) {
  for (;;) {
    const double x = uniform(rng, -1, 1), y = uniform(rng, -1, 1), z = uniform(rng, -1, 1);
    if (std::min({std::abs(x - y), std::abs(y - z), std::abs(z - x)}) >= 0.05)
      return class_from(x, y, z);
  }
}

ShapeClass random_double_class(Rng& rng, int slot) {
  static const std::array<std::array<cplx, 3>, 3> sides{{
      {0.0, 1.0, -1.0}, {1.0, 0.0, -1.0}, {1.0, -1.0, 0.0},
  }};
  std::array<AngleModPi, 3> xi{};
  xi[slot] = reduce_mod_pi(uniform(rng, 0, kPi));
  const auto& s = sides.at(slot);
  return ShapeClass{ProjTripleC{s[0], s[1], s[2]}, interior_angles(xi)};
}

ShapeClass random_isosceles_class(Rng& rng, int odd_slot) {
  switch (odd_slot) {
  case 0: {
    double h;
    do
      h = uniform(rng, 0.05, 3.0);
    while (std::abs(h - std::sqrt(3.0)) < 0.05);
    return class_from(kI * (std::bernoulli_distribution(0.5)(rng) ? h : -h), -1.0, 1.0);
  }
  case 1:
    return class_from(std::polar(1.0, angle_avoiding(rng, 0.1, kPi / 3)), 0.0, 1.0);
  case 2:
    return class_from(std::polar(1.0, angle_avoiding(rng, 0.1, kPi / 3)), 1.0, 0.0);
  }
  throw std::invalid_argument("slot must be 0, 1 or 2");
}

ShapeClass random_right_class(Rng& rng, int hyp_slot) {
  switch (hyp_slot) {
  case 0:
    return class_from(std::polar(1.0, signed_uniform(rng, 0.1, kPi - 0.1)), -1.0, 1.0);
  case 1:
    return class_from(kI * signed_uniform(rng, 0.05, 5.0), 0.0, 1.0);
  case 2:
    return class_from(kI * signed_uniform(rng, 0.05, 5.0), 1.0, 0.0);
  }
  throw std::invalid_argument("slot must be 0, 1 or 2");
}

ShapeClass random_obtuse_class(Rng& rng, int vertex) {
  switch (vertex) {
  case 0: {
    // Strictly inside the circle on diameter BC, off the line BC.
    cplx A;
    do
      A = std::polar(uniform(rng, 0.0, 0.95), uniform(rng, -kPi, kPi));
    while (std::abs(A.imag()) < 0.02);
    return class_from(A, -1.0, 1.0);
  }
  case 1:
    return class_from(std::polar(uniform(rng, 0.1, 2.0), signed_uniform(rng, kPi / 2 + 0.05, kPi - 0.05)),
                      0.0, 1.0);
  case 2:
    return class_from(std::polar(uniform(rng, 0.1, 2.0), signed_uniform(rng, kPi / 2 + 0.05, kPi - 0.05)),
                      1.0, 0.0);
  }
  throw std::invalid_argument("vertex must be 0, 1 or 2");
}

TorusPoint random_torus_point(Rng& rng) {
  for (;;) {
    const AngleModPi p = reduce_mod_pi(uniform(rng, 0, kPi));
    const AngleModPi q = reduce_mod_pi(uniform(rng, 0, kPi));
    const AngleModPi r = -(p + q);
    if (std::max({angle_dist(p, {}), angle_dist(q, {}), angle_dist(r, {})}) > 1e-3)
      return TorusPoint{p, q, r};
  }
}

std::array<double, 3> random_fiber_direction(Rng& rng) {
  for (;;) {
    const double a = uniform(rng, -1, 1), b = uniform(rng, -1, 1);
    const std::array<double, 3> d{a, b, -a - b};
    if (std::max({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])}) >= 0.1)
      return d;
  }
}

PonceletConfig random_poncelet_config(Rng& rng) {
  const double R = uniform(rng, 0.5, 2.0);
  return PonceletConfig::from_radii(R * uniform(rng, 0.1, 0.5), R);
}

} // namespace dyck::sampling
