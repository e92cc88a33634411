#pragma once

#include <cstdint>
#include <random>

#include "dyck/families.hpp"

namespace dyck::sampling {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a batch, so a sweep gives the same
/// values whatever order (or thread) evaluates it.
Rng rng_for(std::uint64_t seed, std::uint64_t index);

double uniform(Rng& rng, double lo, double hi);
/// Uniform on [lo, hi] with a random sign.
double signed_uniform(Rng& rng, double lo, double hi);

/// Vertices uniform in [-1, 1]^2, rejected until every interior angle is at
/// least 0.05 rad.
TriangleVariable random_triangle(Rng& rng);
TriangleVariable random_triangle(Rng& rng, Orientation o);

ShapeClass random_nondegenerate_class(Rng& rng);
/// Collinear, pairwise distinct vertices.
ShapeClass random_simple_class(Rng& rng);
/// Side `slot` zero, free argument uniform in [0, pi).
ShapeClass random_double_class(Rng& rng, int slot);
/// Proper isosceles: the two sides other than `odd_slot` have equal length.
ShapeClass random_isosceles_class(Rng& rng, int odd_slot);
/// Right angle opposite side `hyp_slot`.
ShapeClass random_right_class(Rng& rng, int hyp_slot);
/// Obtuse angle at vertex `vertex` (0 = A, 1 = B, 2 = C).
ShapeClass random_obtuse_class(Rng& rng, int vertex);

TorusPoint random_torus_point(Rng& rng);
/// (alpha0, beta0, -alpha0 - beta0) with max-abs entry at least 0.1.
std::array<double, 3> random_fiber_direction(Rng& rng);
/// R in [0.5, 2], r/R in [0.1, 0.5].
PonceletConfig random_poncelet_config(Rng& rng);

} // namespace dyck::sampling
