#pragma once

// Batch maps over classes, schedules and grids. Each kernel exists twice with
// identical signatures: `serial` is the reference, `omp` splits the index range
// across OpenMP threads. Every output slot is written from its own index (and,
// for sampling, its own random stream), so both give bitwise-identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "dyck/families.hpp"

namespace dyck::kernels {

enum class SampleKind { Nondegenerate, Simple, Double };

struct AtlasSample {
  std::uint64_t id = 0;
  SampleKind kind = SampleKind::Nondegenerate;
  Orientation orientation = Orientation::Zero;
  ShapeClass cls;
  SpherePoint sphere;
  TorusPoint torus;
  SphereLoci loci;
};

/// One point of a level curve r/R = level on the angle simplex. branch is 0 for
/// the smaller beta root and 1 for the larger.
struct LevelSample {
  double level = 0.0;
  int branch = 0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double value = 0.0; // level_value recomputed at (alpha, beta, gamma)
};

std::string to_string(SampleKind k);

/// Positions alpha_i = pi (i + 1/2) / grid of the level-curve sweep.
double level_alpha(std::size_t i, std::size_t grid);

namespace serial {
std::vector<SpherePoint> sphere_batch(std::span<const ShapeClass> classes);
std::vector<TorusPoint> torus_batch(std::span<const ShapeClass> classes);
std::vector<ShapeClass> eval_schedule(const Family& f, std::span<const double> ts);
std::vector<AtlasSample> sample_atlas(std::size_t n, std::uint64_t seed, double tol);
std::vector<LevelSample> level_curves(std::span<const double> levels, std::size_t grid);
} // namespace serial

namespace omp {
std::vector<SpherePoint> sphere_batch(std::span<const ShapeClass> classes);
std::vector<TorusPoint> torus_batch(std::span<const ShapeClass> classes);
std::vector<ShapeClass> eval_schedule(const Family& f, std::span<const double> ts);
std::vector<AtlasSample> sample_atlas(std::size_t n, std::uint64_t seed, double tol);
std::vector<LevelSample> level_curves(std::span<const double> levels, std::size_t grid);
} // namespace omp

} // namespace dyck::kernels
