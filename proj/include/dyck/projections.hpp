#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dyck/shape.hpp"

namespace dyck {

struct SpherePoint {
  double x = 1.0, y = 0.0, z = 0.0;
};

double sphere_distance(const SpherePoint& p, const SpherePoint& q) noexcept;

struct TorusPoint {
  AngleModPi p, q, r;

  /// Throws DomainError unless p + q + r = 0 mod pi within 1e-9.
  static TorusPoint make(AngleModPi p, AngleModPi q, AngleModPi r);
  [[nodiscard]] std::array<AngleModPi, 3> angles() const noexcept { return {p, q, r}; }
};

/// sqrt of the summed squared angle distances.
double torus_distance(const TorusPoint& s, const TorusPoint& t) noexcept;

namespace landmarks {
extern const SpherePoint delta_a, delta_b, delta_c;
extern const SpherePoint equilateral_plus, equilateral_minus;
} // namespace landmarks

enum class Locus : std::uint32_t {
  DegenerateCircle = 1u << 0,
  IsoscelesA = 1u << 1,
  IsoscelesB = 1u << 2,
  IsoscelesC = 1u << 3,
  RightA = 1u << 4,
  RightB = 1u << 5,
  RightC = 1u << 6,
  EquilateralPlus = 1u << 7,
  EquilateralMinus = 1u << 8,
  DoubleA = 1u << 9,
  DoubleB = 1u << 10,
  DoubleC = 1u << 11,
};

struct SphereLoci {
  std::uint32_t bits = 0;

  [[nodiscard]] bool has(Locus l) const noexcept { return bits & static_cast<std::uint32_t>(l); }
  void set(Locus l) noexcept { bits |= static_cast<std::uint32_t>(l); }
  [[nodiscard]] std::vector<std::string> names() const;
  /// Semicolon-joined flag names, in declaration order.
  [[nodiscard]] std::string joined() const;
  bool operator==(const SphereLoci&) const = default;
};

/// Residuals of the locus equations at s: isosceles (odd side a, b, c),
/// right (hypotenuse a, b, c) and the obtuse-cap margins (positive inside the cap
/// of the obtuse vertex A, B, C).
struct LocusResiduals {
  std::array<double, 3> isosceles;
  std::array<double, 3> right;
  std::array<double, 3> obtuse_margin;
};
LocusResiduals locus_residuals(const SpherePoint& s) noexcept;

/// Hopf map C^2 - {0} -> S^2. Throws DomainError at (0, 0).
SpherePoint hopf(cplx u, cplx v);
SpherePoint to_sphere(const ProjTripleC& sides);
SpherePoint to_sphere(const ShapeClass& c);
SphereLoci classify_sphere_locus(const SpherePoint& s, double tol = kDefaultTol);

TorusPoint to_torus(const ShapeClass& c);
/// Sum of the [0, pi) representatives, with entries within tol of pi counted as 0.
/// Near pi for positive classes, near 2 pi for negative ones.
double lifted_sum(const TorusPoint& t, double tol = kDefaultTol);
/// "0", "pi" or "2pi": which sheet the lifted sum lands on.
std::string sheet_label(const TorusPoint& t, double tol = kDefaultTol);

/// Sides of the inscribed triangle with vertices (e^{2i beta}, e^{-2i alpha}, 1),
/// as raw complex values (before projectivizing).
std::array<cplx, 3> torus_inverse_sides(double alpha, double beta);
/// Throws DomainError at (0, 0, 0).
ShapeClass torus_inverse(const TorusPoint& t, double tol = kDefaultTol);

struct FiberLimit {
  std::array<double, 3> sides;  // real projective triple, max-abs 1, pivot positive
  std::vector<double> residuals; // distance between successive normalized iterates
  double correction = 0.0;       // size of the extrapolation step
};

std::vector<double> default_schedule();

/// Limit of torus_inverse(t * direction) as t -> 0 along the schedule, by
/// last-two-point Richardson extrapolation. The direction must sum to 0.
FiberLimit torus_fiber_limit(const std::array<double, 3>& direction,
                             std::span<const double> schedule, double tol = 1e-6);
FiberLimit torus_fiber_limit(const std::array<double, 3>& direction, double tol = 1e-6);

} // namespace dyck
