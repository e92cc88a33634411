#pragma once

#include <array>
#include <vector>

#include "dyck/triangle.hpp"

namespace dyck {

/// [a, b, c] in P(X): a nonzero complex triple with a + b + c = 0, up to a
/// nonzero complex scalar.
class ProjTripleC {
public:
  /// [1, 0, -1]
  ProjTripleC() : v_{1.0, 0.0, -1.0} {}
  /// Divides by the largest-modulus coordinate (ties go to a, then b), then
  /// recomputes one coordinate so the sum is exactly zero.
  ProjTripleC(cplx a, cplx b, cplx c);
  explicit ProjTripleC(const SideTriple& s) : ProjTripleC(s.a(), s.b(), s.c()) {}

  [[nodiscard]] const std::array<cplx, 3>& coords() const noexcept { return v_; }
  [[nodiscard]] cplx operator[](int i) const noexcept { return v_[i]; }
  /// Index of the coordinate normalized to 1.
  [[nodiscard]] int pivot() const noexcept { return pivot_; }
  [[nodiscard]] bool is_zero(int i, double tol = kDefaultTol) const noexcept;

private:
  std::array<cplx, 3> v_{};
  int pivot_ = 0;
};

/// Coordinate-wise agreement after normalizing both by the first one's pivot.
bool proj_equal(const ProjTripleC& x, const ProjTripleC& y, double tol = kDefaultTol);

/// sqrt(1 - |<x,y>|^2 / (|x|^2 |y|^2)), a metric on P^2(C) with values in [0, 1].
double proj_distance(const ProjTripleC& x, const ProjTripleC& y);

using AngleTriple = std::array<AngleModPi, 3>;

/// A labeled, oriented similarity class ([a, b, c]; (alpha, beta, gamma)).
class ShapeClass {
public:
  /// ([1, 0, -1]; (0, 0, 0))
  ShapeClass() = default;
  /// Throws DomainError unless alpha + beta + gamma = 0 mod pi within 1e-9.
  ShapeClass(const ProjTripleC& sides, const AngleTriple& angles);

  [[nodiscard]] const ProjTripleC& sides() const noexcept { return sides_; }
  [[nodiscard]] const AngleTriple& angles() const noexcept { return angles_; }

private:
  ProjTripleC sides_;
  AngleTriple angles_{};
};

/// True when the angles agree with the side arguments wherever those determine them.
bool consistent(const ShapeClass& c, double tol = kDefaultTol);

/// ([a, b, c]; [xi_a, xi_b, xi_c]) with xi modulo a common additive shift.
/// Stored in the gauge where xi of the pivot side is 0.
class BlowupCoord {
public:
  BlowupCoord(const ProjTripleC& sides, const AngleTriple& xi);

  [[nodiscard]] const ProjTripleC& sides() const noexcept { return sides_; }
  [[nodiscard]] const AngleTriple& xi() const noexcept { return xi_; }

private:
  ProjTripleC sides_;
  AngleTriple xi_;
};

bool blowup_equal(const BlowupCoord& x, const BlowupCoord& y, double tol = kDefaultTol);

ShapeClass class_of(const TriangleVariable& T);
bool class_equal(const ShapeClass& x, const ShapeClass& y, double tol = kDefaultTol);
/// Projective side distance plus the largest angle distance.
double class_distance(const ShapeClass& x, const ShapeClass& y);

BlowupCoord phi(const ShapeClass& c);
ShapeClass psi(const BlowupCoord& b);

/// A triangle (basepoint 0) whose class is c.
TriangleVariable lift(const ShapeClass& c);

ShapeClass act_class(const GroupElement& g, const ShapeClass& c);
std::vector<ShapeClass> orbit(const ShapeClass& c, double tol = kDefaultTol);
ShapeClass canonical_rep(const ShapeClass& c, double tol = kDefaultTol);

} // namespace dyck
