#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dyck/angles.hpp"

namespace dyck {

using cplx = std::complex<double>;

/// Side-vectors (a, b, c) with a + b + c = 0.
struct SideTriple {
  std::array<cplx, 3> v{};

  SideTriple() = default;
  /// Checks closure within tol (relative to the largest side), then sets c := -a - b.
  SideTriple(cplx a, cplx b, cplx c, double tol = kDefaultTol);

  [[nodiscard]] cplx a() const noexcept { return v[0]; }
  [[nodiscard]] cplx b() const noexcept { return v[1]; }
  [[nodiscard]] cplx c() const noexcept { return v[2]; }
  [[nodiscard]] cplx operator[](int i) const noexcept { return v[i]; }
  [[nodiscard]] bool all_zero() const noexcept;
  [[nodiscard]] double scale() const noexcept; // max modulus

  bool operator==(const SideTriple&) const = default;
};

/// [a1, a2, b1, b2, c1, c2] in P^5(R), scaled so the max-abs coordinate is 1 and
/// the first nonzero coordinate is positive. The zero-sum conditions are not
/// enforced here; validate() reports them.
class DirectionTriple {
public:
  explicit DirectionTriple(const std::array<double, 6>& d);
  static DirectionTriple of_sides(const SideTriple& s);

  [[nodiscard]] const std::array<double, 6>& coords() const noexcept { return d_; }
  [[nodiscard]] cplx pair(int slot) const noexcept { return {d_[2 * slot], d_[2 * slot + 1]}; }
  [[nodiscard]] bool pair_zero(int slot, double tol) const noexcept;

  bool operator==(const DirectionTriple&) const = default;

private:
  std::array<double, 6> d_{};
};

/// (xi_a, xi_b, xi_c). A slot is empty only where the direction pair is zero and
/// no free argument was chosen.
using ArgumentTriple = std::array<std::optional<AngleModPi>, 3>;

enum class DegeneracyType {
  Nondegenerate,
  Simple,
  Double,
  Triple,
  TripledSimple,
  DoubledSimple,
  TripledDouble,
  TripledDoubledSimple,
};

enum class Orientation { Positive, Negative, Zero };

/// Coarse point kind: collinear distinct vertices, one doubled vertex, or one point.
enum class PointKind { Nondegenerate, SimplePoint, DoublePoint, TriplePoint };

std::string to_string(DegeneracyType t);
std::string to_string(Orientation o);
std::string to_string(PointKind k);

struct TriangleVariable {
  cplx basepoint{};
  SideTriple sides{};
  DirectionTriple directions{{1, 0, -1, 0, 0, 0}};
  ArgumentTriple arguments{};

  /// Vertices (A, B, C) = (B0 - c, B0, B0 + a).
  [[nodiscard]] std::array<cplx, 3> vertices() const noexcept;
};

struct VertexOptions {
  /// Required at a triple point; checked against the sides otherwise.
  std::optional<DirectionTriple> directions;
  /// Free arguments for slots whose direction pair is zero.
  ArgumentTriple free_args{};
  /// Fill unset free arguments with the argument of the line carrying the other
  /// sides (the tangent-limit picture of an inscribed family).
  bool inscribed_default = false;
  double tol = kDefaultTol;
};

/// a = C - B, b = A - C, c = B - A, B0 = B.
TriangleVariable from_vertices(cplx A, cplx B, cplx C, const VertexOptions& opts = {});

DegeneracyType classify(const TriangleVariable& T, double tol = kDefaultTol);
PointKind point_kind(const TriangleVariable& T, double tol = kDefaultTol);
Orientation orientation(const TriangleVariable& T, double tol = kDefaultTol);

/// (xi_b - xi_c, xi_c - xi_a, xi_a - xi_b). Throws DomainError if a needed
/// argument is unset.
std::array<AngleModPi, 3> interior_angles(const TriangleVariable& T);
std::array<AngleModPi, 3> interior_angles(const std::array<AngleModPi, 3>& xi);

/// An element of S3 x Z2. perm[i] is the slot that slot i moves to.
struct GroupElement {
  std::array<int, 3> perm{0, 1, 2};
  int flip = 1;

  static GroupElement identity() { return {}; }
  /// All 12 elements in a fixed order, identity first.
  static const std::array<GroupElement, 12>& all();

  [[nodiscard]] int parity() const noexcept; // +1 even, -1 odd
  [[nodiscard]] GroupElement inverse() const noexcept;
  /// (g * h) acts as g after h.
  GroupElement operator*(const GroupElement& h) const noexcept;
  bool operator==(const GroupElement&) const = default;
};

/// Relabels the slots by g.perm; the flip reflects the side-vectors (z -> conj z),
/// reversing orientation. The basepoint is fixed.
TriangleVariable act(const GroupElement& g, const TriangleVariable& T);

/// Field-wise comparison: sides within tol, directions within tol, arguments
/// by angle_dist (unset matches unset only).
bool same_variable(const TriangleVariable& x, const TriangleVariable& y, double tol = kDefaultTol);

std::vector<std::string> validate(const TriangleVariable& T, double tol = kDefaultTol);

} // namespace dyck
