#pragma once

// Independent reference computations for the tests. None of these call the
// library routine they are used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "dyck/shape.hpp"

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

/// atan2 reduced into [0, pi).
inline double rho(double x, double y) {
  double t = std::atan2(y, x);
  if (t < 0)
    t += pi;
  if (t >= pi)
    t -= pi;
  return t;
}

/// |a - b| on R/pi.
inline double mod_pi_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), pi);
  return std::min(d, pi - d);
}

struct Quat {
  double w, x, y, z;
};

inline Quat mul(const Quat& p, const Quat& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

/// q^{-1} i q for q = u + v j, read off as (i, j, k) coefficients.
inline std::array<double, 3> hopf(cplx u, cplx v) {
  const Quat q{u.real(), u.imag(), v.real(), v.imag()};
  const double n = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  const Quat qinv{q.w / n, -q.x / n, -q.y / n, -q.z / n};
  const Quat r = mul(mul(qinv, Quat{0, 1, 0, 0}), q);
  return {r.x, r.y, r.z};
}

/// Sphere image of sides through the chart change [a + k b, k a + b], k = 2 - sqrt 3.
inline std::array<double, 3> sphere_of_sides(cplx a, cplx b) {
  const double k = 2 - std::sqrt(3.0);
  return hopf(a + k * b, k * a + b);
}

inline double cross(cplx p, cplx q) { return p.real() * q.imag() - p.imag() * q.real(); }
inline double dot(cplx p, cplx q) { return p.real() * q.real() + p.imag() * q.imag(); }

/// Signed vertex angles at A, B, C: the turn from one edge to the other,
/// measured with atan2(cross, dot), reduced mod pi.
inline std::array<double, 3> vertex_angles(cplx A, cplx B, cplx C) {
  auto at = [](cplx P, cplx Q, cplx R) {
    const cplx u = Q - P, w = R - P;
    return rho(dot(u, w), cross(u, w));
  };
  return {at(A, B, C), at(B, C, A), at(C, A, B)};
}

/// Geometric (unsigned) angles of a nondegenerate triangle.
inline std::array<double, 3> unsigned_angles(cplx A, cplx B, cplx C) {
  auto at = [](cplx P, cplx Q, cplx R) {
    const cplx u = Q - P, w = R - P;
    return std::atan2(std::abs(cross(u, w)), dot(u, w));
  };
  return {at(A, B, C), at(B, C, A), at(C, A, B)};
}

/// Law of sines and the half-angle tangent: R = |BC| / (2 sin A),
/// r = (s - |BC|) tan(A / 2).
struct Radii {
  double r, R, d;
};

inline Radii radii(cplx A, cplx B, cplx C) {
  const auto ang = unsigned_angles(A, B, C);
  const double la = std::abs(C - B), lb = std::abs(A - C), lc = std::abs(B - A);
  const double s = (la + lb + lc) / 2;
  const double R = la / (2 * std::sin(ang[0]));
  const double r = (s - la) * std::tan(ang[0] / 2);
  // Incenter weighted by the sines of the angles; circumcenter from the
  // perpendicular bisectors of AB and AC by Cramer's rule.
  const double w0 = std::sin(ang[0]), w1 = std::sin(ang[1]), w2 = std::sin(ang[2]);
  const cplx I = (w0 * A + w1 * B + w2 * C) / (w0 + w1 + w2);
  const cplx p = B - A, q = C - A;
  const double det = 2 * (p.real() * q.imag() - p.imag() * q.real());
  const double pp = std::norm(p), qq = std::norm(q);
  const cplx O = A + cplx{(pp * q.imag() - qq * p.imag()) / det, (qq * p.real() - pp * q.real()) / det};
  return {r, R, std::abs(I - O)};
}

/// D6 acting directly on a class: slot i goes to perm[i]; odd permutations and
/// the flip each negate the angles; the flip conjugates the sides.
inline dyck::ShapeClass act(const dyck::GroupElement& g, const dyck::ShapeClass& c) {
  const int inversions = (g.perm[0] > g.perm[1]) + (g.perm[0] > g.perm[2]) + (g.perm[1] > g.perm[2]);
  const int sign = (inversions % 2 == 0 ? 1 : -1) * g.flip;
  std::array<cplx, 3> s{};
  std::array<dyck::AngleModPi, 3> a{};
  for (int i = 0; i < 3; ++i) {
    const cplx v = c.sides()[i];
    s[g.perm[i]] = g.flip > 0 ? v : std::conj(v);
    a[g.perm[i]] = sign > 0 ? c.angles()[i] : -c.angles()[i];
  }
  return dyck::ShapeClass{dyck::ProjTripleC{s[0], s[1], s[2]}, a};
}

/// Real triples compared projectively: max-abs normalization, either sign.
inline double real_proj_gap(std::array<double, 3> x, std::array<double, 3> y) {
  auto norm = [](std::array<double, 3>& v) {
    const double m = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    for (double& t : v)
      t /= m;
  };
  norm(x);
  norm(y);
  double plus = 0, minus = 0;
  for (int i = 0; i < 3; ++i) {
    plus = std::max(plus, std::abs(x[i] - y[i]));
    minus = std::max(minus, std::abs(x[i] + y[i]));
  }
  return std::min(plus, minus);
}

/// Complex triples compared projectively: |x ^ y| / (|x| |y|) computed from
/// the 2x2 minors.
inline double complex_proj_gap(const std::array<cplx, 3>& x, const std::array<cplx, 3>& y) {
  double num = 0, nx = 0, ny = 0;
  for (int i = 0; i < 3; ++i) {
    nx += std::norm(x[i]);
    ny += std::norm(y[i]);
    for (int j = i + 1; j < 3; ++j)
      num += std::norm(x[i] * y[j] - x[j] * y[i]);
  }
  return std::sqrt(num / (nx * ny));
}

} // namespace oracle
