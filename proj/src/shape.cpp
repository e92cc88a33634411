#include "dyck/shape.hpp"

#include <algorithm>

#include "dyck/projections.hpp"

namespace dyck {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::array<AngleModPi, 3> side_args(const ProjTripleC& s) {
  std::array<AngleModPi, 3> xi;
  for (int i = 0; i < 3; ++i)
    xi[i] = reduce_mod_pi(std::arg(s[i]));
  return xi;
}

} // namespace

ProjTripleC::ProjTripleC(cplx a, cplx b, cplx c) : v_{a, b, c} {
  if (!finite(a) || !finite(b) || !finite(c))
    throw DomainError("projective triple has a non-finite entry");
  std::array<double, 3> m{std::abs(a), std::abs(b), std::abs(c)};
  const double mmax = std::max({m[0], m[1], m[2]});
  if (mmax == 0.0)
    throw DomainError("projective triple is the zero vector");
  if (std::abs(a + b + c) > 1e-9 * mmax)
    throw DomainError("projective triple violates a+b+c=0");

  pivot_ = 0;
  while (m[pivot_] < mmax * (1.0 - 1e-12))
    ++pivot_;
  const cplx p = v_[pivot_];
  for (auto& z : v_)
    z /= p;
  v_[pivot_] = 1.0;

  // Restore exact closure through the larger non-pivot coordinate (modulus at
  // least 1/2), so the relative error of the small one is untouched.
  int k0 = (pivot_ + 1) % 3, k1 = (pivot_ + 2) % 3;
  if (std::abs(v_[k0]) < std::abs(v_[k1]))
    std::swap(k0, k1);
  v_[k0] = -v_[pivot_] - v_[k1];
}

bool ProjTripleC::is_zero(int i, double tol) const noexcept { return std::abs(v_[i]) <= tol; }

bool proj_equal(const ProjTripleC& x, const ProjTripleC& y, double tol) {
  const int p = x.pivot();
  if (y[p] == cplx{})
    return false;
  for (int i = 0; i < 3; ++i)
    if (std::abs(x[i] - y[i] / y[p]) > tol)
      return false;
  return true;
}

double proj_distance(const ProjTripleC& x, const ProjTripleC& y) {
  // Lagrange identity: |x ^ y| / (|x| |y|) avoids the cancellation in 1 - cos^2.
  double wedge = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      wedge += std::norm(x[i] * y[j] - x[j] * y[i]);
  double nx = 0.0, ny = 0.0;
  for (int i = 0; i < 3; ++i) {
    nx += std::norm(x[i]);
    ny += std::norm(y[i]);
  }
  return std::min(1.0, std::sqrt(wedge / (nx * ny)));
}

ShapeClass::ShapeClass(const ProjTripleC& sides, const AngleTriple& angles)
    : sides_(sides), angles_(angles) {
  const double s = angles[0].value() + angles[1].value() + angles[2].value();
  if (angle_dist(reduce_mod_pi(s), AngleModPi{}) > 1e-9)
    throw DomainError("angles do not sum to 0 mod pi");
}

bool consistent(const ShapeClass& c, double tol) {
  const auto& s = c.sides();
  const auto xi = side_args(s);
  int zero = -1;
  for (int i = 0; i < 3; ++i)
    if (s.is_zero(i, tol))
      zero = i;
  if (zero < 0) {
    const auto expect = interior_angles(xi);
    for (int i = 0; i < 3; ++i)
      if (angle_dist(expect[i], c.angles()[i]) > tol)
        return false;
    return true;
  }
  const int j = (zero + 1) % 3, k = (zero + 2) % 3;
  return angle_dist(c.angles()[zero], xi[j] - xi[k]) <= tol;
}

BlowupCoord::BlowupCoord(const ProjTripleC& sides, const AngleTriple& xi) : sides_(sides) {
  const AngleModPi shift = xi[sides.pivot()];
  for (int i = 0; i < 3; ++i)
    xi_[i] = xi[i] - shift;
}

bool blowup_equal(const BlowupCoord& x, const BlowupCoord& y, double tol) {
  if (!proj_equal(x.sides(), y.sides(), tol))
    return false;
  const auto dx = interior_angles(x.xi()), dy = interior_angles(y.xi());
  for (int i = 0; i < 3; ++i)
    if (angle_dist(dx[i], dy[i]) > tol)
      return false;
  return true;
}

ShapeClass class_of(const TriangleVariable& T) {
  const auto& d = T.directions;
  return ShapeClass{ProjTripleC{d.pair(0), d.pair(1), d.pair(2)}, interior_angles(T)};
}

bool class_equal(const ShapeClass& x, const ShapeClass& y, double tol) {
  if (!proj_equal(x.sides(), y.sides(), tol))
    return false;
  for (int i = 0; i < 3; ++i)
    if (angle_dist(x.angles()[i], y.angles()[i]) > tol)
      return false;
  return true;
}

double class_distance(const ShapeClass& x, const ShapeClass& y) {
  double a = 0.0;
  for (int i = 0; i < 3; ++i)
    a = std::max(a, angle_dist(x.angles()[i], y.angles()[i]));
  return proj_distance(x.sides(), y.sides()) + a;
}

BlowupCoord phi(const ShapeClass& c) {
  const auto& [alpha, beta, gamma] = c.angles();
  return BlowupCoord{c.sides(), {AngleModPi{}, -gamma, beta}};
}

ShapeClass psi(const BlowupCoord& b) { return ShapeClass{b.sides(), interior_angles(b.xi())}; }

TriangleVariable lift(const ShapeClass& c) {
  std::array<cplx, 3> s = c.sides().coords();
  int zero = -1;
  for (int i = 0; i < 3; ++i)
    if (c.sides().is_zero(i))
      zero = i;
  if (zero >= 0) {
    // Snap the negligible side; the remaining two become exact opposites.
    const int p = c.sides().pivot();
    s[zero] = 0.0;
    s[3 - zero - p] = -s[p];
  }
  TriangleVariable T;
  T.sides.v = s;
  T.directions = DirectionTriple::of_sides(T.sides);
  for (int i = 0; i < 3; ++i)
    if (i != zero)
      T.arguments[i] = reduce_mod_pi(std::arg(s[i]));
  if (zero >= 0) {
    // xi_k = xi_{k+1} + angle_{k+2}, read off the cross-product relation.
    const int j = (zero + 1) % 3, k = (zero + 2) % 3;
    T.arguments[zero] = *T.arguments[j] + c.angles()[k];
  }
  return T;
}

ShapeClass act_class(const GroupElement& g, const ShapeClass& c) {
  return class_of(act(g, lift(c)));
}

std::vector<ShapeClass> orbit(const ShapeClass& c, double tol) {
  std::vector<ShapeClass> out;
  for (const auto& g : GroupElement::all()) {
    ShapeClass img = act_class(g, c);
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const ShapeClass& e) { return class_equal(e, img, tol); });
    if (!seen)
      out.push_back(img);
  }
  return out;
}

namespace {

std::vector<double> rep_key(const ShapeClass& c, double tol) {
  std::array<double, 3> a;
  for (int i = 0; i < 3; ++i) {
    const double v = c.angles()[i].value();
    a[i] = v > kPi - tol ? 0.0 : v;
  }
  std::vector<double> key(a.begin(), a.end());
  std::sort(key.begin(), key.end());
  const SpherePoint s = to_sphere(c.sides());
  key.insert(key.end(), {s.x, s.y, s.z});
  key.insert(key.end(), a.begin(), a.end());
  return key;
}

bool key_less(const std::vector<double>& x, const std::vector<double>& y, double tol) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i] - tol)
      return true;
    if (x[i] > y[i] + tol)
      return false;
  }
  return false;
}

} // namespace

ShapeClass canonical_rep(const ShapeClass& c, double tol) {
  const auto elems = orbit(c, tol);
  std::size_t best = 0;
  auto best_key = rep_key(elems[0], tol);
  for (std::size_t i = 1; i < elems.size(); ++i) {
    auto k = rep_key(elems[i], tol);
    if (key_less(k, best_key, tol)) {
      best = i;
      best_key = std::move(k);
    }
  }
  return elems[best];
}

} // namespace dyck
