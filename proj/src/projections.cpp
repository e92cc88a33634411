#include "dyck/projections.hpp"

#include <algorithm>

namespace dyck {

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct LocusName {
  Locus flag;
  const char* name;
};

constexpr LocusName kLocusNames[] = {
    {Locus::DegenerateCircle, "DegenerateCircle"},
    {Locus::IsoscelesA, "IsoscelesA"},
    {Locus::IsoscelesB, "IsoscelesB"},
    {Locus::IsoscelesC, "IsoscelesC"},
    {Locus::RightA, "RightA"},
    {Locus::RightB, "RightB"},
    {Locus::RightC, "RightC"},
    {Locus::EquilateralPlus, "EquilateralPlus"},
    {Locus::EquilateralMinus, "EquilateralMinus"},
    {Locus::DoubleA, "DoubleA"},
    {Locus::DoubleB, "DoubleB"},
    {Locus::DoubleC, "DoubleC"},
};

} // namespace

namespace landmarks {
const SpherePoint delta_a{-kSqrt3 / 2, 0.0, 0.5};
const SpherePoint delta_b{kSqrt3 / 2, 0.0, 0.5};
const SpherePoint delta_c{0.0, 0.0, -1.0};
const SpherePoint equilateral_plus{0.0, -1.0, 0.0};
const SpherePoint equilateral_minus{0.0, 1.0, 0.0};
} // namespace landmarks

double sphere_distance(const SpherePoint& p, const SpherePoint& q) noexcept {
  return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

TorusPoint TorusPoint::make(AngleModPi p, AngleModPi q, AngleModPi r) {
  if (angle_dist(reduce_mod_pi(p.value() + q.value() + r.value()), AngleModPi{}) > 1e-9)
    throw DomainError("torus point must satisfy P+Q+R = 0 mod pi");
  return TorusPoint{p, q, r};
}

double torus_distance(const TorusPoint& s, const TorusPoint& t) noexcept {
  const double dp = angle_dist(s.p, t.p), dq = angle_dist(s.q, t.q), dr = angle_dist(s.r, t.r);
  return std::sqrt(dp * dp + dq * dq + dr * dr);
}

std::vector<std::string> SphereLoci::names() const {
  std::vector<std::string> out;
  for (const auto& [flag, name] : kLocusNames)
    if (has(flag))
      out.emplace_back(name);
  return out;
}

std::string SphereLoci::joined() const {
  std::string out;
  for (const auto& n : names()) {
    if (!out.empty())
      out += ';';
    out += n;
  }
  return out;
}

LocusResiduals locus_residuals(const SpherePoint& s) noexcept {
  const double X = s.x, Z = s.z;
  return LocusResiduals{
      {X + kSqrt3 * Z, X - kSqrt3 * Z, X},
      {-kSqrt3 * X + Z + 1.0, kSqrt3 * X + Z + 1.0, Z - 0.5},
      {kSqrt3 * X - Z - 1.0, -kSqrt3 * X - Z - 1.0, Z - 0.5},
  };
}

SpherePoint hopf(cplx u, cplx v) {
  const double m = std::max(std::abs(u), std::abs(v));
  if (!(m > 0.0) || !std::isfinite(m))
    throw DomainError("hopf: (u, v) must be finite and nonzero");
  u /= m;
  v /= m;
  const double nu = std::norm(u), nv = std::norm(v), n = nu + nv;
  const cplx w = std::conj(u) * v;
  return SpherePoint{(nu - nv) / n, -2.0 * w.imag() / n, 2.0 * w.real() / n};
}

SpherePoint to_sphere(const ProjTripleC& sides) {
  const double k = 2.0 - kSqrt3;
  const cplx a = sides[0], b = sides[1];
  return hopf(a + k * b, k * a + b);
}

SpherePoint to_sphere(const ShapeClass& c) { return to_sphere(c.sides()); }

SphereLoci classify_sphere_locus(const SpherePoint& s, double tol) {
  SphereLoci out;
  const auto r = locus_residuals(s);
  if (std::abs(s.y) < tol)
    out.set(Locus::DegenerateCircle);
  constexpr Locus iso[3] = {Locus::IsoscelesA, Locus::IsoscelesB, Locus::IsoscelesC};
  constexpr Locus right[3] = {Locus::RightA, Locus::RightB, Locus::RightC};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(r.isosceles[i]) < tol)
      out.set(iso[i]);
    if (std::abs(r.right[i]) < tol)
      out.set(right[i]);
  }
  using namespace landmarks;
  if (sphere_distance(s, equilateral_plus) < tol)
    out.set(Locus::EquilateralPlus);
  if (sphere_distance(s, equilateral_minus) < tol)
    out.set(Locus::EquilateralMinus);
  if (sphere_distance(s, delta_a) < tol)
    out.set(Locus::DoubleA);
  if (sphere_distance(s, delta_b) < tol)
    out.set(Locus::DoubleB);
  if (sphere_distance(s, delta_c) < tol)
    out.set(Locus::DoubleC);
  return out;
}

TorusPoint to_torus(const ShapeClass& c) {
  const auto& a = c.angles();
  return TorusPoint{a[0], a[1], a[2]};
}

double lifted_sum(const TorusPoint& t, double tol) {
  double s = 0.0;
  for (AngleModPi x : t.angles())
    s += x.value() > kPi - tol ? 0.0 : x.value();
  return s;
}

std::string sheet_label(const TorusPoint& t, double tol) {
  const double s = lifted_sum(t, tol);
  if (s < kPi / 2)
    return "0";
  return s < 3 * kPi / 2 ? "pi" : "2pi";
}

std::array<cplx, 3> torus_inverse_sides(double alpha, double beta) {
  // [1 - e^{-2ia}, -1 + e^{2ib}, e^{-2ia} - e^{2ib}] divided by 2i; this form keeps
  // full relative accuracy when the angles are small.
  return {std::sin(alpha) * std::polar(1.0, -alpha), std::sin(beta) * std::polar(1.0, beta),
          -std::sin(alpha + beta) * std::polar(1.0, beta - alpha)};
}

ShapeClass torus_inverse(const TorusPoint& t, double tol) {
  if (t.p.value() == 0.0 && t.q.value() == 0.0 && t.r.value() == 0.0)
    throw DomainError("blown-down point: no unique class");
  const auto raw = torus_inverse_sides(t.p.value(), t.q.value());
  const ProjTripleC sides{raw[0], raw[1], raw[2]};
  const auto ang = t.angles();

  int zero = -1;
  std::array<AngleModPi, 3> xi;
  for (int i = 0; i < 3; ++i) {
    if (sides.is_zero(i, tol))
      zero = i;
    else
      xi[i] = reduce_mod_pi(std::arg(sides[i]));
  }
  if (zero >= 0)
    xi[zero] = xi[(zero + 1) % 3] + ang[(zero + 2) % 3];
  return ShapeClass{sides, interior_angles(xi)};
}

std::vector<double> default_schedule() { return {1e-3, 1e-4, 1e-5, 1e-6}; }

FiberLimit torus_fiber_limit(const std::array<double, 3>& direction,
                             std::span<const double> schedule, double tol) {
  const double m = std::max({std::abs(direction[0]), std::abs(direction[1]), std::abs(direction[2])});
  if (!std::isfinite(m) || m == 0.0)
    throw DomainError("fiber direction must be finite and nonzero");
  if (std::abs(direction[0] + direction[1] + direction[2]) > 1e-9 * m)
    throw DomainError("fiber direction must sum to 0");
  if (schedule.size() < 2)
    throw std::invalid_argument("schedule needs at least two points");
  for (std::size_t k = 0; k < schedule.size(); ++k)
    if (!(schedule[k] > 0.0) || (k > 0 && !(schedule[k] < schedule[k - 1])))
      throw std::invalid_argument("schedule must be positive and strictly decreasing");

  std::vector<std::array<cplx, 3>> iterates;
  int pivot = -1;
  for (double t : schedule) {
    auto s = torus_inverse_sides(t * direction[0] / m, t * direction[1] / m);
    if (pivot < 0) {
      pivot = 0;
      for (int i = 1; i < 3; ++i)
        if (std::abs(s[i]) > std::abs(s[pivot]) * (1.0 + 1e-12))
          pivot = i;
    }
    const cplx p = s[pivot];
    for (auto& z : s)
      z /= p;
    iterates.push_back(s);
  }

  FiberLimit out;
  for (std::size_t k = 1; k < iterates.size(); ++k) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
      d = std::max(d, std::abs(iterates[k][i] - iterates[k - 1][i]));
    out.residuals.push_back(d);
  }
  for (std::size_t k = 1; k < out.residuals.size(); ++k)
    if (out.residuals[k] > out.residuals[k - 1] && out.residuals[k] > 1e-12)
      throw ConvergenceError("fiber limit: residuals are not decreasing", out.residuals);

  const std::size_t n = iterates.size();
  const double r = schedule[n - 2] / schedule[n - 1];
  std::array<cplx, 3> lim;
  double imag = 0.0;
  for (int i = 0; i < 3; ++i) {
    lim[i] = (r * iterates[n - 1][i] - iterates[n - 2][i]) / (r - 1.0);
    out.correction = std::max(out.correction, std::abs(lim[i] - iterates[n - 1][i]));
    imag = std::max(imag, std::abs(lim[i].imag()));
  }
  if (imag > tol)
    throw ConvergenceError("fiber limit: extrapolated sides are not real", out.residuals);

  int big = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(lim[i].real()) > std::abs(lim[big].real()) * (1.0 + 1e-12))
      big = i;
  const double scale = lim[big].real();
  for (int i = 0; i < 3; ++i)
    out.sides[i] = lim[i].real() / scale + 0.0;
  return out;
}

FiberLimit torus_fiber_limit(const std::array<double, 3>& direction, double tol) {
  const auto s = default_schedule();
  return torus_fiber_limit(direction, s, tol);
}

} // namespace dyck
