#include "dyck/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dyck {

namespace {

double cross(cplx p, cplx q) { return p.real() * q.imag() - p.imag() * q.real(); }

void check_config(const PonceletConfig& cfg) {
  if (!(cfg.r > 0.0) || !(cfg.R > 0.0) || !(cfg.d >= 0.0) || !std::isfinite(cfg.R) ||
      cfg.r > cfg.R / 2 * (1.0 + 1e-12))
    throw DomainError("Poncelet configuration needs 0 < r <= R/2 and d >= 0");
  if (std::abs(cfg.chapple_residual()) > 1e-9 * cfg.R * cfg.R)
    throw DomainError("Poncelet configuration violates (R-r)^2 = r^2 + d^2");
}

// Coordinates of a class normalized by a fixed pivot, with angles unwrapped
// against a reference so that extrapolation never crosses the wrap at pi.
struct Flat {
  std::array<cplx, 3> sides;
  std::array<double, 3> angles;
};

Flat flatten(const ShapeClass& c, int pivot, const std::array<AngleModPi, 3>& ref) {
  Flat f;
  for (int i = 0; i < 3; ++i)
    f.sides[i] = c.sides()[i] / c.sides()[pivot];
  for (int i = 0; i < 3; ++i)
    f.angles[i] = unwrap_near(c.angles()[i], ref[i].value());
  return f;
}

Flat richardson(const Flat& coarse, const Flat& fine, double r) {
  Flat out;
  for (int i = 0; i < 3; ++i) {
    out.sides[i] = (r * fine.sides[i] - coarse.sides[i]) / (r - 1.0);
    out.angles[i] = (r * fine.angles[i] - coarse.angles[i]) / (r - 1.0);
  }
  return out;
}

double flat_gap(const Flat& x, const Flat& y) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) {
    d = std::max(d, std::abs(x.sides[i] - y.sides[i]));
    d = std::max(d, std::abs(x.angles[i] - y.angles[i]));
  }
  return d;
}

} // namespace

PonceletConfig PonceletConfig::from_radii(double r, double R) {
  if (!(r > 0.0) || !(R > 0.0) || r > R / 2 * (1.0 + 1e-12))
    throw DomainError("Poncelet radii need 0 < r <= R/2");
  return PonceletConfig{r, R, std::sqrt(std::max(0.0, R * R - 2 * R * r))};
}

double PonceletConfig::chapple_residual() const noexcept {
  return (R - r) * (R - r) - r * r - d * d;
}

PonceletConfig incircle_outcircle(const TriangleVariable& T, double tol) {
  if (classify(T, tol) != DegeneracyType::Nondegenerate)
    throw DomainError("incircle/outcircle need a nondegenerate triangle");
  const auto [A, B, C] = T.vertices();
  const cplx a = T.sides.a(), b = T.sides.b(), c = T.sides.c();
  const double la = std::abs(a), lb = std::abs(b), lc = std::abs(c);
  const double area = std::abs(cross(c, a)) / 2;
  const double s = (la + lb + lc) / 2;
  const cplx incenter = (la * A + lb * B + lc * C) / (2 * s);
  // Circumcenter relative to B from d = A - B, e = C - B.
  const cplx d = A - B, e = C - B;
  const cplx circumcenter = B + (std::norm(d) * e - std::norm(e) * d) /
                                    (std::conj(d) * e - d * std::conj(e));
  return PonceletConfig{area / s, la * lb * lc / (4 * area), std::abs(incenter - circumcenter)};
}

double level_value(const std::array<AngleModPi, 3>& angles, double tol) {
  std::array<double, 3> v;
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    v[i] = angles[i].value() > kPi - tol ? 0.0 : angles[i].value();
    sum += v[i];
  }
  if (sum > 1.5 * kPi)
    for (double& x : v)
      x = kPi - x;
  double out = 4.0;
  for (double x : v) {
    if (x <= tol)
      return 0.0;
    out *= std::sin(x / 2);
  }
  return out;
}

TriangleVariable poncelet_family(const PonceletConfig& cfg, double theta) {
  check_config(cfg);
  const cplx A = std::polar(cfg.R, theta);
  const cplx I{cfg.d, 0.0};
  const cplx w = I - A;
  const double dist = std::abs(w);
  if (dist <= cfg.r)
    throw DomainError("Poncelet vertex lies inside the incircle");
  const double h = std::asin(cfg.r / dist);
  std::array<cplx, 2> P;
  for (int k = 0; k < 2; ++k) {
    const cplx u = w / dist * std::polar(1.0, k == 0 ? h : -h);
    const double s = -2.0 * (std::conj(A) * u).real();
    P[k] = A + s * u;
  }
  cplx B = P[0], C = P[1];
  if (cross(B - A, C - B) < 0)
    std::swap(B, C);
  TriangleVariable T = from_vertices(A, B, C);
  if (std::abs(poncelet_closure_residual(cfg, T)) > 1e-6 * cfg.R)
    throw DomainError("Poncelet closure failed: chord BC is not tangent to the incircle");
  return T;
}

double poncelet_closure_residual(const PonceletConfig& cfg, const TriangleVariable& T) {
  const auto [A, B, C] = T.vertices();
  const cplx I{cfg.d, 0.0};
  return std::abs(cross(C - B, I - B)) / std::abs(C - B) - cfg.r;
}

Family inscribed_family(cplx B, cplx C, cplx center, double radius) {
  const double slack = 1e-9 * std::max(1.0, radius);
  if (!(radius > 0.0) || std::abs(std::abs(B - center) - radius) > slack ||
      std::abs(std::abs(C - center) - radius) > slack)
    throw DomainError("chord endpoints must lie on the circle");
  const double phiC = std::arg(C - center);
  const AngleModPi tangent = reduce_mod_pi(std::arg(cplx{0, 1} * (C - center)));
  Family f;
  f.label = "inscribed";
  f.lo = 0.0;
  f.hi = 2 * kPi;
  f.limit_end = LimitEnd::Lower;
  f.eval = [=](double t) {
    if (t == 0.0) {
      VertexOptions opts;
      opts.free_args[1] = tangent;
      return from_vertices(C, B, C, opts);
    }
    return from_vertices(center + std::polar(radius, phiC + t), B, C);
  };
  return f;
}

Family constant_angle_family(AngleModPi alpha0) {
  const double a0 = alpha0.value();
  if (!(a0 > 0.0))
    throw DomainError("constant-angle family needs 0 < alpha0 < pi");
  const double y0 = std::cos(a0) / std::sin(a0);
  const double rho = 1.0 / std::sin(a0);
  const cplx center{0.0, y0};
  const double phiC = std::atan2(-y0, 1.0);
  Family f;
  f.label = "constant-angle:" + format_real(a0);
  f.lo = 0.0;
  f.hi = kPi - 2 * phiC;
  f.limit_end = LimitEnd::Lower;
  f.eval = [=](double t) {
    return from_vertices(center + std::polar(rho, phiC + t), cplx{-1.0, 0.0}, cplx{1.0, 0.0});
  };
  return f;
}

Family constant_ratio_family(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio))
    throw DomainError("constant-ratio family needs a positive ratio");
  Family f;
  f.label = "constant-ratio:" + format_real(ratio);
  f.lo = 0.0;
  f.limit_end = LimitEnd::Lower;
  const cplx B{-1.0, 0.0}, C{1.0, 0.0};
  if (ratio == 1.0) {
    f.hi = std::numeric_limits<double>::infinity();
    f.eval = [=](double h) { return from_vertices(cplx{0.0, h}, B, C); };
    return f;
  }
  // Apollonius circle |z + 1| = k |z - 1|; A runs on the branch through the
  // internal division point p as the height h goes to 0.
  const double k2 = ratio * ratio;
  const double rho = 2 * ratio / std::abs(k2 - 1);
  const double p = (ratio - 1) / (ratio + 1);
  const double sgn = ratio > 1 ? 1.0 : -1.0;
  f.hi = rho;
  f.eval = [=](double h) {
    const double x = p + sgn * h * h / (rho + std::sqrt(rho * rho - h * h));
    return from_vertices(cplx{x, h}, B, C);
  };
  return f;
}

std::vector<double> family_schedule(const Family& f) {
  std::vector<double> out;
  for (double h : default_schedule())
    out.push_back(f.limit_end == LimitEnd::Lower ? f.lo + h : f.hi - h);
  return out;
}

LimitTrace limit_class_traced(const Family& f, std::span<const double> schedule, double tol) {
  if (schedule.size() < 2)
    throw std::invalid_argument("schedule needs at least two points");
  const double end = f.limit_end == LimitEnd::Lower ? f.lo : f.hi;
  std::vector<double> h;
  for (double t : schedule) {
    h.push_back(std::abs(t - end));
    if (h.size() > 1 && !(h.back() < h[h.size() - 2]) )
      throw std::invalid_argument("schedule must approach the limit end monotonically");
  }

  std::vector<ShapeClass> iter;
  for (double t : schedule)
    iter.push_back(class_of(f.eval(t)));

  LimitTrace out{iter.back(), {}, 0.0};
  for (std::size_t k = 1; k < iter.size(); ++k)
    out.distances.push_back(class_distance(iter[k], iter[k - 1]));
  for (std::size_t k = 1; k < out.distances.size(); ++k)
    if (out.distances[k] > out.distances[k - 1] && out.distances[k] > 1e-12)
      throw ConvergenceError("limit: iterates are not settling", out.distances);

  const std::size_t n = iter.size();
  const int pivot = iter.back().sides().pivot();
  const auto ref = iter.back().angles();
  std::vector<Flat> flat;
  for (const auto& c : iter)
    flat.push_back(flatten(c, pivot, ref));

  const double r = h[n - 2] / h[n - 1];
  const Flat lim = richardson(flat[n - 2], flat[n - 1], r);
  if (n >= 3) {
    const Flat prev = richardson(flat[n - 3], flat[n - 2], h[n - 3] / h[n - 2]);
    out.error_estimate = flat_gap(lim, prev) / (r * r - 1.0);
  } else {
    out.error_estimate = flat_gap(lim, flat[n - 1]);
  }
  if (out.error_estimate > tol)
    throw ConvergenceError("limit: extrapolation error " + format_real(out.error_estimate) +
                               " above tolerance",
                           out.distances);

  std::array<cplx, 3> s = lim.sides;
  s[pivot] = 1.0;
  for (int i = 0; i < 3; ++i) {
    if (i != pivot && std::abs(s[i]) <= tol) {
      s[i] = 0.0;
      s[3 - i - pivot] = -1.0;
    }
  }
  const AngleModPi alpha = reduce_mod_pi(lim.angles[0]);
  const AngleModPi beta = reduce_mod_pi(lim.angles[1]);
  out.limit = ShapeClass{ProjTripleC{s[0], s[1], s[2]}, {alpha, beta, -(alpha + beta)}};
  return out;
}

ShapeClass limit_class(const Family& f, std::span<const double> schedule, double tol) {
  return limit_class_traced(f, schedule, tol).limit;
}

std::string to_string(Model m) {
  switch (m) {
  case Model::Dyck: return "dyck";
  case Model::Sphere: return "sphere";
  case Model::Torus: return "torus";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Separated ? "Separated" : "Merged"; }

SeparationReport separation_test(const Family& f1, const Family& f2, Model model,
                                 std::span<const double> schedule, double sep_threshold,
                                 double tol) {
  const ShapeClass l1 = limit_class(f1, schedule, tol);
  const ShapeClass l2 = limit_class(f2, schedule, tol);
  SeparationReport rep{model, l1, l2, 0.0, Verdict::Merged};
  switch (model) {
  case Model::Dyck:
    rep.distance = class_distance(l1, l2);
    break;
  case Model::Sphere: {
    const SpherePoint p = to_sphere(l1), q = to_sphere(l2);
    rep.limit1 = p;
    rep.limit2 = q;
    rep.distance = sphere_distance(p, q);
    break;
  }
  case Model::Torus: {
    const TorusPoint p = to_torus(l1), q = to_torus(l2);
    rep.limit1 = p;
    rep.limit2 = q;
    rep.distance = torus_distance(p, q);
    break;
  }
  }
  rep.verdict = rep.distance > sep_threshold ? Verdict::Separated : Verdict::Merged;
  return rep;
}

SeparationReport separation_test(const Family& f1, const Family& f2, Model model,
                                 double sep_threshold, double tol) {
  // Both families in this library degenerate at parameter 0 from above, so one
  // schedule serves both.
  const auto s1 = family_schedule(f1);
  const auto s2 = family_schedule(f2);
  if (s1 != s2)
    throw std::invalid_argument("families approach different limit ends");
  return separation_test(f1, f2, model, s1, sep_threshold, tol);
}

} // namespace dyck
