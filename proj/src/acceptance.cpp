#include "dyck/acceptance.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "dyck/figures.hpp"
#include "dyck/kernels.hpp"
#include "dyck/sampling.hpp"

namespace dyck::acceptance {

namespace {

using sampling::Rng;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Largest coordinate gap after normalizing y by x's pivot.
double side_error(const ProjTripleC& x, const ProjTripleC& y) {
  const int p = x.pivot();
  double e = 0.0;
  for (int i = 0; i < 3; ++i)
    e = std::max(e, std::abs(x[i] - y[i] / y[p]));
  return e;
}

double class_error(const ShapeClass& x, const ShapeClass& y) {
  double e = side_error(x.sides(), y.sides());
  for (int i = 0; i < 3; ++i)
    e = std::max(e, angle_dist(x.angles()[i], y.angles()[i]));
  return e;
}

double blowup_error(const BlowupCoord& x, const BlowupCoord& y) {
  double e = side_error(x.sides(), y.sides());
  const auto dx = interior_angles(x.xi()), dy = interior_angles(y.xi());
  for (int i = 0; i < 3; ++i)
    e = std::max(e, angle_dist(dx[i], dy[i]));
  return e;
}

// Max-abs-normalized real triple, compared up to sign.
double real_proj_error(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  auto norm = [](std::array<double, 3> v) {
    const double m = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    for (double& t : v)
      t /= m;
    return v;
  };
  const auto a = norm(x), b = norm(y);
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < 3; ++i) {
    plus = std::max(plus, std::abs(a[i] - b[i]));
    minus = std::max(minus, std::abs(a[i] + b[i]));
  }
  return std::min(plus, minus);
}

Result bijection(std::uint64_t seed) {
  double err = 0.0;
  for (std::uint64_t i = 0; i < 1100; ++i) {
    Rng rng = sampling::rng_for(seed, i);
    const ShapeClass c = i < 1000 ? sampling::random_nondegenerate_class(rng)
                                  : sampling::random_double_class(rng, static_cast<int>(i % 3));
    err = std::max(err, class_error(c, psi(phi(c))));

    // A coordinate on the blowup: side arguments (or the fiber value) plus a shift.
    std::array<AngleModPi, 3> xi;
    for (int k = 0; k < 3; ++k)
      xi[k] = c.sides().is_zero(k) ? reduce_mod_pi(sampling::uniform(rng, 0, kPi))
                                   : reduce_mod_pi(std::arg(c.sides()[k]));
    const AngleModPi shift = reduce_mod_pi(sampling::uniform(rng, 0, kPi));
    for (auto& x : xi)
      x += shift;
    const BlowupCoord b{c.sides(), xi};
    err = std::max(err, blowup_error(b, phi(psi(b))));
  }
  return {1, "bijection", err < 1e-9, "max |psi(phi(c)) - c|, |phi(psi(b)) - b| = " + sci(err) + " < 1e-9 over 1000 nondegenerate + 100 double-point samples"};
}

Result sphere_landmarks(std::uint64_t seed) {
  using namespace landmarks;
  const SpherePoint delta[3] = {delta_a, delta_b, delta_c};
  double err = 0.0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = sampling::rng_for(seed + 1, i);
    const int slot = static_cast<int>(i % 3);
    err = std::max(err, sphere_distance(to_sphere(sampling::random_double_class(rng, slot)), delta[slot]));
  }
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = sampling::rng_for(seed + 2, i);
    const cplx lambda = std::polar(sampling::uniform(rng, 0.1, 10), sampling::uniform(rng, -kPi, kPi));
    const cplx w{sampling::uniform(rng, -5, 5), sampling::uniform(rng, -5, 5)};
    const cplx A = std::polar(1.0, kPi / 3);
    const auto plus = class_of(from_vertices(lambda * A + w, w, lambda + w));
    const auto minus = class_of(from_vertices(lambda * std::conj(A) + w, w, lambda + w));
    err = std::max(err, sphere_distance(to_sphere(plus), equilateral_plus));
    err = std::max(err, sphere_distance(to_sphere(minus), equilateral_minus));
  }
  return {2, "sphere-landmarks", err < 1e-12, "max distance to delta_a/b/c and (0,-+1,0) = " + sci(err) + " < 1e-12"};
}

Result hemispheres(std::uint64_t seed) {
  int bad = 0;
  double worst_deg = 0.0, closest = 1.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = sampling::rng_for(seed + 3, i);
    const double yp = to_sphere(class_of(sampling::random_triangle(rng, Orientation::Positive))).y;
    const double yn = to_sphere(class_of(sampling::random_triangle(rng, Orientation::Negative))).y;
    bad += !(yp < 0) + !(yn > 0);
    closest = std::min({closest, std::abs(yp), std::abs(yn)});
  }
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = sampling::rng_for(seed + 4, i);
    const ShapeClass c = i % 2 ? sampling::random_simple_class(rng)
                               : sampling::random_double_class(rng, static_cast<int>(i / 2 % 3));
    const double y = std::abs(to_sphere(c).y);
    worst_deg = std::max(worst_deg, y);
    bad += !(y < 1e-9);
  }
  return {3, "hemisphere-separation", bad == 0,
          std::to_string(bad) + " misplaced; min |Y| nondegenerate = " + sci(closest) +
              ", max |Y| degenerate = " + sci(worst_deg) + " < 1e-9"};
}

Result loci(std::uint64_t seed) {
  double iso = 0.0, right = 0.0, margin = 1.0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = sampling::rng_for(seed + 5, i);
    const int k = static_cast<int>(i % 3);
    iso = std::max(iso, std::abs(locus_residuals(to_sphere(sampling::random_isosceles_class(rng, k))).isosceles[k]));
    right = std::max(right, std::abs(locus_residuals(to_sphere(sampling::random_right_class(rng, k))).right[k]));
    margin = std::min(margin, locus_residuals(to_sphere(sampling::random_obtuse_class(rng, k))).obtuse_margin[k]);
  }
  return {4, "locus-residuals", iso < 1e-9 && right < 1e-9 && margin > 0,
          "isosceles " + sci(iso) + " < 1e-9, right " + sci(right) + " < 1e-9, min obtuse cap margin " +
              sci(margin) + " > 0"};
}

Result torus_inverse_check(std::uint64_t seed) {
  double err = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = sampling::rng_for(seed + 6, i);
    const TorusPoint t = sampling::random_torus_point(rng);
    err = std::max(err, torus_distance(to_torus(torus_inverse(t)), t));
  }
  bool rejects = false;
  try {
    (void)torus_inverse(TorusPoint{});
  } catch (const DomainError&) {
    rejects = true;
  }
  return {5, "torus-inverse", err < 1e-9 && rejects,
          "max round-trip error " + sci(err) + " < 1e-9; (0,0,0) rejected: " + (rejects ? "yes" : "no")};
}

Result fiber_limits(std::uint64_t seed) {
  double err = 0.0;
  int failures = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = sampling::rng_for(seed + 7, i);
    const auto d = sampling::random_fiber_direction(rng);
    try {
      err = std::max(err, real_proj_error(torus_fiber_limit(d).sides, d));
    } catch (const ConvergenceError&) {
      ++failures;
    }
  }
  return {6, "fiber-directions", failures == 0 && err < 1e-6,
          "max projective error " + sci(err) + " < 1e-6, " + std::to_string(failures) + " non-converged"};
}

Result poncelet(std::uint64_t seed) {
  double chapple = 0.0, level = 0.0, variation = 0.0, tangency = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = sampling::rng_for(seed + 8, i);
    const TriangleVariable T = sampling::random_triangle(rng);
    const PonceletConfig cfg = incircle_outcircle(T);
    chapple = std::max(chapple, std::abs(cfg.chapple_residual()));
    level = std::max(level, std::abs(level_value(interior_angles(T)) - cfg.r / cfg.R));
  }
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = sampling::rng_for(seed + 9, i);
    const PonceletConfig cfg = sampling::random_poncelet_config(rng);
    double lo = 1.0, hi = 0.0;
    for (int j = 0; j < 32; ++j) {
      const TriangleVariable T = poncelet_family(cfg, 2 * kPi * j / 32);
      const PonceletConfig got = incircle_outcircle(T);
      lo = std::min(lo, got.r / got.R);
      hi = std::max(hi, got.r / got.R);
      tangency = std::max(tangency, std::abs(poncelet_closure_residual(cfg, T)));
    }
    variation = std::max(variation, hi - lo);
  }
  return {7, "poncelet", chapple < 1e-9 && level < 1e-9 && variation < 1e-9 && tangency < 1e-8,
          "Chapple " + sci(chapple) + " < 1e-9, level vs r/R " + sci(level) + " < 1e-9, orbit r/R variation " +
              sci(variation) + " < 1e-9, third-chord tangency " + sci(tangency) + " < 1e-8"};
}

Result signature() {
  const Family a1 = constant_angle_family(reduce_mod_pi(kPi / 2));
  const Family a2 = constant_angle_family(reduce_mod_pi(2 * kPi / 3));
  const Family r1 = constant_ratio_family(1.0);
  const Family r2 = constant_ratio_family(2.0);
  const auto as = separation_test(a1, a2, Model::Sphere);
  const auto at = separation_test(a1, a2, Model::Torus);
  const auto ad = separation_test(a1, a2, Model::Dyck);
  const auto rt = separation_test(r1, r2, Model::Torus);
  const auto rs = separation_test(r1, r2, Model::Sphere);
  const auto rd = separation_test(r1, r2, Model::Dyck);
  const bool ok = as.verdict == Verdict::Merged && as.distance < 1e-6 &&
                  at.verdict == Verdict::Separated && at.distance > 0.5 &&
                  ad.verdict == Verdict::Separated && rt.verdict == Verdict::Merged &&
                  rt.distance < 1e-6 && rs.verdict == Verdict::Separated && rs.distance > 0.05 &&
                  rd.verdict == Verdict::Separated;
  auto show = [](const char* what, const SeparationReport& r) {
    return std::string(what) + " " + to_string(r.verdict) + " (" + sci(r.distance) + ")";
  };
  return {8, "missing-degenerates", ok,
          show("angle/sphere", as) + " <1e-6; " + show("angle/torus", at) + " >0.5; " +
              show("angle/dyck", ad) + "; " + show("ratio/torus", rt) + " <1e-6; " +
              show("ratio/sphere", rs) + " >0.05; " + show("ratio/dyck", rd)};
}

Result group_action(std::uint64_t seed) {
  const auto& G = GroupElement::all();
  int composition_failures = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = sampling::rng_for(seed + 10, i);
    const TriangleVariable T = sampling::random_triangle(rng);
    for (const auto& g : G)
      for (const auto& h : G)
        composition_failures += !same_variable(act(g * h, T), act(g, act(h, T)));
  }

  Rng rng = sampling::rng_for(seed + 11, 0);
  // Scalene with clearly distinct angles: perturb a fixed generic triangle.
  const ShapeClass generic = class_of(from_vertices({0.31, 0.93}, {-1.0, 0.0}, {1.0, 0.0}));
  const std::size_t n_generic = orbit(generic).size();
  std::size_t n_iso_min = 99, n_iso_max = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t n = orbit(sampling::random_isosceles_class(rng, k)).size();
    n_iso_min = std::min(n_iso_min, n);
    n_iso_max = std::max(n_iso_max, n);
  }
  const std::size_t n_equi = orbit(class_of(from_vertices(std::polar(1.0, kPi / 3), 0.0, 1.0))).size();

  int equivariance_failures = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng r = sampling::rng_for(seed + 12, i);
    const TriangleVariable T = sampling::random_triangle(r);
    const auto& g = G[std::uniform_int_distribution<int>(0, 11)(r)];
    equivariance_failures += !class_equal(class_of(act(g, T)), act_class(g, class_of(T)));
  }
  const bool ok = composition_failures == 0 && n_generic == 12 && n_iso_min == 6 && n_iso_max == 6 &&
                  n_equi == 2 && equivariance_failures == 0;
  return {9, "group-action", ok,
          std::to_string(composition_failures) + "/2880 composition failures; orbit sizes generic " +
              std::to_string(n_generic) + ", isosceles " + std::to_string(n_iso_min) + ".." +
              std::to_string(n_iso_max) + ", equilateral " + std::to_string(n_equi) + "; " +
              std::to_string(equivariance_failures) + "/100 equivariance failures"};
}

Result angle_formula(std::uint64_t seed) {
  double err = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = sampling::rng_for(seed + 13, i);
    const TriangleVariable T = sampling::random_triangle(rng);
    const auto [A, B, C] = T.vertices();
    const std::array<AngleModPi, 3> measured{reduce_mod_pi(std::arg((C - A) / (B - A))),
                                             reduce_mod_pi(std::arg((A - B) / (C - B))),
                                             reduce_mod_pi(std::arg((B - C) / (A - C)))};
    const auto formula = interior_angles(T);
    for (int k = 0; k < 3; ++k)
      err = std::max(err, angle_dist(measured[k], formula[k]));
  }
  // Across the double point A = C of the Thales family the moving angle is
  // unchanged mod pi while the orientation flips.
  const Family f = inscribed_family(-1.0, 1.0, 0.0, 1.0);
  const double eps = 1e-6;
  const TriangleVariable before = f.eval(-eps), after = f.eval(eps), at = f.eval(0.0);
  const auto ab = interior_angles(before), aa = interior_angles(after), a0 = interior_angles(at);
  const double jump = angle_dist(ab[0], aa[0]);
  double drift = 0.0;
  for (int k = 0; k < 3; ++k)
    drift = std::max({drift, angle_dist(ab[k], a0[k]), angle_dist(aa[k], a0[k])});
  const bool flips = orientation(before) == Orientation::Negative &&
                     orientation(after) == Orientation::Positive;
  return {10, "angle-formula", err < 1e-9 && jump < 1e-9 && drift < 4 * eps && flips,
          "max |formula - vertex measurement| " + sci(err) + " < 1e-9; across the double point: alpha jump " +
              sci(jump) + " < 1e-9, angle drift " + sci(drift) + ", orientation flips: " +
              (flips ? "yes" : "no")};
}

Result determinism(const std::vector<Result>& earlier) {
  int mismatches = 0;
  for (Figure f : {Figure::PonceletLevels, Figure::SphereAtlas, Figure::TorusAtlas}) {
    FigureOptions opts;
    const std::string first = emit_figure(f, opts);
    const std::string second = emit_figure(f, opts);
    opts.parallel = false;
    const std::string serial = emit_figure(f, opts);
    mismatches += (first != second) + (first != serial);
  }
  const bool green = std::all_of(earlier.begin(), earlier.end(), [](const Result& r) { return r.pass; });
  return {11, "determinism", green && mismatches == 0,
          std::string("criteria 1-10 ") + (green ? "green" : "not green") + "; " +
              std::to_string(mismatches) + " figure mismatches (repeat and serial vs parallel)"};
}

} // namespace

std::vector<Result> run_all(std::uint64_t seed) {
  std::vector<std::function<Result()>> criteria{
      [&] { return bijection(seed); },          [&] { return sphere_landmarks(seed); },
      [&] { return hemispheres(seed); },        [&] { return loci(seed); },
      [&] { return torus_inverse_check(seed); }, [&] { return fiber_limits(seed); },
      [&] { return poncelet(seed); },           [] { return signature(); },
      [&] { return group_action(seed); },       [&] { return angle_formula(seed); },
  };
  std::vector<Result> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      out.push_back(criteria[i]());
    } catch (const std::exception& e) {
      out.push_back({static_cast<int>(i + 1), "error", false, e.what()});
    }
  }
  out.push_back(determinism(out));
  return out;
}

std::string format(const Result& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << (r.id < 10 ? " " : "") << r.id << ' ' << r.name << ": "
     << r.detail;
  return os.str();
}

} // namespace dyck::acceptance
