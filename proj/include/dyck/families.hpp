#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dyck/projections.hpp"

namespace dyck {

/// Inradius r, circumradius R and center separation d of a triangle.
struct PonceletConfig {
  double r = 0.0, R = 0.0, d = 0.0;

  /// d from Chapple's relation. Requires 0 < r <= R/2.
  static PonceletConfig from_radii(double r, double R);
  /// (R - r)^2 - r^2 - d^2
  [[nodiscard]] double chapple_residual() const noexcept;
};

PonceletConfig incircle_outcircle(const TriangleVariable& T, double tol = kDefaultTol);

/// r/R = 4 sin(alpha/2) sin(beta/2) sin(gamma/2) on the positive lift of the angles.
double level_value(const std::array<AngleModPi, 3>& angles, double tol = kDefaultTol);

/// Outcircle centered at 0 with radius R, incircle centered at (d, 0); A = R e^{i theta}.
TriangleVariable poncelet_family(const PonceletConfig& cfg, double theta);
/// Distance from the incircle center to line BC, minus r.
double poncelet_closure_residual(const PonceletConfig& cfg, const TriangleVariable& T);

enum class LimitEnd { Lower, Upper };

struct Family {
  std::string label;
  std::function<TriangleVariable(double)> eval;
  double lo = 0.0, hi = 1.0;
  LimitEnd limit_end = LimitEnd::Lower;
};

/// A moves on the circle through B and C; the parameter is the angular offset of
/// A from C. At offset 0 the doubled vertex carries the tangent argument.
Family inscribed_family(cplx B, cplx C, cplx center, double radius);
/// B = -1, C = 1 and A on the arc where the angle at A is alpha0; A -> C as t -> 0.
Family constant_angle_family(AngleModPi alpha0);
/// B = -1, C = 1 and |c| = ratio |b|; A descends to line BC as the height t -> 0.
Family constant_ratio_family(double ratio);

/// Schedule 1e-3, 1e-4, 1e-5, 1e-6 mapped toward the family's limit end.
std::vector<double> family_schedule(const Family& f);

struct LimitTrace {
  ShapeClass limit;
  std::vector<double> distances; // between successive iterates
  double error_estimate = 0.0;
};

LimitTrace limit_class_traced(const Family& f, std::span<const double> schedule,
                              double tol = kDefaultTol);
ShapeClass limit_class(const Family& f, std::span<const double> schedule, double tol = kDefaultTol);

enum class Model { Dyck, Sphere, Torus };
enum class Verdict { Separated, Merged };

std::string to_string(Model m);
std::string to_string(Verdict v);

using ModelPoint = std::variant<ShapeClass, SpherePoint, TorusPoint>;

struct SeparationReport {
  Model model;
  ModelPoint limit1, limit2;
  double distance;
  Verdict verdict;
};

inline constexpr double kDefaultSeparation = 1e-3;

SeparationReport separation_test(const Family& f1, const Family& f2, Model model,
                                 std::span<const double> schedule,
                                 double sep_threshold = kDefaultSeparation,
                                 double tol = kDefaultTol);
SeparationReport separation_test(const Family& f1, const Family& f2, Model model,
                                 double sep_threshold = kDefaultSeparation,
                                 double tol = kDefaultTol);

} // namespace dyck
