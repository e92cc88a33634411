#include "dyck/figures.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dyck/kernels.hpp"

namespace dyck {

namespace {

void check(const FigureOptions& o) {
  if (o.grid == 0 || o.samples == 0)
    throw std::invalid_argument("grid and samples must be positive");
  for (double L : o.levels)
    if (!(L > 0.0 && L <= 0.5))
      throw std::invalid_argument("levels must lie in (0, 0.5]");
}

std::string hemisphere(double y, double tol) {
  if (std::abs(y) < tol)
    return "equator";
  return y < 0 ? "south" : "north";
}

bool hemisphere_matches(Orientation o, double y, double tol) {
  switch (o) {
  case Orientation::Positive: return y < 0;
  case Orientation::Negative: return y > 0;
  case Orientation::Zero: return std::abs(y) < tol;
  }
  return false;
}

void poncelet_levels(const FigureOptions& o, std::ostream& out) {
  const auto rows = o.parallel ? kernels::omp::level_curves(o.levels, o.grid)
                               : kernels::serial::level_curves(o.levels, o.grid);
  out << "level,branch,alpha,beta,gamma,r_over_R\n";
  for (const auto& r : rows)
    out << format_real(r.level) << ',' << r.branch << ',' << format_real(r.alpha) << ','
        << format_real(r.beta) << ',' << format_real(r.gamma) << ',' << format_real(r.value) << '\n';
}

std::vector<kernels::AtlasSample> atlas(const FigureOptions& o) {
  return o.parallel ? kernels::omp::sample_atlas(o.samples, o.seed, o.tol)
                    : kernels::serial::sample_atlas(o.samples, o.seed, o.tol);
}

void sphere_atlas(const FigureOptions& o, std::ostream& out) {
  out << "id,kind,orientation,alpha,beta,gamma,X,Y,Z,hemisphere,hemisphere_ok,loci\n";
  for (const auto& s : atlas(o)) {
    const auto& a = s.cls.angles();
    out << s.id << ',' << kernels::to_string(s.kind) << ',' << to_string(s.orientation) << ','
        << format_real(a[0].value()) << ',' << format_real(a[1].value()) << ','
        << format_real(a[2].value()) << ',' << format_real(s.sphere.x) << ','
        << format_real(s.sphere.y) << ',' << format_real(s.sphere.z) << ','
        << hemisphere(s.sphere.y, o.tol) << ','
        << (hemisphere_matches(s.orientation, s.sphere.y, o.tol) ? 1 : 0) << ',' << s.loci.joined()
        << '\n';
  }
}

void torus_atlas(const FigureOptions& o, std::ostream& out) {
  out << "id,kind,orientation,P,Q,R,lifted_sum,sheet\n";
  for (const auto& s : atlas(o)) {
    out << s.id << ',' << kernels::to_string(s.kind) << ',' << to_string(s.orientation) << ','
        << format_real(s.torus.p.value()) << ',' << format_real(s.torus.q.value()) << ','
        << format_real(s.torus.r.value()) << ',' << format_real(lifted_sum(s.torus, o.tol)) << ','
        << sheet_label(s.torus, o.tol) << '\n';
  }
}

} // namespace

std::optional<Figure> figure_from_name(std::string_view name) {
  if (name == "poncelet-levels")
    return Figure::PonceletLevels;
  if (name == "sphere-atlas")
    return Figure::SphereAtlas;
  if (name == "torus-atlas")
    return Figure::TorusAtlas;
  return std::nullopt;
}

std::string to_string(Figure f) {
  switch (f) {
  case Figure::PonceletLevels: return "poncelet-levels";
  case Figure::SphereAtlas: return "sphere-atlas";
  case Figure::TorusAtlas: return "torus-atlas";
  }
  return "?";
}

void emit_figure(Figure f, const FigureOptions& opts, std::ostream& out) {
  check(opts);
  switch (f) {
  case Figure::PonceletLevels: poncelet_levels(opts, out); break;
  case Figure::SphereAtlas: sphere_atlas(opts, out); break;
  case Figure::TorusAtlas: torus_atlas(opts, out); break;
  }
}

std::string emit_figure(Figure f, const FigureOptions& opts) {
  std::ostringstream os;
  emit_figure(f, opts, os);
  return os.str();
}

} // namespace dyck
