#include "dyck/kernels.hpp"

#include <exception>
#include <optional>

#include "dyck/sampling.hpp"

namespace dyck::kernels {

namespace {

using LevelSlot = std::array<std::optional<LevelSample>, 2>;

AtlasSample atlas_item(std::uint64_t i, std::uint64_t seed, double tol) {
  auto rng = sampling::rng_for(seed, i);
  AtlasSample s;
  s.id = i;
  const double u = sampling::uniform(rng, 0.0, 1.0);
  if (u < 0.8) {
    const TriangleVariable T = sampling::random_triangle(rng);
    s.kind = SampleKind::Nondegenerate;
    s.cls = class_of(T);
    s.orientation = orientation(T, tol);
  } else if (u < 0.9) {
    s.kind = SampleKind::Simple;
    s.cls = sampling::random_simple_class(rng);
  } else {
    s.kind = SampleKind::Double;
    s.cls = sampling::random_double_class(rng, std::uniform_int_distribution<int>(0, 2)(rng));
  }
  s.sphere = to_sphere(s.cls);
  s.torus = to_torus(s.cls);
  s.loci = classify_sphere_locus(s.sphere, tol);
  return s;
}

// Both roots beta of 4 sin(a/2) sin(b/2) sin(g/2) = level with g = pi - a - b.
// With W = (pi - a)/2 the equation reads cos(beta - W) = cos W + level / (2 sin(a/2)).
LevelSlot level_item(double level, double alpha) {
  LevelSlot out;
  const double half_gap = (kPi - alpha) / 2;
  const double c = std::cos(half_gap) + level / (2 * std::sin(alpha / 2));
  if (!(c <= 1.0))
    return out;
  const double delta = std::acos(c);
  for (int branch = 0; branch < (delta > 0.0 ? 2 : 1); ++branch) {
    LevelSample s;
    s.level = level;
    s.branch = branch;
    s.alpha = alpha;
    s.beta = branch == 0 ? half_gap - delta : half_gap + delta;
    s.gamma = kPi - alpha - s.beta;
    s.value = 4 * std::sin(s.alpha / 2) * std::sin(s.beta / 2) * std::sin(s.gamma / 2);
    out[branch] = s;
  }
  return out;
}

std::vector<LevelSample> flatten(const std::vector<LevelSlot>& slots) {
  std::vector<LevelSample> out;
  for (const auto& slot : slots)
    for (const auto& s : slot)
      if (s)
        out.push_back(*s);
  return out;
}

// Runs body(i) for i in [0, n) on OpenMP threads and rethrows the first
// exception on the calling thread.
template <class Body> void parallel_for(std::size_t n, Body body) {
  std::exception_ptr err;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(dyck_kernel_error)
      if (!err)
        err = std::current_exception();
    }
  }
  if (err)
    std::rethrow_exception(err);
}

template <class Body> void serial_for(std::size_t n, Body body) {
  for (std::size_t i = 0; i < n; ++i)
    body(i);
}

} // namespace

std::string to_string(SampleKind k) {
  switch (k) {
  case SampleKind::Nondegenerate: return "nondegenerate";
  case SampleKind::Simple: return "simple";
  case SampleKind::Double: return "double";
  }
  return "?";
}

double level_alpha(std::size_t i, std::size_t grid) {
  return kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
}

namespace {

// Kernel bodies, shared by both loop policies so the two cannot drift apart.
struct Serial {
  template <class Body> void operator()(std::size_t n, Body body) const { serial_for(n, body); }
};
struct Parallel {
  template <class Body> void operator()(std::size_t n, Body body) const { parallel_for(n, body); }
};

template <class Loop> std::vector<SpherePoint> sphere_batch_impl(std::span<const ShapeClass> classes) {
  std::vector<SpherePoint> out(classes.size());
  Loop{}(classes.size(), [&](std::size_t i) { out[i] = to_sphere(classes[i]); });
  return out;
}

template <class Loop> std::vector<TorusPoint> torus_batch_impl(std::span<const ShapeClass> classes) {
  std::vector<TorusPoint> out(classes.size());
  Loop{}(classes.size(), [&](std::size_t i) { out[i] = to_torus(classes[i]); });
  return out;
}

template <class Loop>
std::vector<ShapeClass> eval_schedule_impl(const Family& f, std::span<const double> ts) {
  std::vector<ShapeClass> out(ts.size());
  Loop{}(ts.size(), [&](std::size_t i) { out[i] = class_of(f.eval(ts[i])); });
  return out;
}

template <class Loop>
std::vector<AtlasSample> sample_atlas_impl(std::size_t n, std::uint64_t seed, double tol) {
  std::vector<AtlasSample> out(n);
  Loop{}(n, [&](std::size_t i) { out[i] = atlas_item(i, seed, tol); });
  return out;
}

template <class Loop>
std::vector<LevelSample> level_curves_impl(std::span<const double> levels, std::size_t grid) {
  std::vector<LevelSlot> slots(levels.size() * grid);
  Loop{}(slots.size(), [&](std::size_t k) {
    slots[k] = level_item(levels[k / grid], level_alpha(k % grid, grid));
  });
  return flatten(slots);
}

} // namespace

namespace serial {
std::vector<SpherePoint> sphere_batch(std::span<const ShapeClass> classes) {
  return sphere_batch_impl<Serial>(classes);
}
std::vector<TorusPoint> torus_batch(std::span<const ShapeClass> classes) {
  return torus_batch_impl<Serial>(classes);
}
std::vector<ShapeClass> eval_schedule(const Family& f, std::span<const double> ts) {
  return eval_schedule_impl<Serial>(f, ts);
}
std::vector<AtlasSample> sample_atlas(std::size_t n, std::uint64_t seed, double tol) {
  return sample_atlas_impl<Serial>(n, seed, tol);
}
std::vector<LevelSample> level_curves(std::span<const double> levels, std::size_t grid) {
  return level_curves_impl<Serial>(levels, grid);
}
} // namespace serial

namespace omp {
std::vector<SpherePoint> sphere_batch(std::span<const ShapeClass> classes) {
  return sphere_batch_impl<Parallel>(classes);
}
std::vector<TorusPoint> torus_batch(std::span<const ShapeClass> classes) {
  return torus_batch_impl<Parallel>(classes);
}
std::vector<ShapeClass> eval_schedule(const Family& f, std::span<const double> ts) {
  return eval_schedule_impl<Parallel>(f, ts);
}
std::vector<AtlasSample> sample_atlas(std::size_t n, std::uint64_t seed, double tol) {
  return sample_atlas_impl<Parallel>(n, seed, tol);
}
std::vector<LevelSample> level_curves(std::span<const double> levels, std::size_t grid) {
  return level_curves_impl<Parallel>(levels, grid);
}
} // namespace omp

} // namespace dyck::kernels
