#include "dyck/triangle.hpp"

#include <algorithm>

namespace dyck {

namespace {

constexpr const char* kSlotName[3] = {"a", "b", "c"};

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double cross(cplx p, cplx q) { return p.real() * q.imag() - p.imag() * q.real(); }

// Projective closeness of two canonical direction sextuples, robust to the sign
// choice flipping when the leading coordinate is near zero.
bool directions_close(const DirectionTriple& x, const DirectionTriple& y, double tol) {
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < 6; ++i) {
    plus = std::max(plus, std::abs(x.coords()[i] - y.coords()[i]));
    minus = std::max(minus, std::abs(x.coords()[i] + y.coords()[i]));
  }
  return std::min(plus, minus) <= tol;
}

// Unit vector along each side's line, if it is determined: the direction pair
// when it is not negligible, otherwise the stored (free) argument.
std::optional<cplx> line_of(const TriangleVariable& T, int i, double tol) {
  const cplx p = T.directions.pair(i);
  if (std::abs(p) > tol)
    return p / std::abs(p);
  if (T.arguments[i])
    return std::polar(1.0, T.arguments[i]->value());
  return std::nullopt;
}

} // namespace

SideTriple::SideTriple(cplx a, cplx b, cplx c, double tol) {
  if (!finite(a) || !finite(b) || !finite(c))
    throw DomainError("side triple has a non-finite entry");
  const double s = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a + b + c) > tol * s)
    throw DomainError("side triple violates a+b+c=0");
  v = {a, b, -a - b};
}

bool SideTriple::all_zero() const noexcept {
  return v[0] == cplx{} && v[1] == cplx{} && v[2] == cplx{};
}

double SideTriple::scale() const noexcept {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

DirectionTriple::DirectionTriple(const std::array<double, 6>& d) : d_(d) {
  double m = 0.0;
  for (double x : d_) {
    if (!std::isfinite(x))
      throw DomainError("direction triple has a non-finite entry");
    m = std::max(m, std::abs(x));
  }
  if (m == 0.0)
    throw DomainError("direction triple is the zero vector");
  double sign = 0.0;
  for (double x : d_) {
    if (x != 0.0) {
      sign = x > 0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& x : d_)
    x = x * sign / m + 0.0;
}

DirectionTriple DirectionTriple::of_sides(const SideTriple& s) {
  return DirectionTriple{{s.a().real(), s.a().imag(), s.b().real(), s.b().imag(),
                          s.c().real(), s.c().imag()}};
}

bool DirectionTriple::pair_zero(int slot, double tol) const noexcept {
  return std::abs(pair(slot)) <= tol;
}

std::string to_string(DegeneracyType t) {
  switch (t) {
  case DegeneracyType::Nondegenerate: return "Nondegenerate";
  case DegeneracyType::Simple: return "Simple";
  case DegeneracyType::Double: return "Double";
  case DegeneracyType::Triple: return "Triple";
  case DegeneracyType::TripledSimple: return "TripledSimple";
  case DegeneracyType::DoubledSimple: return "DoubledSimple";
  case DegeneracyType::TripledDouble: return "TripledDouble";
  case DegeneracyType::TripledDoubledSimple: return "TripledDoubledSimple";
  }
  return "?";
}

std::string to_string(Orientation o) {
  switch (o) {
  case Orientation::Positive: return "Positive";
  case Orientation::Negative: return "Negative";
  case Orientation::Zero: return "Zero";
  }
  return "?";
}

std::string to_string(PointKind k) {
  switch (k) {
  case PointKind::Nondegenerate: return "Nondegenerate";
  case PointKind::SimplePoint: return "SimplePoint";
  case PointKind::DoublePoint: return "DoublePoint";
  case PointKind::TriplePoint: return "TriplePoint";
  }
  return "?";
}

std::array<cplx, 3> TriangleVariable::vertices() const noexcept {
  return {basepoint - sides.c(), basepoint, basepoint + sides.a()};
}

TriangleVariable from_vertices(cplx A, cplx B, cplx C, const VertexOptions& opts) {
  TriangleVariable T;
  T.basepoint = B;
  T.sides = SideTriple(C - B, A - C, B - A, opts.tol);

  if (T.sides.all_zero()) {
    if (!opts.directions)
      throw DomainError("underdetermined triple point");
    T.directions = *opts.directions;
  } else {
    T.directions = DirectionTriple::of_sides(T.sides);
    if (opts.directions && !directions_close(*opts.directions, T.directions, opts.tol))
      throw DomainError("directions inconsistent with sides");
  }

  for (int i = 0; i < 3; ++i) {
    const cplx p = T.directions.pair(i);
    if (p != cplx{}) {
      if (opts.free_args[i])
        throw DomainError(std::string("argument ξ_") + kSlotName[i] +
                          " is determined by a nonzero side");
      T.arguments[i] = rho(ProjPoint1R{p.real(), p.imag()});
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (T.arguments[i])
      continue;
    if (opts.free_args[i]) {
      T.arguments[i] = opts.free_args[i];
    } else if (opts.inscribed_default) {
      for (int j = 0; j < 3; ++j) {
        const cplx p = T.directions.pair(j);
        if (j != i && p != cplx{}) {
          T.arguments[i] = rho(ProjPoint1R{p.real(), p.imag()});
          break;
        }
      }
    }
  }
  return T;
}

DegeneracyType classify(const TriangleVariable& T, double tol) {
  const bool tpl = T.sides.all_zero();
  bool dbl = false;
  for (int i = 0; i < 3; ++i)
    dbl = dbl || T.directions.pair_zero(i, tol);

  std::array<std::optional<cplx>, 3> u;
  for (int i = 0; i < 3; ++i)
    u[i] = line_of(T, i, tol);
  bool smp = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (u[i] && u[j] && std::abs(cross(*u[i], *u[j])) > tol)
        smp = false;

  using D = DegeneracyType;
  if (tpl)
    return dbl ? (smp ? D::TripledDoubledSimple : D::TripledDouble)
               : (smp ? D::TripledSimple : D::Triple);
  if (dbl)
    return smp ? D::DoubledSimple : D::Double;
  return smp ? D::Simple : D::Nondegenerate;
}

PointKind point_kind(const TriangleVariable& T, double tol) {
  if (T.sides.all_zero())
    return PointKind::TriplePoint;
  for (int i = 0; i < 3; ++i)
    if (T.directions.pair_zero(i, tol))
      return PointKind::DoublePoint;
  const cplx pa = T.directions.pair(0), pc = T.directions.pair(2);
  if (std::abs(cross(pa / std::abs(pa), pc / std::abs(pc))) <= tol)
    return PointKind::SimplePoint;
  return PointKind::Nondegenerate;
}

Orientation orientation(const TriangleVariable& T, double tol) {
  if (classify(T, tol) != DegeneracyType::Nondegenerate)
    return Orientation::Zero;
  const double area2 = cross(T.sides.c(), T.sides.a());
  return area2 > 0 ? Orientation::Positive : Orientation::Negative;
}

std::array<AngleModPi, 3> interior_angles(const std::array<AngleModPi, 3>& xi) {
  return {xi[1] - xi[2], xi[2] - xi[0], xi[0] - xi[1]};
}

std::array<AngleModPi, 3> interior_angles(const TriangleVariable& T) {
  std::array<AngleModPi, 3> xi;
  for (int i = 0; i < 3; ++i) {
    if (!T.arguments[i])
      throw DomainError(std::string("free argument ξ_") + kSlotName[i] + " is unset");
    xi[i] = *T.arguments[i];
  }
  return interior_angles(xi);
}

const std::array<GroupElement, 12>& GroupElement::all() {
  static const std::array<GroupElement, 12> elems = [] {
    constexpr std::array<std::array<int, 3>, 6> perms{{
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
    }};
    std::array<GroupElement, 12> out;
    for (int f = 0; f < 2; ++f)
      for (int p = 0; p < 6; ++p)
        out[6 * f + p] = GroupElement{perms[p], f == 0 ? 1 : -1};
    return out;
  }();
  return elems;
}

int GroupElement::parity() const noexcept {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      inversions += perm[i] > perm[j];
  return inversions % 2 == 0 ? 1 : -1;
}

GroupElement GroupElement::inverse() const noexcept {
  GroupElement g;
  for (int i = 0; i < 3; ++i)
    g.perm[perm[i]] = i;
  g.flip = flip;
  return g;
}

GroupElement GroupElement::operator*(const GroupElement& h) const noexcept {
  GroupElement g;
  for (int i = 0; i < 3; ++i)
    g.perm[i] = perm[h.perm[i]];
  g.flip = flip * h.flip;
  return g;
}

TriangleVariable act(const GroupElement& g, const TriangleVariable& T) {
  TriangleVariable out;
  out.basepoint = T.basepoint;
  std::array<cplx, 3> s{};
  std::array<double, 6> d{};
  for (int i = 0; i < 3; ++i) {
    const int j = g.perm[i];
    const cplx side = T.sides[i];
    const cplx pair = T.directions.pair(i);
    s[j] = g.flip > 0 ? side : std::conj(side);
    d[2 * j] = pair.real();
    d[2 * j + 1] = g.flip > 0 ? pair.imag() : -pair.imag();
    if (T.arguments[i])
      out.arguments[j] = g.flip > 0 ? *T.arguments[i] : -*T.arguments[i];
  }
  out.sides.v = s; // permutation and conjugation keep the exact closure
  out.directions = DirectionTriple{d};
  return out;
}

bool same_variable(const TriangleVariable& x, const TriangleVariable& y, double tol) {
  const double s = std::max({1.0, x.sides.scale(), y.sides.scale()});
  if (std::abs(x.basepoint - y.basepoint) > tol * s)
    return false;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(x.sides[i] - y.sides[i]) > tol * s)
      return false;
    if (x.arguments[i].has_value() != y.arguments[i].has_value())
      return false;
    if (x.arguments[i] && angle_dist(*x.arguments[i], *y.arguments[i]) > tol)
      return false;
  }
  return directions_close(x.directions, y.directions, tol);
}

std::vector<std::string> validate(const TriangleVariable& T, double tol) {
  std::vector<std::string> out;
  const auto& d = T.directions.coords();
  if (!T.sides.all_zero() &&
      !directions_close(T.directions, DirectionTriple::of_sides(T.sides), tol))
    out.emplace_back("directions inconsistent with sides");
  if (std::abs(d[0] + d[2] + d[4]) > tol)
    out.emplace_back("direction triple violates a1+b1+c1=0");
  if (std::abs(d[1] + d[3] + d[5]) > tol)
    out.emplace_back("direction triple violates a2+b2+c2=0");
  if (std::abs(T.sides.a() + T.sides.b() + T.sides.c()) > tol * std::max(1.0, T.sides.scale()))
    out.emplace_back("side triple violates a+b+c=0");
  for (int i = 0; i < 3; ++i) {
    const cplx p = T.directions.pair(i);
    if (std::abs(p) <= tol)
      continue;
    const std::string name = std::string("argument ξ_") + kSlotName[i];
    if (!T.arguments[i])
      out.push_back(name + " missing");
    else if (angle_dist(*T.arguments[i], rho(ProjPoint1R{p.real(), p.imag()})) > tol)
      out.push_back(name + " inconsistent with direction");
  }
  return out;
}

} // namespace dyck
