#include "dyck/io.hpp"

namespace dyck::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw DomainError(path + ": " + msg);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object())
    fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    fail(path + "." + key, "missing");
  return *it;
}

double real_at(const json& j, const std::string& path) {
  if (!j.is_number())
    fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x))
    fail(path, "expected a finite number");
  return x;
}

cplx complex_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2)
    fail(path, "expected [re, im]");
  return {real_at(j[0], path + "[0]"), real_at(j[1], path + "[1]")};
}

const json& array_of(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n)
    fail(path, "expected an array of " + std::to_string(n));
  return j;
}

std::array<cplx, 3> sides_at(const json& j, const std::string& path) {
  const json& a = array_of(j, 3, path);
  std::array<cplx, 3> s;
  for (int i = 0; i < 3; ++i)
    s[i] = complex_at(a[i], path + "[" + std::to_string(i) + "]");
  return s;
}

json angles_json(const std::array<AngleModPi, 3>& a) {
  return json::array({a[0].value(), a[1].value(), a[2].value()});
}

} // namespace

json to_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json to_json(const TriangleVariable& T) {
  json args = json::array();
  for (const auto& a : T.arguments)
    args.push_back(a ? json(a->value()) : json(nullptr));
  return json{{"basepoint", to_json(T.basepoint)},
              {"sides", json::array({to_json(T.sides.a()), to_json(T.sides.b()), to_json(T.sides.c())})},
              {"directions", T.directions.coords()},
              {"arguments", args}};
}

json to_json(const ProjTripleC& s) {
  return json::array({to_json(s[0]), to_json(s[1]), to_json(s[2])});
}

json to_json(const ShapeClass& c) {
  return json{{"sides", to_json(c.sides())}, {"angles", angles_json(c.angles())}};
}

json to_json(const BlowupCoord& b) {
  return json{{"sides", to_json(b.sides())}, {"xi", angles_json(b.xi())}, {"gauge", "largest-side-zero"}};
}

json to_json(const SpherePoint& s) { return json::array({s.x + 0.0, s.y + 0.0, s.z + 0.0}); }

json to_json(const TorusPoint& t) { return angles_json(t.angles()); }

json to_json(const SphereLoci& l) { return l.names(); }

json to_json(const PonceletConfig& cfg) {
  return json{{"r", cfg.r}, {"R", cfg.R}, {"d", cfg.d}};
}

json to_json(const SeparationReport& rep) {
  auto point = [](const ModelPoint& p) {
    return std::visit([](const auto& x) { return to_json(x); }, p);
  };
  return json{{"model", to_string(rep.model)},
              {"limit1", point(rep.limit1)},
              {"limit2", point(rep.limit2)},
              {"distance", rep.distance},
              {"verdict", to_string(rep.verdict)}};
}

TriangleVariable triangle_from_json(const json& j, double tol) {
  TriangleVariable T;
  T.basepoint = j.contains("basepoint") ? complex_at(j["basepoint"], "basepoint") : cplx{};
  const auto s = sides_at(field(j, "sides", "triangle"), "sides");
  try {
    T.sides = SideTriple{s[0], s[1], s[2], tol};
  } catch (const DomainError& e) {
    fail("sides", e.what());
  }

  if (j.contains("directions") && !j["directions"].is_null()) {
    const json& d = array_of(j["directions"], 6, "directions");
    std::array<double, 6> v;
    for (int i = 0; i < 6; ++i)
      v[i] = real_at(d[i], "directions[" + std::to_string(i) + "]");
    try {
      T.directions = DirectionTriple{v};
    } catch (const DomainError& e) {
      fail("directions", e.what());
    }
  } else if (T.sides.all_zero()) {
    fail("directions", "required at a triple point");
  } else {
    T.directions = DirectionTriple::of_sides(T.sides);
  }

  const json* args = nullptr;
  if (j.contains("arguments") && !j["arguments"].is_null())
    args = &array_of(j["arguments"], 3, "arguments");
  for (int i = 0; i < 3; ++i) {
    if (args && !(*args)[i].is_null()) {
      T.arguments[i] = reduce_mod_pi(real_at((*args)[i], "arguments[" + std::to_string(i) + "]"));
    } else {
      const cplx p = T.directions.pair(i);
      if (p != cplx{})
        T.arguments[i] = rho(ProjPoint1R{p.real(), p.imag()});
    }
  }

  const auto problems = validate(T, tol);
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems)
      msg += (msg.empty() ? "" : "; ") + p;
    fail("triangle", msg);
  }
  return T;
}

TriangleVariable triangle_from_json(const std::string& text, double tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("triangle: malformed JSON: ") + e.what());
  }
  return triangle_from_json(j, tol);
}

ShapeClass class_from_json(const json& j) {
  const auto s = sides_at(field(j, "sides", "class"), "sides");
  const json& a = array_of(field(j, "angles", "class"), 3, "angles");
  std::array<AngleModPi, 3> ang;
  for (int i = 0; i < 3; ++i)
    ang[i] = reduce_mod_pi(real_at(a[i], "angles[" + std::to_string(i) + "]"));
  try {
    return ShapeClass{ProjTripleC{s[0], s[1], s[2]}, ang};
  } catch (const DomainError& e) {
    fail("class", e.what());
  }
}

std::string compact(const json& j) { return j.dump(); }

} // namespace dyck::io
