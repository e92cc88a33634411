#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dyck/acceptance.hpp"
#include "dyck/figures.hpp"
#include "dyck/io.hpp"

namespace dyck::cli {

namespace {

using io::json;

// Bad option values detected after parsing; reported like CLI11 usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    double x = 0.0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    if (first != last && *first == '+')
      ++first;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (first == last || ec != std::errc{} || ptr != last || !std::isfinite(x))
      throw UsageError(what + ": '" + text + "' is not a comma-separated list of numbers");
    out.push_back(x);
    if (end == text.size())
      return out;
    start = end + 1;
  }
}

std::vector<double> parse_reals(const std::string& text, std::size_t n, const std::string& what) {
  auto v = parse_reals(text, what);
  if (v.size() != n)
    throw UsageError(what + ": expected " + std::to_string(n) + " numbers, got '" + text + "'");
  return v;
}

cplx parse_point(const std::string& text, const std::string& what) {
  const auto v = parse_reals(text, 2, what);
  return {v[0], v[1]};
}

double tolerance_from_env() {
  const char* env = std::getenv("SHAPE_TOL");
  if (!env || !*env)
    return kDefaultTol;
  const auto v = parse_reals(env, 1, "SHAPE_TOL");
  if (!(v[0] > 0.0))
    throw UsageError("SHAPE_TOL must be positive");
  return v[0];
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + '"';
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Triangle input shared by classify, project and orbit.
struct TriangleInput {
  std::vector<std::string> vertices;
  std::string json_text;
  std::string directions;
  std::vector<std::string> free_args;
  bool inscribed_default = false;

  void attach(CLI::App* sub) {
    auto* v = sub->add_option("--vertices", vertices, "vertices A B C as re,im")->expected(3);
    auto* j = sub->add_option("--json", json_text, "triangle variable as JSON text or @file");
    v->excludes(j);
    sub->add_option("--directions", directions, "a1,a2,b1,b2,c1,c2 (required at a triple point)")
        ->excludes(j);
    sub->add_option("--free-args", free_args,
                    "free arguments for slots a b c: a number or '-' for unset")
        ->expected(3)
        ->excludes(j);
    sub->add_flag("--inscribed-default", inscribed_default,
                  "unset free arguments follow the line of the remaining sides")
        ->excludes(j);
  }

  TriangleVariable get(double tol) const {
    if (!json_text.empty()) {
      std::string text = json_text;
      if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
          throw UsageError("--json: cannot read " + text.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      return io::triangle_from_json(text, tol);
    }
    if (vertices.empty())
      throw UsageError("one of --vertices or --json is required");
    VertexOptions opts;
    opts.tol = tol;
    opts.inscribed_default = inscribed_default;
    if (!directions.empty()) {
      const auto d = parse_reals(directions, 6, "--directions");
      opts.directions = DirectionTriple{{d[0], d[1], d[2], d[3], d[4], d[5]}};
    }
    for (std::size_t i = 0; i < free_args.size(); ++i)
      if (free_args[i] != "-")
        opts.free_args[i] = reduce_mod_pi(parse_reals(free_args[i], 1, "--free-args")[0]);
    return from_vertices(parse_point(vertices[0], "--vertices"), parse_point(vertices[1], "--vertices"),
                         parse_point(vertices[2], "--vertices"), opts);
  }
};

json angles_or_null(const TriangleVariable& T) {
  try {
    const auto a = interior_angles(T);
    return json::array({a[0].value(), a[1].value(), a[2].value()});
  } catch (const DomainError&) {
    return nullptr; // a double point without a free argument
  }
}

Family family_from_args(const std::string& kind, double value) {
  if (kind == "constant-angle") {
    if (!(value > 0.0 && value < kPi))
      throw UsageError("constant-angle parameter must lie in (0, pi)");
    return constant_angle_family(reduce_mod_pi(value));
  }
  if (kind == "constant-ratio") {
    if (!(value > 0.0))
      throw UsageError("constant-ratio parameter must be positive");
    return constant_ratio_family(value);
  }
  throw UsageError("unknown family '" + kind + "'");
}

Model parse_model(const std::string& m) {
  if (m == "dyck")
    return Model::Dyck;
  if (m == "sphere")
    return Model::Sphere;
  return Model::Torus;
}

json sphere_json(const SpherePoint& s, double tol) {
  return json{{"model", "sphere"}, {"point", io::to_json(s)},
              {"loci", io::to_json(classify_sphere_locus(s, tol))}};
}

json torus_json(const TorusPoint& t, double tol) {
  return json{{"model", "torus"}, {"point", io::to_json(t)},
              {"lifted_sum", lifted_sum(t, tol)}, {"sheet", sheet_label(t, tol)}};
}

json dyck_json(const ShapeClass& c) {
  return json{{"model", "dyck"}, {"class", io::to_json(c)}, {"blowup", io::to_json(phi(c))}};
}

class Cli {
public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    app_.description("Labeled, oriented, possibly degenerate triangle similarity classes");
    app_.require_subcommand(1);
    setup_classify();
    setup_project();
    setup_orbit();
    setup_trace();
    setup_poncelet();
    setup_separate();
    setup_selftest();
    setup_emit_figure();
  }

  int run(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end()); // CLI11 consumes the vector from the back
    try {
      app_.parse(args);
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e, out_, err_);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e, out_, err_);
    } catch (const CLI::ParseError& e) {
      app_.exit(e, out_, err_);
      return 2;
    }
    try {
      tol_ = tolerance_from_env();
      return action_();
    } catch (const UsageError& e) {
      err_ << "usage error: " << e.what() << '\n';
      return 2;
    } catch (const std::invalid_argument& e) {
      err_ << "usage error: " << e.what() << '\n';
      return 2;
    } catch (const ConvergenceError& e) {
      err_ << "convergence error: " << e.what() << '\n';
      if (!e.trace().empty()) {
        err_ << "trace:";
        for (double d : e.trace())
          err_ << ' ' << format_real(d);
        err_ << '\n';
      }
      return 1;
    } catch (const DomainError& e) {
      err_ << "domain error: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return 1;
    }
  }

private:
  CLI::App* subcommand(const std::string& name, const std::string& help, std::function<int()> action) {
    auto* sub = app_.add_subcommand(name, help);
    sub->callback([this, action] { action_ = action; });
    return sub;
  }

  void add_format(CLI::App* sub) {
    sub->add_option("--format", format_, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  }

  bool csv() const { return format_ == "csv"; }

  void setup_classify() {
    auto* sub = subcommand("classify", "degeneracy type, orientation and interior angles", [this] {
      const TriangleVariable T = tri_.get(tol_);
      const json angles = angles_or_null(T);
      if (csv()) {
        out_ << "degeneracy,point_kind,orientation,alpha,beta,gamma\n"
             << to_string(classify(T, tol_)) << ',' << to_string(point_kind(T, tol_)) << ','
             << to_string(orientation(T, tol_));
        for (int i = 0; i < 3; ++i)
          out_ << ',' << (angles.is_null() ? "" : format_real(angles[i].get<double>()));
        out_ << '\n';
      } else {
        print_json(out_, json{{"degeneracy", to_string(classify(T, tol_))},
                              {"point_kind", to_string(point_kind(T, tol_))},
                              {"orientation", to_string(orientation(T, tol_))},
                              {"angles", angles},
                              {"triangle", io::to_json(T)}});
      }
      return 0;
    });
    tri_.attach(sub);
    add_format(sub);
  }

  void setup_project() {
    auto* sub = subcommand("project", "image of the class in one of the three models", [this] {
      const ShapeClass c = class_of(tri_.get(tol_));
      const Model m = parse_model(model_);
      if (csv()) {
        switch (m) {
        case Model::Sphere: {
          const SpherePoint s = to_sphere(c);
          out_ << "X,Y,Z,loci\n"
               << format_real(s.x) << ',' << format_real(s.y) << ',' << format_real(s.z) << ','
               << classify_sphere_locus(s, tol_).joined() << '\n';
          break;
        }
        case Model::Torus: {
          const TorusPoint t = to_torus(c);
          out_ << "P,Q,R,lifted_sum,sheet\n"
               << format_real(t.p.value()) << ',' << format_real(t.q.value()) << ','
               << format_real(t.r.value()) << ',' << format_real(lifted_sum(t, tol_)) << ','
               << sheet_label(t, tol_) << '\n';
          break;
        }
        case Model::Dyck:
          out_ << "class\n" << csv_quote(io::compact(io::to_json(c))) << '\n';
          break;
        }
        return 0;
      }
      switch (m) {
      case Model::Sphere: print_json(out_, sphere_json(to_sphere(c), tol_)); break;
      case Model::Torus: print_json(out_, torus_json(to_torus(c), tol_)); break;
      case Model::Dyck: print_json(out_, dyck_json(c)); break;
      }
      return 0;
    });
    tri_.attach(sub);
    sub->add_option("--model", model_, "target model")
        ->check(CLI::IsMember({"sphere", "torus", "dyck"}))
        ->capture_default_str();
    add_format(sub);
  }

  void setup_orbit() {
    auto* sub = subcommand("orbit", "distinct images of the class under relabeling and reflection", [this] {
      const ShapeClass c = class_of(tri_.get(tol_));
      const auto elems = orbit(c, tol_);
      const ShapeClass rep = canonical_rep(c, tol_);
      if (csv()) {
        out_ << "index,class,X,Y,Z\n";
        for (std::size_t i = 0; i < elems.size(); ++i) {
          const SpherePoint s = to_sphere(elems[i]);
          out_ << i << ',' << csv_quote(io::compact(io::to_json(elems[i]))) << ','
               << format_real(s.x) << ',' << format_real(s.y) << ',' << format_real(s.z) << '\n';
        }
        return 0;
      }
      json list = json::array();
      for (const auto& e : elems)
        list.push_back(io::to_json(e));
      print_json(out_, json{{"size", elems.size()}, {"canonical", io::to_json(rep)}, {"orbit", list}});
      return 0;
    });
    tri_.attach(sub);
    add_format(sub);
  }

  Family trace_family() const {
    if (family_ == "poncelet") {
      const PonceletConfig cfg = poncelet_config();
      return Family{"poncelet", [cfg](double t) { return poncelet_family(cfg, t); }, 0.0, 2 * kPi,
                    LimitEnd::Lower};
    }
    if (family_ == "inscribed") {
      const cplx B = parse_point(B_, "--B"), C = parse_point(C_, "--C"),
                 O = parse_point(center_, "--center");
      return inscribed_family(B, C, O, std::abs(C - O));
    }
    return family_from_args(family_, family_ == "constant-angle" ? alpha_ : ratio_);
  }

  PonceletConfig poncelet_config() const {
    if (!(r_ > 0.0 && R_ > 0.0 && r_ <= R_ / 2))
      throw DomainError("poncelet: need 0 < r <= R/2");
    return PonceletConfig::from_radii(r_, R_);
  }

  void setup_trace() {
    auto* sub = subcommand("trace", "classes and model points along a family", [this] {
      const Family f = trace_family();
      const bool degenerating = family_ == "constant-angle" || family_ == "constant-ratio";
      std::vector<double> ts;
      if (!ts_.empty()) {
        ts = parse_reals(ts_, "--t");
      } else if (degenerating) {
        ts = family_schedule(f);
      } else {
        for (std::size_t k = 0; k < samples_; ++k)
          ts.push_back(f.lo + (f.hi - f.lo) * static_cast<double>(k) / static_cast<double>(samples_));
      }
      std::optional<LimitTrace> limit;
      if (degenerating && ts_.empty())
        limit = limit_class_traced(f, ts, tol_);

      struct Row {
        std::string t;
        ShapeClass cls;
      };
      std::vector<Row> rows;
      for (double t : ts)
        rows.push_back({format_real(t), class_of(f.eval(t))});
      if (limit)
        rows.push_back({"limit", limit->limit});

      if (csv()) {
        out_ << "t,class,X,Y,Z,P,Q,R\n";
        for (const auto& r : rows) {
          const SpherePoint s = to_sphere(r.cls);
          const TorusPoint p = to_torus(r.cls);
          out_ << r.t << ',' << csv_quote(io::compact(io::to_json(r.cls))) << ',' << format_real(s.x)
               << ',' << format_real(s.y) << ',' << format_real(s.z) << ',' << format_real(p.p.value())
               << ',' << format_real(p.q.value()) << ',' << format_real(p.r.value()) << '\n';
        }
        return 0;
      }
      json list = json::array();
      for (std::size_t i = 0; i < ts.size(); ++i)
        list.push_back(json{{"t", ts[i]},
                            {"class", io::to_json(rows[i].cls)},
                            {"sphere", io::to_json(to_sphere(rows[i].cls))},
                            {"torus", io::to_json(to_torus(rows[i].cls))}});
      json j{{"family", f.label}, {"rows", list}};
      if (limit)
        j["limit"] = json{{"class", io::to_json(limit->limit)},
                          {"sphere", io::to_json(to_sphere(limit->limit))},
                          {"torus", io::to_json(to_torus(limit->limit))},
                          {"distances", limit->distances},
                          {"error_estimate", limit->error_estimate}};
      print_json(out_, j);
      return 0;
    });
    sub->add_option("--family", family_, "family to trace")
        ->required()
        ->check(CLI::IsMember({"poncelet", "inscribed", "constant-angle", "constant-ratio"}));
    sub->add_option("--r", r_, "poncelet inradius")->capture_default_str();
    sub->add_option("--R", R_, "poncelet circumradius")->capture_default_str();
    sub->add_option("--B", B_, "inscribed: fixed vertex B as re,im")->capture_default_str();
    sub->add_option("--C", C_, "inscribed: fixed vertex C as re,im")->capture_default_str();
    sub->add_option("--center", center_, "inscribed: circle center as re,im")->capture_default_str();
    sub->add_option("--alpha", alpha_, "constant-angle: angle at A in (0, pi)")->capture_default_str();
    sub->add_option("--ratio", ratio_, "constant-ratio: |c| / |b|")->capture_default_str();
    sub->add_option("--samples", samples_, "parameter samples for poncelet and inscribed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--t", ts_, "explicit comma-separated parameter values");
    add_format(sub);
  }

  void setup_poncelet() {
    auto* sub = subcommand("poncelet", "Poncelet triangles between two circles", [this] {
      const PonceletConfig cfg = poncelet_config();
      struct Row {
        double theta;
        TriangleVariable T;
        PonceletConfig got;
        double residual;
      };
      std::vector<Row> rows;
      for (std::size_t k = 0; k < samples_; ++k) {
        const double theta = 2 * kPi * static_cast<double>(k) / static_cast<double>(samples_);
        const TriangleVariable T = poncelet_family(cfg, theta);
        rows.push_back({theta, T, incircle_outcircle(T, tol_), poncelet_closure_residual(cfg, T)});
      }
      if (csv()) {
        out_ << "theta,Ax,Ay,Bx,By,Cx,Cy,r_over_R,closure_residual\n";
        for (const auto& r : rows) {
          out_ << format_real(r.theta);
          for (const cplx v : r.T.vertices())
            out_ << ',' << format_real(v.real()) << ',' << format_real(v.imag());
          out_ << ',' << format_real(r.got.r / r.got.R) << ',' << format_real(r.residual) << '\n';
        }
        return 0;
      }
      json list = json::array();
      for (const auto& r : rows) {
        const auto [A, B, C] = r.T.vertices();
        list.push_back(json{{"theta", r.theta},
                            {"vertices", json::array({io::to_json(A), io::to_json(B), io::to_json(C)})},
                            {"r_over_R", r.got.r / r.got.R},
                            {"closure_residual", r.residual}});
      }
      print_json(out_, json{{"config", io::to_json(cfg)},
                            {"r_over_R", cfg.r / cfg.R},
                            {"chapple_residual", cfg.chapple_residual()},
                            {"triangles", list}});
      return 0;
    });
    sub->add_option("--r", r_, "inradius")->required();
    sub->add_option("--R", R_, "circumradius")->required();
    sub->add_option("--samples", samples_, "triangles along the family")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(sub);
  }

  void setup_separate() {
    auto* sub = subcommand("separate", "compare the degenerate limits of two families in one model", [this] {
      const auto colon = pair_.find(':');
      if (colon == std::string::npos)
        throw UsageError("--pair: expected KIND:p1,p2");
      const std::string kind = pair_.substr(0, colon);
      const auto p = parse_reals(pair_.substr(colon + 1), 2, "--pair");
      const Family f1 = family_from_args(kind, p[0]);
      const Family f2 = family_from_args(kind, p[1]);
      const SeparationReport rep = separation_test(f1, f2, parse_model(model_), threshold_, tol_);
      if (csv())
        out_ << "model,distance,verdict\n"
             << to_string(rep.model) << ',' << format_real(rep.distance) << ',' << to_string(rep.verdict)
             << '\n';
      else
        print_json(out_, io::to_json(rep));
      return 0;
    });
    sub->add_option("--pair", pair_, "constant-angle:a1,a2 or constant-ratio:k1,k2")->required();
    sub->add_option("--model", model_, "model to compare in")
        ->check(CLI::IsMember({"sphere", "torus", "dyck"}))
        ->capture_default_str();
    sub->add_option("--threshold", threshold_, "separation threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(sub);
  }

  void setup_selftest() {
    auto* sub = subcommand("selftest", "run the acceptance suite", [this] {
      bool ok = true;
      for (const auto& r : acceptance::run_all(selftest_seed_)) {
        out_ << acceptance::format(r) << '\n';
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    });
    sub->add_option("--seed", selftest_seed_, "sampling seed")->capture_default_str();
  }

  void setup_emit_figure() {
    auto* sub = subcommand("emit-figure", "CSV data for a figure", [this] {
      const auto f = figure_from_name(figure_);
      FigureOptions opts;
      if (!levels_.empty())
        opts.levels = parse_reals(levels_, "--levels");
      opts.grid = grid_;
      opts.samples = samples_fig_;
      opts.seed = seed_;
      opts.tol = tol_;
      opts.parallel = !serial_;
      emit_figure(*f, opts, out_);
      return 0;
    });
    sub->add_option("name", figure_, "figure name")
        ->required()
        ->check(CLI::IsMember({"poncelet-levels", "sphere-atlas", "torus-atlas"}));
    sub->add_option("--levels", levels_, "comma-separated r/R levels (default 0.1,0.3,0.5)");
    sub->add_option("--grid", grid_, "alpha positions per level curve")->capture_default_str();
    sub->add_option("--samples", samples_fig_, "atlas size")->capture_default_str();
    sub->add_option("--seed", seed_, "atlas seed")->capture_default_str();
    sub->add_flag("--serial", serial_, "use the serial reference kernels");
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"dyck"};
  std::function<int()> action_;
  double tol_ = kDefaultTol;

  std::string format_ = "json";
  TriangleInput tri_;
  std::string model_ = "sphere";
  std::string family_;
  double r_ = 0.25, R_ = 1.0;
  std::string B_ = "-1,0", C_ = "1,0", center_ = "0,0";
  double alpha_ = kPi / 2, ratio_ = 2.0;
  std::size_t samples_ = 16;
  std::string ts_;
  std::string pair_;
  double threshold_ = kDefaultSeparation;
  std::uint64_t seed_ = 1;
  std::uint64_t selftest_seed_ = 20240611;
  std::string figure_;
  std::string levels_;
  std::size_t grid_ = 64, samples_fig_ = 500;
  bool serial_ = false;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace dyck::cli
