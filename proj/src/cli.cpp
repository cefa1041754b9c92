#include "toriclift/cli.hpp"

#include "toriclift/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>

namespace toriclift {

namespace {

std::string point_text(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

std::string set_text(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

RatVector parse_point(const std::string& text, int n, const std::string& flag) {
  std::vector<Rational> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      xs.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(flag + ": " + e.what());
    }
  }
  if (static_cast<int>(xs.size()) != n)
    throw ParseError(flag + ": expected " + std::to_string(n) + " comma-separated rationals");
  RatVector v(n);
  for (int i = 0; i < n; ++i) v(i) = xs[i];
  return v;
}

void print_conditions(std::ostream& out, const std::vector<ConditionEntry>& cs) {
  for (const auto& c : cs)
    out << "  [" << to_string(c.outcome) << "] " << c.condition << " @ " << c.location
        << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

struct LiftRun {
  std::string name;
  LiftVerdict verdict;
};

LiftRun run_lift(const HPolytope& P, const CurveInput& c, int order) {
  LiftOptions opts;
  opts.order = order;
  opts.chart_vertices = c.chart_vertices;
  return {c.name, check_lift(P, c.curve, CircleEmbedding(c.circle), opts)};
}

void print_lift(std::ostream& out, const LiftRun& r) {
  out << r.name << ": " << to_string(r.verdict.verdict) << "\n";
  for (const auto& e : r.verdict.endpoints) {
    out << (e.endpoint == Endpoint::start ? " start" : " end");
    if (e.point.size()) out << " " << point_text(e.point);
    if (e.chart_vertex) out << ", chart at " << point_text(*e.chart_vertex);
    if (e.graph) out << ", weights " << point_text(e.graph->k.cast<Rational>()) << ", Q " << set_text(e.graph->Q);
    out << "\n";
    print_conditions(out, e.conditions);
  }
  out << " interior\n";
  print_conditions(out, r.verdict.interior);
}

std::vector<std::string> batch_files(const std::string& dir) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("--batch: not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ParseError("--batch: no .json curve files in " + dir);
  return files;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delzant/quasitoric polytope checks and S^1-equivariant lift criterion"};
  app.name("toriclift");
  app.require_subcommand(1);

  std::string poly_path, second_path, batch_dir, out_path, format = "csv", endpoint = "start";
  std::string t1, t2, r1, r2;
  std::vector<std::string> curve_paths;
  std::vector<int> projection{0, 1, 2};
  bool json = false, relaxed = false;
  int order = kDefaultJetOrder, nx = 64, nt = 128;
  std::optional<double> x_max;

  auto* validate = app.add_subcommand("validate", "Delzant report for a polytope");
  validate->add_option("polytope", poly_path)->required();
  validate->add_flag("--json", json);

  auto* quasi = app.add_subcommand("quasitoric", "determinant report for a facet-vector assignment");
  quasi->add_option("polytope", poly_path)->required();
  quasi->add_option("vectors", second_path)->required();
  quasi->add_flag("--relaxed", relaxed, "accept det = -1 as well");
  quasi->add_flag("--json", json);

  auto* faces = app.add_subcommand("faces", "face lattice dump");
  faces->add_option("polytope", poly_path)->required();
  faces->add_flag("--json", json);

  auto* equiv = app.add_subcommand("equiv", "is (t1, r) equivalent to (t2, r') in T^n x P / ~");
  equiv->add_option("polytope", poly_path)->required();
  equiv->add_option("--t1", t1, "torus point, comma-separated rationals (mod 1)")->required();
  equiv->add_option("--t2", t2)->required();
  equiv->add_option("--r", r1, "base point in P")->required();
  equiv->add_option("--r2", r2, "base point of the second pair (default: --r)");
  equiv->add_flag("--json", json);

  auto* lift = app.add_subcommand("lift-check", "decide whether curves lift to smooth symplectic surfaces");
  lift->add_option("polytope", poly_path)->required();
  lift->add_option("curves", curve_paths);
  lift->add_option("--batch", batch_dir, "check every .json curve file in a directory");
  lift->add_option("--max-order", order, "jet truncation order")->check(CLI::Range(1, 64));
  lift->add_flag("--json", json);

  auto* sample = app.add_subcommand("sample", "sample the rotated surface near an endpoint and export a mesh");
  sample->add_option("polytope", poly_path)->required();
  sample->add_option("curve", second_path)->required();
  sample->add_option("--nx", nx)->check(CLI::PositiveNumber);
  sample->add_option("--nt", nt)->check(CLI::PositiveNumber);
  sample->add_option("--out", out_path, "mesh file")->required();
  sample->add_option("--format", format)->check(CLI::IsMember({"csv", "obj"}));
  sample->add_option("--project", projection, "three 0-based coordinates for OBJ output")
      ->delimiter(',')
      ->expected(3);
  sample->add_option("--endpoint", endpoint)->check(CLI::IsMember({"start", "end"}));
  sample->add_option("--x-max", x_max, "sampling range in x1 (default: the whole graph)");
  sample->add_option("--max-order", order)->check(CLI::Range(1, 64));
  sample->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "toriclift: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      HPolytope P = polytope_from_json(read_json_file(poly_path), poly_path);
      DelzantReport r = validate_delzant(P);
      if (json) {
        out << dump(to_json(r));
      } else {
        out << "Delzant: " << (r.pass ? "pass" : "fail") << "\n";
        for (const auto& v : r.vertices) {
          out << "  vertex " << point_text(v.vertex) << " facets " << set_text(v.active);
          if (!v.simple) out << ": not simple";
          else {
            out << ": det U = " << to_string(*v.det);
            if (!v.rational) out << ", edge misses the next vertex";
            if (!v.smooth) out << ", not smooth (|det| = " << to_string(Integer(mp::abs(*v.det))) << ")";
          }
          out << "\n";
        }
      }
      return r.pass ? kExitPass : kExitFail;
    }

    if (quasi->parsed()) {
      HPolytope P = polytope_from_json(read_json_file(poly_path), poly_path);
      auto vecs = facet_vectors_from_json(read_json_file(second_path), P.dimension(), second_path);
      if (static_cast<int>(vecs.size()) != P.facet_count())
        throw ParseError(second_path + ": expected " + std::to_string(P.facet_count()) + " facet vectors, got " +
                         std::to_string(vecs.size()));
      QuasitoricReport r = validate_quasitoric(P, vecs, !relaxed);
      if (json) {
        out << dump(to_json(r));
      } else {
        out << "quasitoric (" << (r.strict ? "det = 1" : "|det| = 1") << "): " << (r.pass ? "pass" : "fail") << "\n";
        for (const auto& v : r.vertices)
          out << "  vertex " << point_text(v.vertex) << " facets " << set_text(v.active) << ": det " << to_string(v.det)
              << (v.ok ? "" : "  <- fails") << "\n";
      }
      return r.pass ? kExitPass : kExitFail;
    }

    if (faces->parsed()) {
      HPolytope P = polytope_from_json(read_json_file(poly_path), poly_path);
      auto fl = face_lattice(P);
      Json j = faces_to_json(fl);
      if (json) {
        out << dump(j);
      } else {
        out << "f-vector " << j["f_vector"].dump() << ", Euler characteristic " << j["euler_characteristic"].dump()
            << "\n";
        for (const auto& f : fl) {
          out << "  dim " << f.dim << " facets " << set_text(f.active) << ":";
          for (const auto& v : f.vertices) out << " " << point_text(v);
          out << "\n";
        }
      }
      return kExitPass;
    }

    if (equiv->parsed()) {
      HPolytope P = polytope_from_json(read_json_file(poly_path), poly_path);
      const int n = P.dimension();
      RatVector a = parse_point(t1, n, "--t1"), b = parse_point(t2, n, "--t2");
      RatVector p = parse_point(r1, n, "--r"), q = r2.empty() ? p : parse_point(r2, n, "--r2");
      for (const auto* pt : {&p, &q})
        if (!P.contains(*pt)) throw DomainError("base point " + point_text(*pt) + " is outside the polytope");
      bool same = points_equivalent(P, a, p, b, q);
      Face F = minimal_face(P, p);
      if (json) {
        out << dump(Json{{"equivalent", same}, {"face_dim", F.dim}, {"face_active", F.active}});
      } else {
        out << (same ? "equivalent" : "not equivalent") << " (base face of dim " << F.dim << ", facets "
            << set_text(F.active) << ")\n";
      }
      return same ? kExitPass : kExitFail;
    }

    if (lift->parsed()) {
      std::vector<std::string> paths = curve_paths;
      if (!batch_dir.empty()) {
        auto more = batch_files(batch_dir);
        paths.insert(paths.end(), more.begin(), more.end());
      }
      if (paths.empty()) throw ParseError("lift-check: give curve files or --batch");
      ProblemBundle b = load_bundle(poly_path, paths, order);
      std::vector<std::future<LiftRun>> jobs;
      for (const auto& c : b.curves)
        jobs.push_back(std::async(std::launch::async, [&b, &c] { return run_lift(b.polytope, c, b.order); }));
      std::vector<LiftRun> runs;
      for (auto& j : jobs) runs.push_back(j.get());  // input order, whatever finished first

      int code = kExitPass;
      bool any_reject = false, any_unknown = false;
      for (const auto& r : runs) {
        any_reject |= r.verdict.verdict == Verdict::reject;
        any_unknown |= r.verdict.verdict == Verdict::inconclusive;
      }
      if (any_reject) code = kExitFail;
      else if (any_unknown) code = kExitInconclusive;

      if (json) {
        if (runs.size() == 1 && batch_dir.empty()) {
          out << dump(to_json(runs.front().verdict));
        } else {
          Json all = Json::array();
          for (const auto& r : runs) {
            Json j{{"curve", r.name}};
            j.update(to_json(r.verdict));
            all.push_back(j);
          }
          out << dump(Json{{"results", all}});
        }
      } else {
        for (const auto& r : runs) print_lift(out, r);
      }
      return code;
    }

    if (sample->parsed()) {
      ProblemBundle b = load_bundle(poly_path, {second_path}, order);
      const CurveInput& c = b.curves.front();
      const Endpoint e = endpoint == "end" ? Endpoint::end : Endpoint::start;
      GraphOptions go{order, c.chart_vertices[static_cast<int>(e)]};
      GraphBuild g = build_graph(b.polytope, c.curve, e, CircleEmbedding(c.circle), go);
      if (!g.graph) {
        err << "toriclift: no graph at the " << endpoint << " endpoint\n";
        for (const auto& cond : g.conditions)
          err << "  [" << to_string(cond.outcome) << "] " << cond.condition << ": " << cond.detail << "\n";
        return kExitFail;
      }
      SurfaceSample s = sample_surface(*g.graph, nx, nt, x_max);
      std::array<int, 3> proj{projection[0], projection[1], projection[2]};
      export_mesh(s, format == "obj" ? MeshFormat::obj : MeshFormat::csv, out_path, proj);
      ProbeResult probe = probe_endpoint(*g.graph);
      if (json) {
        out << dump(Json{{"out", out_path},
                         {"format", format},
                         {"nx", nx},
                         {"nt", nt},
                         {"points", s.count()},
                         {"weights", to_json(g.graph->k)},
                         {"provenance", s.provenance},
                         {"probe", to_json(probe)}});
      } else {
        out << "wrote " << s.count() << " points (" << nx << " x " << nt << ") to " << out_path << "\n"
            << "  " << s.provenance << ", weights " << point_text(g.graph->k.cast<Rational>()) << "\n"
            << "  probe: " << to_string(probe.kind) << " (" << probe.detail << ")\n";
      }
      return kExitPass;
    }
  } catch (const ParseError& e) {
    err << "toriclift: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "toriclift: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "toriclift: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace toriclift
