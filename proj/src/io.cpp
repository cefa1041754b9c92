#include "toriclift/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace toriclift {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) { throw ParseError(field + ": " + msg); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::string point_text(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

Json int_list(const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(x);
  return a;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_number_float()) fail(field, "floating-point literal " + j.dump() + " is not exact; write \"p/q\"");
  fail(field, "expected a rational \"p/q\", got " + j.dump());
}

Integer integer_from_json(const Json& j, const std::string& field) {
  Rational r = rational_from_json(j, field);
  if (!is_integer(r)) fail(field, "expected an integer, got " + to_string(r));
  return numerator(r);
}

RatVector rat_vector_from_json(const Json& j, const std::string& field, std::optional<int> size) {
  if (!j.is_array()) fail(field, "expected an array");
  if (size && static_cast<int>(j.size()) != *size)
    fail(field, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
  RatVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i], at(field, i));
  return v;
}

IntVector int_vector_from_json(const Json& j, const std::string& field, std::optional<int> size) {
  if (!j.is_array()) fail(field, "expected an array");
  if (size && static_cast<int>(j.size()) != *size)
    fail(field, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = integer_from_json(j[i], at(field, i));
  return v;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Integer& z) {
  // Small integers as numbers, anything wider as a string so nothing is lost.
  if (mp::abs(z) <= Integer(std::numeric_limits<long long>::max())) return z.convert_to<long long>();
  return z.str();
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

HPolytope polytope_from_json(const Json& j, const std::string& where) {
  const Json& nj = member(j, "n", where);
  if (!nj.is_number_integer() || nj.get<long long>() < 1) fail(sub(where, "n"), "expected a positive integer");
  const int n = nj.get<int>();
  const Json& fj = member(j, "facets", where);
  if (!fj.is_array()) fail(sub(where, "facets"), "expected an array");
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    std::string w = at(sub(where, "facets"), i);
    facets.push_back({int_vector_from_json(member(fj[i], "normal", w), sub(w, "normal"), n),
                      rational_from_json(member(fj[i], "offset", w), sub(w, "offset"))});
  }
  try {
    return HPolytope(n, std::move(facets));
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

Json polytope_to_json(const HPolytope& P) {
  Json j;
  j["n"] = P.dimension();
  Json fs = Json::array();
  for (const auto& f : P.facets()) fs.push_back(Json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  j["facets"] = fs;
  return j;
}

std::vector<IntVector> facet_vectors_from_json(const Json& j, int n, const std::string& where) {
  const Json* arr = &j;
  std::string w = where;
  if (j.is_object()) {
    arr = &member(j, "vectors", where);
    w = sub(where, "vectors");
  }
  if (!arr->is_array()) fail(w, "expected an array of vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(int_vector_from_json((*arr)[i], at(w, i), n));
  return out;
}

CurveInput curve_from_json(const Json& j, const HPolytope& P, const std::string& where) {
  const int n = P.dimension();
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("param") && !j["param"].is_string()) fail(sub(where, "param"), "expected a string");

  const Json& cj = member(j, "coords", where);
  const std::string cw = sub(where, "coords");
  if (!cj.is_array()) fail(cw, "expected an array");
  if (static_cast<int>(cj.size()) != n)
    fail(cw, "expected " + std::to_string(n) + " coordinates, got " + std::to_string(cj.size()));
  std::vector<RatJet> coords;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    std::string w = at(cw, i);
    const Json* coeffs = &cj[i];
    bool exact = true;
    if (cj[i].is_object()) {
      coeffs = &member(cj[i], "coeffs", w);
      if (cj[i].contains("exact")) {
        if (!cj[i]["exact"].is_boolean()) fail(sub(w, "exact"), "expected true or false");
        exact = cj[i]["exact"].get<bool>();
      }
      w = sub(w, "coeffs");
    }
    RatVector c = rat_vector_from_json(*coeffs, w);
    if (c.size() == 0) fail(w, "empty coefficient list");
    std::vector<Rational> cv(c.begin(), c.end());
    const int order = static_cast<int>(cv.size()) - 1;
    coords.emplace_back(std::move(cv), order, exact);
  }

  const RatVector dom = rat_vector_from_json(member(j, "domain", where), sub(where, "domain"), 2);
  if (!(dom(0) < dom(1))) fail(sub(where, "domain"), "expected [s0, s1] with s0 < s1");

  CurveInput in{"", ParametricCurve{std::move(coords), dom(0), dom(1)}, IntVector(), {}};
  in.circle = int_vector_from_json(member(j, "circle", where), sub(where, "circle"), n);
  try {
    CircleEmbedding check(in.circle);
  } catch (const DomainError& e) {
    fail(sub(where, "circle"), e.what());
  }

  if (j.contains("endpoints")) {
    const Json& ej = j["endpoints"];
    const std::string ew = sub(where, "endpoints");
    if (!ej.is_array() || ej.size() != 2) fail(ew, "expected an array of two endpoint objects");
    for (std::size_t e = 0; e < 2; ++e) {
      const std::string w = at(ew, e);
      if (ej[e].is_null()) continue;
      if (!ej[e].is_object()) fail(w, "expected an object");
      if (!ej[e].contains("chart_vertex") || ej[e]["chart_vertex"].is_null()) continue;
      RatVector v = rat_vector_from_json(ej[e]["chart_vertex"], sub(w, "chart_vertex"), n);
      if (!find_vertex(P, v)) fail(sub(w, "chart_vertex"), point_text(v) + " is not a vertex of the polytope");
      in.chart_vertices[e] = std::move(v);
    }
  }
  return in;
}

Json to_json(const RatJet& g) {
  Json c = Json::array();
  for (const auto& x : g.coeffs()) c.push_back(to_json(x));
  return Json{{"coeffs", c}, {"exact", g.exact()}};
}

Json curve_to_json(const CurveInput& c) {
  Json j;
  j["param"] = "s";
  Json coords = Json::array();
  for (const auto& g : c.curve.coords) {
    if (g.exact()) {
      Json a = Json::array();
      const RatPoly p = g.polynomial();
      for (const auto& x : p.coefficients()) a.push_back(to_json(x));
      if (a.empty()) a.push_back("0");
      coords.push_back(a);
    } else {
      coords.push_back(to_json(g));
    }
  }
  j["coords"] = coords;
  j["domain"] = Json::array({to_json(c.curve.s0), to_json(c.curve.s1)});
  j["circle"] = to_json(c.circle);
  Json ends = Json::array();
  for (const auto& v : c.chart_vertices) ends.push_back(Json{{"chart_vertex", v ? to_json(*v) : Json(nullptr)}});
  j["endpoints"] = ends;
  return j;
}

Json to_json(const ConditionEntry& c) {
  return Json{{"condition", c.condition}, {"location", c.location}, {"outcome", to_string(c.outcome)},
              {"detail", c.detail}};
}

Json to_json(const CurveGraph& g) {
  Json j;
  j["chart_vertex"] = to_json(g.chart.vertex());
  Json edges = Json::array();
  for (Eigen::Index c = 0; c < g.chart.edges().cols(); ++c) edges.push_back(to_json(IntVector(g.chart.edges().col(c))));
  j["edges"] = edges;
  j["param_index"] = g.param_index;
  j["coordinates"] = int_list(g.coordinate);
  j["weights"] = to_json(g.k);
  j["Q"] = int_list(g.Q);
  j["domain"] = to_json(g.domain);
  Json gs = Json::array();
  for (const auto& x : g.g) gs.push_back(to_json(x));
  j["g"] = gs;
  return j;
}

Json to_json(const LiftVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  Json ends = Json::array();
  for (const auto& e : v.endpoints) {
    Json r;
    r["endpoint"] = e.endpoint == Endpoint::start ? "start" : "end";
    r["point"] = e.point.size() ? to_json(e.point) : Json(nullptr);
    r["chart_vertex"] = e.chart_vertex ? to_json(*e.chart_vertex) : Json(nullptr);
    r["graph"] = e.graph ? to_json(*e.graph) : Json(nullptr);
    Json cs = Json::array();
    for (const auto& c : e.conditions) cs.push_back(to_json(c));
    r["conditions"] = cs;
    ends.push_back(r);
  }
  j["endpoints"] = ends;
  Json in = Json::array();
  for (const auto& c : v.interior) in.push_back(to_json(c));
  j["interior"] = in;
  return j;
}

Json to_json(const DelzantReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.vertices)
    vs.push_back(Json{{"vertex", to_json(v.vertex)},
                      {"active", int_list(v.active)},
                      {"simple", v.simple},
                      {"rational", v.rational},
                      {"smooth", v.smooth},
                      {"det", v.det ? to_json(*v.det) : Json(nullptr)}});
  return Json{{"delzant", r.pass}, {"vertices", vs}};
}

Json to_json(const QuasitoricReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.vertices)
    vs.push_back(Json{{"vertex", to_json(v.vertex)}, {"active", int_list(v.active)}, {"det", to_json(v.det)},
                      {"ok", v.ok}});
  return Json{{"quasitoric", r.pass}, {"strict", r.strict}, {"vertices", vs}};
}

Json faces_to_json(const std::vector<Face>& faces) {
  int top = 0;
  for (const auto& f : faces) top = std::max(top, f.dim);
  std::vector<int> fvec(top + 1, 0);
  long euler = 0;
  Json fs = Json::array();
  for (const auto& f : faces) {
    ++fvec[f.dim];
    euler += f.dim % 2 == 0 ? 1 : -1;
    Json vs = Json::array();
    for (const auto& v : f.vertices) vs.push_back(to_json(v));
    fs.push_back(Json{{"dim", f.dim}, {"active", int_list(f.active)}, {"vertices", vs}});
  }
  return Json{{"f_vector", int_list(fvec)}, {"euler_characteristic", euler}, {"faces", fs}};
}

Json to_json(const ProbeResult& r) {
  return Json{{"kind", to_string(r.kind)}, {"residual", r.residual}, {"ratio", r.ratio},
              {"aperture", r.aperture}, {"detail", r.detail}};
}

ProblemBundle load_bundle(const std::string& polytope_path, const std::vector<std::string>& curve_paths, int order) {
  if (order < 1) throw ParseError("--max-order: must be at least 1");
  HPolytope P = polytope_from_json(read_json_file(polytope_path), polytope_path);
  ProblemBundle b{std::move(P), {}, order};
  for (const auto& path : curve_paths) {
    CurveInput c = curve_from_json(read_json_file(path), b.polytope, path);
    c.name = std::filesystem::path(path).filename().string();
    b.curves.push_back(std::move(c));
  }
  return b;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace toriclift
