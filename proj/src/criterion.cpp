#include "toriclift/criterion.hpp"

#include <algorithm>

namespace toriclift {

namespace {

std::string describe(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

std::string describe(const RootInterval& r) {
  if (r.lo == r.hi) return "s = " + to_string(r.lo);
  return "s in [" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
}

std::string endpoint_label(Endpoint e) { return "endpoint " + std::to_string(static_cast<int>(e)); }

ConditionEntry entry(std::string condition, std::string location, Outcome outcome, std::string detail) {
  return {std::move(condition), std::move(location), outcome, std::move(detail)};
}

RatPoly pairing(const std::vector<RatPoly>& coords, const IntVector& direction) {
  RatPoly p;
  for (std::size_t i = 0; i < coords.size(); ++i)
    p = p + Rational(direction(static_cast<Eigen::Index>(i))) * coords[i];
  return p;
}

// Containment of the open arc in the interior of P, facet by facet.
std::vector<ConditionEntry> check_containment(const HPolytope& P, const ParametricCurve& curve) {
  std::vector<ConditionEntry> out;
  if (!curve.exact()) {
    out.push_back(entry("curve_in_polytope", "interior", Outcome::unknown,
                        "truncated series input: containment cannot be certified"));
    return out;
  }
  const auto coords = curve.polynomials();
  const Rational mid = (curve.s0 + curve.s1) / 2;
  bool ok = true;
  for (int i = 0; i < P.facet_count(); ++i) {
    RatPoly slack = RatPoly::constant(P.facet(i).offset) - pairing(coords, P.facet(i).normal);
    const std::string loc = "facet " + std::to_string(i);
    if (slack.is_zero()) {
      out.push_back(entry("interior_boundary_contact", loc, Outcome::fails, "curve lies in the facet"));
      ok = false;
      continue;
    }
    auto roots = isolate_roots(slack, curve.s0, curve.s1);
    if (!roots.empty()) {
      out.push_back(entry("interior_boundary_contact", loc, Outcome::fails,
                          "curve meets the boundary at " + describe(roots.front())));
      ok = false;
    } else if (slack(mid) < 0) {
      out.push_back(entry("curve_in_polytope", loc, Outcome::fails, "curve lies outside the polytope"));
      ok = false;
    }
  }
  if (ok)
    out.push_back(entry("curve_in_polytope", "interior", Outcome::holds,
                        "open arc lies in the interior of the polytope"));
  return out;
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::accept: return "accept";
    case Verdict::reject: return "reject";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

ParametricCurve ParametricCurve::polynomial(std::vector<RatPoly> coords, Rational s0, Rational s1) {
  ParametricCurve c;
  for (auto& p : coords) c.coords.push_back(RatJet::from_polynomial(p, std::max(p.degree(), 0)));
  c.s0 = std::move(s0);
  c.s1 = std::move(s1);
  return c;
}

bool ParametricCurve::exact() const {
  return std::all_of(coords.begin(), coords.end(), [](const RatJet& j) { return j.exact(); });
}

std::vector<RatPoly> ParametricCurve::polynomials() const {
  if (!exact()) throw std::logic_error("polynomials() on a truncated curve");
  std::vector<RatPoly> out;
  for (const auto& j : coords) out.push_back(j.polynomial());
  return out;
}

RatVector ParametricCurve::at(const Rational& s) const {
  RatVector v(dimension());
  for (int i = 0; i < dimension(); ++i) v(i) = coords[i](s);
  return v;
}

bool CurveGraph::in_q(int position) const { return std::find(Q.begin(), Q.end(), position) != Q.end(); }

GraphBuild build_graph(const HPolytope& P, const ParametricCurve& curve, Endpoint endpoint,
                       const CircleEmbedding& circle, const GraphOptions& options) {
  const int n = P.dimension();
  if (curve.dimension() != n) throw DomainError("curve dimension does not match the polytope");
  if (options.order < 1) throw DomainError("jet order must be at least 1");
  GraphBuild out;
  const std::string loc = endpoint_label(endpoint);
  const bool exact = curve.exact();

  if (!exact && !(endpoint == Endpoint::start && curve.s0 == 0)) {
    out.conditions.push_back(entry("series_expansion", loc, Outcome::unknown,
                                   "truncated series about s = 0 cannot be expanded at this endpoint"));
    return out;
  }

  const Rational s_end = endpoint == Endpoint::start ? curve.s0 : curve.s1;
  const RatVector v1 = curve.at(s_end);
  if (!P.contains(v1)) throw DomainError(loc + " " + describe(v1) + " lies outside the polytope");
  Face F = minimal_face(P, v1);
  if (F.dim == n) {
    out.conditions.push_back(entry("endpoint_on_boundary", loc, Outcome::fails,
                                   describe(v1) + " is an interior point of the polytope"));
    return out;
  }
  out.conditions.push_back(entry("endpoint_on_boundary", loc, Outcome::holds,
                                 describe(v1) + " lies in a face of dimension " + std::to_string(F.dim)));

  const RatVector o = options.chart_vertex ? *options.chart_vertex : F.vertices.front();
  VertexChart chart = make_chart(P, o);
  std::vector<int> Q = q_set(chart, v1);

  // Chart coordinates in the local parameter sigma >= 0.
  const RatMatrix& Uinv = chart.edges_inverse();
  std::vector<RatJet> X(n);
  std::vector<RatPoly> local;
  Rational sigma_max = curve.s1 - curve.s0;
  if (exact) {
    RatPoly shift = endpoint == Endpoint::start ? RatPoly{curve.s0, Rational(1)} : RatPoly{curve.s1, Rational(-1)};
    std::vector<RatPoly> gamma;
    for (const auto& c : curve.polynomials()) gamma.push_back(c.compose(shift));
    for (int j = 0; j < n; ++j) {
      RatPoly xj;
      for (int i = 0; i < n; ++i)
        xj = xj + Uinv(j, i) * (gamma[i] - RatPoly::constant(o(i)));
      local.push_back(xj);
      X[j] = RatJet::from_polynomial(xj, options.order);
    }
  } else {
    // Only the truncated coordinates limit the known order.
    int order = options.order;
    for (const auto& c : curve.coords)
      if (!c.exact()) order = std::min(order, c.order());
    for (int j = 0; j < n; ++j) {
      RatPoly xj;
      for (int i = 0; i < n; ++i)
        xj = xj + Uinv(j, i) * (curve.coords[i].polynomial() - RatPoly::constant(o(i)));
      X[j] = RatJet(xj.coefficients(), order, false);
    }
  }
  if (X[0].order() < 1) {
    out.conditions.push_back(entry("series_expansion", loc, Outcome::unknown, "series order below 1"));
    return out;
  }

  const IntVector weights = local_weights(chart, circle);
  auto outside_q = [&](int j) { return std::find(Q.begin(), Q.end(), j) == Q.end(); };
  for (int j = 0; j < n; ++j)
    if (outside_q(j) && X[j][1] < 0) {
      out.conditions.push_back(entry("parameter_coordinate", loc, Outcome::fails,
                                     "curve leaves the polytope at the endpoint (chart coordinate " +
                                         std::to_string(j) + " decreases)"));
      return out;
    }
  // Any coordinate leaving the face at first order can serve as x_1; one the
  // circle actually rotates keeps (x_1, t) a parametrization.
  int param = -1;
  for (int j = 0; j < n && param < 0; ++j)
    if (outside_q(j) && X[j][1] != 0 && weights(j) != 0) param = j;
  for (int j = 0; j < n && param < 0; ++j)
    if (outside_q(j) && X[j][1] != 0) param = j;
  if (param < 0) {
    bool zero_tangent = std::all_of(X.begin(), X.end(), [](const RatJet& x) { return x[1] == 0; });
    if (zero_tangent)
      out.conditions.push_back(entry("parameter_coordinate", loc, Outcome::unknown,
                                     "zero tangent vector at the endpoint; reparametrize the curve"));
    else
      out.conditions.push_back(entry("parameter_coordinate", loc, Outcome::fails,
                                     "tangent at the endpoint is parallel to its face"));
    return out;
  }
  out.conditions.push_back(entry("parameter_coordinate", loc, Outcome::holds,
                                 "x_1 = chart coordinate " + std::to_string(param)));

  std::vector<int> coordinate{param};
  for (int j = 0; j < n; ++j)
    if (j != param) coordinate.push_back(j);

  const RatJet h = reversion(X[param]);
  std::vector<RatJet> g;
  g.push_back(RatJet::identity(X[param].order()));
  for (int p = 1; p < n; ++p) g.push_back(compose(X[coordinate[p]], h));

  IntVector k(n);
  std::vector<int> Qpos;
  for (int p = 0; p < n; ++p) {
    k(p) = weights(coordinate[p]);
    if (std::find(Q.begin(), Q.end(), coordinate[p]) != Q.end()) Qpos.push_back(p);
  }

  Rational domain = exact ? local[param](sigma_max) : Rational(0);
  out.graph = CurveGraph{std::move(chart), endpoint, v1, param, std::move(coordinate), std::move(g),
                         domain, std::move(k), std::move(Qpos), std::move(local), sigma_max};
  return out;
}

Transversality check_transversality(const ParametricCurve& curve, const CircleEmbedding& circle) {
  Transversality t;
  if (!curve.exact()) return t;
  std::vector<RatPoly> d;
  for (const auto& c : curve.polynomials()) d.push_back(c.derivative());
  RatPoly p = pairing(d, circle.direction());
  if (p.is_zero()) {
    t.kind = Transversality::Kind::degenerate;
    return t;
  }
  t.witnesses = isolate_roots(p, curve.s0, curve.s1);
  t.kind = t.witnesses.empty() ? Transversality::Kind::holds : Transversality::Kind::fails;
  return t;
}

std::vector<ConditionEntry> check_endpoint(const CurveGraph& graph) {
  std::vector<ConditionEntry> out;
  const std::string loc = endpoint_label(graph.endpoint);
  const int n = static_cast<int>(graph.g.size());
  auto where = [&](int p) { return loc + ", chart coordinate " + std::to_string(graph.coordinate[p]); };
  const Integer k1 = graph.k(0);
  out.push_back(entry("k1_nonzero", loc, k1 != 0 ? Outcome::holds : Outcome::fails, "k_1 = " + to_string(k1)));

  for (int p = 1; p < n; ++p) {
    if (graph.in_q(p)) {
      out.push_back(entry("q_weight_zero", where(p), graph.k(p) == 0 ? Outcome::holds : Outcome::fails,
                          "k = " + to_string(graph.k(p))));
      SqrtClass c = sqrt_factor_class(graph.g[p]);
      Outcome o = Outcome::fails;
      if (c.tag == SqrtTag::smooth_even || c.tag == SqrtTag::identically_zero) o = Outcome::holds;
      if (c.tag == SqrtTag::unknown) o = Outcome::unknown;
      std::string detail = std::string("sqrt(g(x^2)) is ") + to_string(c.tag);
      if (c.valuation) detail += ", a = " + std::to_string(*c.valuation);
      out.push_back(entry("q_sqrt_smooth", where(p), o, detail));
      continue;
    }
    if (k1 == 0) continue;
    const Integer kp = graph.k(p);
    if (kp % k1 != 0) {
      out.push_back(entry("weight_ratio_integral", where(p), Outcome::fails,
                          "k / k_1 = " + to_string(Rational(kp, k1)) + " is not an integer"));
      continue;
    }
    const int m = static_cast<int>((kp / k1).convert_to<long>());
    out.push_back(entry("weight_ratio_integral", where(p), Outcome::holds, "m = " + std::to_string(m)));
    DividedSmoothness d = divided_smoothness(graph.g[p], m);
    Outcome o = d.outcome == DividedSmoothness::Outcome::holds
                    ? Outcome::holds
                    : (d.outcome == DividedSmoothness::Outcome::fails ? Outcome::fails : Outcome::unknown);
    std::string detail = "m = " + std::to_string(m);
    if (d.valuation) {
      detail += ", a = " + std::to_string(*d.valuation) + ", a - m = " + std::to_string(*d.valuation - m);
    } else if (o == Outcome::holds) {
      detail += ", coordinate identically zero";
    }
    if (o != Outcome::holds) detail += std::string(": ") + to_string(d.reason);
    std::string name = "divided_smoothness";
    if (d.reason == DividedSmoothness::Reason::parity) name = "divided_smoothness_parity";
    out.push_back(entry(name, where(p), o, detail));
  }
  return out;
}

std::vector<ConditionEntry> check_interior(const std::vector<RatPoly>& g, const Rational& domain,
                                           const std::string& location) {
  std::vector<ConditionEntry> out;
  if (!(domain > 0)) {
    out.push_back(entry("interior_positive", location, Outcome::fails, "empty parameter range"));
    return out;
  }
  const Rational mid = domain / 2;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string loc = location + ", coordinate " + std::to_string(i);
    if (g[i].is_zero()) {
      out.push_back(entry("interior_positive", loc, Outcome::holds, "identically zero (stays on its facet)"));
      continue;
    }
    auto roots = isolate_roots(g[i], Rational(0), domain);
    if (!roots.empty()) {
      std::string where = roots.front().lo == roots.front().hi
                              ? to_string(roots.front().lo)
                              : "[" + to_string(roots.front().lo) + ", " + to_string(roots.front().hi) + "]";
      out.push_back(entry("interior_positive", loc, Outcome::fails, "interior boundary contact at " + where));
    } else if (g[i](mid) < 0) {
      out.push_back(entry("interior_positive", loc, Outcome::fails, "negative on the interior"));
    } else {
      out.push_back(entry("interior_positive", loc, Outcome::holds, "positive on the open range"));
    }
  }
  return out;
}

std::vector<ConditionEntry> check_interior(const CurveGraph& graph) {
  const std::string loc = "graph at " + endpoint_label(graph.endpoint);
  bool exact = std::all_of(graph.g.begin(), graph.g.end(), [](const RatJet& j) { return j.exact(); });
  if (exact) {
    std::vector<RatPoly> polys;
    for (const auto& j : graph.g) polys.push_back(j.polynomial());
    return check_interior(polys, graph.domain, loc);
  }
  if (!graph.local_coords.empty()) return check_interior(graph.local_coords, graph.sigma_max, loc + " (sigma)");
  return {entry("interior_positive", loc, Outcome::unknown, "truncated jets: positivity not certified")};
}

Verdict combine(const std::vector<const std::vector<ConditionEntry>*>& groups) {
  bool unknown = false;
  for (const auto* group : groups)
    for (const auto& c : *group) {
      if (c.outcome == Outcome::fails) return Verdict::reject;
      if (c.outcome == Outcome::unknown) unknown = true;
    }
  return unknown ? Verdict::inconclusive : Verdict::accept;
}

LiftVerdict check_lift(const HPolytope& P, const ParametricCurve& curve, const CircleEmbedding& circle,
                       const LiftOptions& options) {
  if (curve.dimension() != P.dimension()) throw DomainError("curve dimension does not match the polytope");
  if (circle.direction().size() != P.dimension()) throw DomainError("circle dimension does not match the polytope");
  if (!(curve.s0 < curve.s1)) throw DomainError("curve domain must satisfy s0 < s1");

  LiftVerdict v;
  v.interior = check_containment(P, curve);

  Transversality t = check_transversality(curve, circle);
  switch (t.kind) {
    case Transversality::Kind::holds:
      v.interior.push_back(entry("transversality", "interior", Outcome::holds, "<gamma', K> has no interior zero"));
      break;
    case Transversality::Kind::fails:
      v.interior.push_back(entry("transversality", "interior", Outcome::fails,
                                 "<gamma', K> vanishes at " + describe(t.witnesses.front())));
      break;
    case Transversality::Kind::degenerate:
      v.interior.push_back(entry("transversality", "interior", Outcome::fails,
                                 "degenerate: <gamma', K> is identically zero"));
      break;
    case Transversality::Kind::unknown:
      v.interior.push_back(entry("transversality", "interior", Outcome::unknown,
                                 "truncated series input: transversality cannot be certified"));
      break;
  }

  for (int e = 0; e < 2; ++e) {
    auto& report = v.endpoints[e];
    report.endpoint = static_cast<Endpoint>(e);
    const Rational s = e == 0 ? curve.s0 : curve.s1;
    if (curve.exact() || (e == 0 && curve.s0 == 0)) report.point = curve.at(s);
    GraphOptions go{options.order, options.chart_vertices[e]};
    GraphBuild b = build_graph(P, curve, report.endpoint, circle, go);
    report.conditions = std::move(b.conditions);
    if (b.graph) {
      report.chart_vertex = b.graph->chart.vertex();
      auto ends = check_endpoint(*b.graph);
      report.conditions.insert(report.conditions.end(), ends.begin(), ends.end());
      auto inner = check_interior(*b.graph);
      v.interior.insert(v.interior.end(), inner.begin(), inner.end());
      report.graph = std::move(b.graph);
    }
  }
  v.verdict = combine({&v.interior, &v.endpoints[0].conditions, &v.endpoints[1].conditions});
  return v;
}

}  // namespace toriclift
