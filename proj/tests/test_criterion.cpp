#include "toriclift/catalog.hpp"
#include "toriclift/criterion.hpp"

#include <doctest.h>

#include <sstream>

using namespace toriclift;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Integer(x);
  return v;
}

RatVector rv(std::initializer_list<Rational> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

RatPoly poly(std::initializer_list<Rational> cs) { return RatPoly(std::vector<Rational>(cs)); }

ParametricCurve curve(std::initializer_list<RatPoly> coords, Rational s0, Rational s1) {
  return ParametricCurve::polynomial(std::vector<RatPoly>(coords), std::move(s0), std::move(s1));
}

std::string dump(const LiftVerdict& v) {
  std::ostringstream os;
  os << to_string(v.verdict) << "\n";
  for (const auto& e : v.endpoints)
    for (const auto& c : e.conditions)
      os << "  " << c.condition << " @ " << c.location << " " << to_string(c.outcome) << " " << c.detail << "\n";
  for (const auto& c : v.interior)
    os << "  " << c.condition << " @ " << c.location << " " << to_string(c.outcome) << " " << c.detail << "\n";
  return os.str();
}

const ConditionEntry* find(const std::vector<ConditionEntry>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.condition == name) return &c;
  return nullptr;
}

bool all_hold(const std::vector<ConditionEntry>& cs) {
  for (const auto& c : cs)
    if (c.outcome != Outcome::holds) return false;
  return !cs.empty();
}

const HPolytope& cp2() {
  static const HPolytope P = projective_simplex(2, 3);
  return P;
}

}  // namespace

TEST_CASE("diagonal with K = (1,1) lifts") {
  auto c = curve({poly({0, 1}), poly({0, 1})}, 0, Rational(3, 2));
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 1})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::accept);

  const auto& start = v.endpoints[0];
  REQUIRE(start.graph);
  CHECK(*start.chart_vertex == rv({0, 0}));
  CHECK(start.graph->k == iv({1, 1}));
  CHECK(start.graph->Q.empty());
  CHECK(start.graph->g[1].polynomial() == poly({0, 1}));
  CHECK(start.graph->domain == Rational(3, 2));

  const auto& end = v.endpoints[1];
  REQUIRE(end.graph);
  CHECK(*end.chart_vertex == rv({0, 3}));
  CHECK(end.graph->param_index == 0);
  CHECK(end.graph->k == iv({-1, 0}));
  CHECK(end.graph->Q == std::vector<int>{1});
  CHECK(end.graph->g[1].polynomial() == poly({Rational(3, 2), Rational(-1, 2)}));
  CHECK(end.graph->local_coords[0] == poly({0, 2}));
  CHECK(end.graph->local_coords[1] == poly({Rational(3, 2), -1}));
}

TEST_CASE("diagonal with K = (1,0) is a cone at the vertex") {
  auto c = curve({poly({0, 1}), poly({0, 1})}, 0, Rational(3, 2));
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 0})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::reject);
  const ConditionEntry* p = find(v.endpoints[0].conditions, "divided_smoothness_parity");
  REQUIRE(p);
  CHECK(p->outcome == Outcome::fails);
  CHECK(p->detail.find("cone") != std::string::npos);
  CHECK(find(v.endpoints[0].conditions, "k1_nonzero")->outcome == Outcome::holds);
}

TEST_CASE("parabola at the origin with K = (1,2)") {
  auto c = curve({poly({0, 1}), poly({0, 0, 1})}, 0, 1);
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 2})));
  INFO(dump(v));
  const auto& start = v.endpoints[0];
  CHECK(all_hold(start.conditions));
  const ConditionEntry* d = find(start.conditions, "divided_smoothness");
  REQUIRE(d);
  CHECK(d->detail.find("m = 2, a = 2") != std::string::npos);
  REQUIRE(start.graph);
  CHECK(start.graph->k == iv({1, 2}));
}

TEST_CASE("anti-diagonal with K = (1,1) is transversality-degenerate") {
  auto c = curve({poly({0, 1}), poly({2, -1})}, 0, 2);
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 1})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::reject);
  const ConditionEntry* t = find(v.interior, "transversality");
  REQUIRE(t);
  CHECK(t->outcome == Outcome::fails);
  CHECK(t->detail.find("degenerate") != std::string::npos);
  CHECK(check_transversality(c, CircleEmbedding(iv({1, 1}))).kind == Transversality::Kind::degenerate);
}

TEST_CASE("transversality witnesses") {
  // K = (0,1): the pairing is the derivative of the second coordinate.
  auto c = curve({poly({0, 1}), poly({0, 0, -1})}, 0, 1);
  Transversality t = check_transversality(c, CircleEmbedding(iv({0, 1})));
  CHECK(t.kind == Transversality::Kind::holds);  // -2s has its zero at the endpoint only
  auto d = curve({poly({0, 1}), poly({0, 1, -1})}, 0, 1);
  Transversality u = check_transversality(d, CircleEmbedding(iv({0, 1})));
  REQUIRE(u.kind == Transversality::Kind::fails);
  CHECK(u.witnesses.front().lo <= Rational(1, 2));
  CHECK(Rational(1, 2) <= u.witnesses.front().hi);
}

TEST_CASE("endpoint on an open facet") {
  // From (1,0) on y = 0 to the vertex (0,3); K = (0,1) rotates the normal circle of y = 0.
  auto c = curve({poly({1, -1}), poly({0, 3})}, 0, 1);
  for (auto chart : {rv({0, 0}), rv({3, 0})}) {
    LiftOptions o;
    o.chart_vertices[0] = chart;
    LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({0, 1})), o);
    INFO(dump(v));
    CHECK(v.verdict == Verdict::accept);
    REQUIRE(v.endpoints[1].graph);
    CHECK(v.endpoints[1].graph->k == iv({-1, -1}));
    CHECK(v.endpoints[1].graph->g[1].polynomial() == poly({0, Rational(1, 2)}));
  }
  // A circle that also turns the facet direction fails on both charts.
  for (auto chart : {rv({0, 0}), rv({3, 0})}) {
    LiftOptions o;
    o.chart_vertices[0] = chart;
    LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 1})), o);
    INFO(dump(v));
    CHECK(v.verdict == Verdict::reject);
    const ConditionEntry* q = find(v.endpoints[0].conditions, "q_weight_zero");
    REQUIRE(q);
    CHECK(q->outcome == Outcome::fails);
  }
}

TEST_CASE("chart vertices must belong to the endpoint face") {
  auto c = curve({poly({1, -1}), poly({0, 3})}, 0, 1);
  LiftOptions o;
  o.chart_vertices[0] = rv({0, 3});
  CHECK_THROWS_AS(check_lift(cp2(), c, CircleEmbedding(iv({0, 1})), o), DomainError);
}

TEST_CASE("non-integral weight ratio") {
  auto c = curve({poly({0, 1}), poly({0, 1})}, 0, Rational(3, 2));
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 2})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::reject);
  const ConditionEntry* w = find(v.endpoints[0].conditions, "weight_ratio_integral");
  REQUIRE(w);
  CHECK(w->outcome == Outcome::fails);
}

TEST_CASE("negative weight ratio with even a - m holds") {
  auto c = curve({poly({0, 1}), poly({0, 2})}, 0, 1);
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, -1})));
  INFO(dump(v));
  const ConditionEntry* d = find(v.endpoints[0].conditions, "divided_smoothness");
  REQUIRE(d);
  CHECK(d->outcome == Outcome::holds);
  CHECK(d->detail.find("m = -1") != std::string::npos);
}

TEST_CASE("degenerate endpoints") {
  auto interior_start = curve({poly({1, 1}), poly({1, 1})}, 0, Rational(1, 2));
  LiftVerdict v = check_lift(cp2(), interior_start, CircleEmbedding(iv({1, 1})));
  CHECK(v.verdict == Verdict::reject);
  CHECK(find(v.endpoints[0].conditions, "endpoint_on_boundary")->outcome == Outcome::fails);

  auto flat = curve({poly({0, 0, 1}), poly({0, 0, 1})}, 0, 1);
  GraphBuild b = build_graph(cp2(), flat, Endpoint::start, CircleEmbedding(iv({1, 1})));
  CHECK_FALSE(b.graph);
  CHECK(find(b.conditions, "parameter_coordinate")->outcome == Outcome::unknown);

  auto tangent = curve({poly({1, 1}), poly({0, 0, 1})}, 0, 1);
  GraphBuild t = build_graph(cp2(), tangent, Endpoint::start, CircleEmbedding(iv({0, 1})));
  CHECK_FALSE(t.graph);
  CHECK(find(t.conditions, "parameter_coordinate")->outcome == Outcome::fails);

  auto leaving = curve({poly({0, 1}), poly({0, -1})}, 0, 1);
  GraphBuild l = build_graph(cp2(), leaving, Endpoint::start, CircleEmbedding(iv({1, 1})));
  CHECK_FALSE(l.graph);
  CHECK(find(l.conditions, "parameter_coordinate")->detail.find("leaves") != std::string::npos);

  auto outside = curve({poly({4, 1}), poly({0, 1})}, 0, 1);
  CHECK_THROWS_AS(check_lift(cp2(), outside, CircleEmbedding(iv({1, 1}))), DomainError);
}

TEST_CASE("interior contact is rejected") {
  // Touches x = 0 at s = 1/2 between endpoints on y = 0 and x + y = 3.
  auto c = curve({poly({1, -4, 4}), poly({0, 1})}, 0, 1);
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({0, 1})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::reject);
  const ConditionEntry* contact = find(v.interior, "interior_boundary_contact");
  REQUIRE(contact);
  CHECK(contact->location == "facet 0");
}

TEST_CASE("interior positivity on explicit polynomials") {
  auto ok = check_interior({poly({0, 1}), poly({0, 1, -1})}, 1);
  CHECK(all_hold(ok));
  auto bad = check_interior({poly({0, 1}), poly({0, 1, -1})}, 2);
  CHECK(bad[1].outcome == Outcome::fails);
  auto neg = check_interior({poly({0, -1})}, 1);
  CHECK(neg[0].outcome == Outcome::fails);
  CHECK(check_interior({RatPoly()}, 1)[0].outcome == Outcome::holds);
}

TEST_CASE("truncated series input") {
  // gamma = (s, s) known only to order 4 about s = 0.
  ParametricCurve c;
  c.coords = {RatJet({0, 1}, 4, false), RatJet({0, 1}, 4, false)};
  c.s0 = 0;
  c.s1 = Rational(3, 2);
  LiftVerdict v = check_lift(cp2(), c, CircleEmbedding(iv({1, 1})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::inconclusive);
  CHECK(all_hold(std::vector<ConditionEntry>(v.endpoints[0].conditions)));
  CHECK(find(v.endpoints[1].conditions, "series_expansion")->outcome == Outcome::unknown);

  // Decided failures still reject.
  LiftVerdict r = check_lift(cp2(), c, CircleEmbedding(iv({1, 0})));
  CHECK(r.verdict == Verdict::reject);

  // A truncated coordinate whose stored coefficients vanish stays unknown.
  ParametricCurve z;
  z.coords = {RatJet({0, 1}, 3, true), RatJet({0, 0, 0, 0}, 3, false)};
  z.s0 = 0;
  z.s1 = 1;
  LiftVerdict u = check_lift(cp2(), z, CircleEmbedding(iv({1, 0})));
  CHECK(u.verdict == Verdict::inconclusive);
}

TEST_CASE("verdicts are invariant under K -> -K") {
  std::vector<std::pair<ParametricCurve, IntVector>> cases{
      {curve({poly({0, 1}), poly({0, 1})}, 0, Rational(3, 2)), iv({1, 1})},
      {curve({poly({0, 1}), poly({0, 1})}, 0, Rational(3, 2)), iv({1, 0})},
      {curve({poly({0, 1}), poly({2, -1})}, 0, 2), iv({1, 1})},
      {curve({poly({1, -1}), poly({0, 3})}, 0, 1), iv({0, 1})},
      {curve({poly({1, -1}), poly({0, 3})}, 0, 1), iv({1, 2})},
      {curve({poly({0, 1}), poly({0, 2})}, 0, 1), iv({1, -1})},
  };
  for (const auto& [c, K] : cases) {
    CircleEmbedding circle(K);
    CHECK(check_lift(cp2(), c, circle).verdict == check_lift(cp2(), c, -circle).verdict);
  }
}

TEST_CASE("combine") {
  std::vector<ConditionEntry> h{{"a", "x", Outcome::holds, ""}}, u{{"b", "x", Outcome::unknown, ""}},
      f{{"c", "x", Outcome::fails, ""}};
  CHECK(combine({&h}) == Verdict::accept);
  CHECK(combine({&h, &u}) == Verdict::inconclusive);
  CHECK(combine({&u, &f}) == Verdict::reject);
}

TEST_CASE("singular vertices are refused") {
  HPolytope T = non_delzant_triangle();
  auto c = curve({poly({1, -1}), poly({0, 1})}, 0, Rational(1, 2));
  CHECK_THROWS_WITH_AS(check_lift(T, c, CircleEmbedding(iv({1, 1}))), doctest::Contains("not smooth"),
                       DomainError);
}

TEST_CASE("three-dimensional diagonal") {
  HPolytope P = projective_simplex(3, 1);
  auto c = curve({poly({0, 1}), poly({0, 1}), poly({0, 1})}, 0, Rational(1, 3));
  LiftVerdict v = check_lift(P, c, CircleEmbedding(iv({1, 1, 1})));
  INFO(dump(v));
  CHECK(v.verdict == Verdict::accept);
}
