#pragma once

// Decision procedure for lifting a curve in a Delzant polytope to a smooth
// S^1-equivariant symplectic surface of the toric manifold.
//
// Each endpoint is analysed in a vertex chart: the curve is written as a graph
// (x_1, g_2(x_1), ..., g_n(x_1)) over a chart coordinate x_1 that vanishes at
// the endpoint, and the circle weights k_j = <u_j, K> are read off the edge
// basis. The interior is checked for containment and for transversality
// <gamma'(s), K> != 0.

#include "toriclift/chart.hpp"
#include "toriclift/jet.hpp"
#include "toriclift/polynomial.hpp"
#include "toriclift/polytope.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toriclift {

/// s -> gamma(s) on [s0, s1]. Exact coordinates are polynomials; truncated
/// coordinates are power series about s = 0 known to their order.
struct ParametricCurve {
  std::vector<RatJet> coords;
  Rational s0, s1;

  static ParametricCurve polynomial(std::vector<RatPoly> coords, Rational s0, Rational s1);

  int dimension() const { return static_cast<int>(coords.size()); }
  bool exact() const;
  /// Requires exact().
  std::vector<RatPoly> polynomials() const;
  /// Value from the stored coefficients (exact only for exact curves).
  RatVector at(const Rational& s) const;
};

enum class Endpoint { start = 0, end = 1 };

enum class Outcome { holds, fails, unknown };
const char* to_string(Outcome o);

struct ConditionEntry {
  std::string condition;
  std::string location;
  Outcome outcome = Outcome::unknown;
  std::string detail;
};

/// The curve near one endpoint as a graph over chart coordinate x_1.
/// Positions are re-indexed so that position 0 is the parameter coordinate;
/// `coordinate[p]` is the original chart index at position p. g[0] is the
/// identity jet, g[p] expresses coordinate[p] as a function of x_1.
struct CurveGraph {
  VertexChart chart;
  Endpoint endpoint = Endpoint::start;
  RatVector point;                ///< the endpoint v_1
  int param_index = 0;            ///< original chart index of x_1
  std::vector<int> coordinate;    ///< original chart index per position
  std::vector<RatJet> g;
  Rational domain;                ///< x_1 runs over [0, domain]
  IntVector k;                    ///< weights per position
  std::vector<int> Q;             ///< positions spanning the endpoint face
  /// Chart coordinates as polynomials in the local parameter sigma >= 0
  /// (distance in s from the endpoint), original chart order; empty for
  /// truncated input.
  std::vector<RatPoly> local_coords;
  Rational sigma_max;

  bool in_q(int position) const;
};

struct GraphBuild {
  std::optional<CurveGraph> graph;
  /// Conditions decided while building (parameter coordinate, boundary).
  std::vector<ConditionEntry> conditions;
};

struct GraphOptions {
  int order = kDefaultJetOrder;
  std::optional<RatVector> chart_vertex;  ///< default: lexicographically smallest vertex of F(v_1)
};

GraphBuild build_graph(const HPolytope& P, const ParametricCurve& curve, Endpoint endpoint,
                       const CircleEmbedding& circle, const GraphOptions& options = {});

struct Transversality {
  enum class Kind { holds, fails, degenerate, unknown };
  Kind kind = Kind::unknown;
  std::vector<RootInterval> witnesses;  ///< roots of <gamma', K> inside (s0, s1)
};

Transversality check_transversality(const ParametricCurve& curve, const CircleEmbedding& circle);

std::vector<ConditionEntry> check_endpoint(const CurveGraph& graph);

/// Positivity of every coordinate that is not identically zero on the open
/// x_1-range (or, for truncated graphs, on the open sigma-range).
std::vector<ConditionEntry> check_interior(const CurveGraph& graph);
/// Same test on explicit polynomials over (0, domain).
std::vector<ConditionEntry> check_interior(const std::vector<RatPoly>& g, const Rational& domain,
                                           const std::string& location = "interior");

enum class Verdict { accept, reject, inconclusive };
const char* to_string(Verdict v);

struct EndpointReport {
  Endpoint endpoint = Endpoint::start;
  RatVector point;
  std::optional<RatVector> chart_vertex;
  std::optional<CurveGraph> graph;
  std::vector<ConditionEntry> conditions;
};

struct LiftVerdict {
  Verdict verdict = Verdict::inconclusive;
  std::array<EndpointReport, 2> endpoints;
  std::vector<ConditionEntry> interior;
};

struct LiftOptions {
  int order = kDefaultJetOrder;
  std::array<std::optional<RatVector>, 2> chart_vertices;
};

/// Any failed condition rejects; otherwise any undecided condition makes the
/// verdict inconclusive.
LiftVerdict check_lift(const HPolytope& P, const ParametricCurve& curve, const CircleEmbedding& circle,
                       const LiftOptions& options = {});

Verdict combine(const std::vector<const std::vector<ConditionEntry>*>& groups);

}  // namespace toriclift
