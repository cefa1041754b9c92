#pragma once

// JSON input/output. Rationals travel as "p/q" strings (plain JSON integers
// are accepted on input, floats never are). Every parse error names the
// offending field, e.g. "curve.json: coords[1][2]: ...". All indices written
// out (facets, chart coordinates, graph positions) are 0-based.

#include "toriclift/criterion.hpp"
#include "toriclift/polytope.hpp"
#include "toriclift/surface.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toriclift {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j, const std::string& field);
Integer integer_from_json(const Json& j, const std::string& field);
RatVector rat_vector_from_json(const Json& j, const std::string& field, std::optional<int> size = {});
IntVector int_vector_from_json(const Json& j, const std::string& field, std::optional<int> size = {});

Json to_json(const Rational& r);
Json to_json(const Integer& z);
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);

/// {"n": 2, "facets": [{"normal": [-1, 0], "offset": "0"}, ...]}
HPolytope polytope_from_json(const Json& j, const std::string& where = "polytope");
Json polytope_to_json(const HPolytope& P);

/// {"vectors": [[1,0], ...]} or a bare array, one vector per facet.
std::vector<IntVector> facet_vectors_from_json(const Json& j, int n, const std::string& where = "vectors");

/// A curve with its circle and optional chart vertices per endpoint.
///   {"param": "s", "coords": [["0","1"], {"coeffs": ["0","1","1/2"], "exact": false}],
///    "domain": ["0","3/2"], "circle": [1,1],
///    "endpoints": [{"chart_vertex": ["0","0"]}, {"chart_vertex": null}]}
/// Each coordinate is either a coefficient list (exact polynomial, lowest
/// degree first) or a jet object; "exact" defaults to true.
struct CurveInput {
  std::string name;
  ParametricCurve curve;
  IntVector circle;
  std::array<std::optional<RatVector>, 2> chart_vertices;
};

CurveInput curve_from_json(const Json& j, const HPolytope& P, const std::string& where = "curve");
Json curve_to_json(const CurveInput& c);

Json to_json(const RatJet& g);
Json to_json(const ConditionEntry& c);
Json to_json(const CurveGraph& g);
Json to_json(const LiftVerdict& v);
Json to_json(const DelzantReport& r);
Json to_json(const QuasitoricReport& r);
Json faces_to_json(const std::vector<Face>& faces);
Json to_json(const ProbeResult& r);

struct ProblemBundle {
  HPolytope polytope;
  std::vector<CurveInput> curves;
  int order = kDefaultJetOrder;
};

/// Reads and validates everything before any computation happens.
ProblemBundle load_bundle(const std::string& polytope_path, const std::vector<std::string>& curve_paths,
                          int order = kDefaultJetOrder);

/// Deterministic text form: 2-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace toriclift
