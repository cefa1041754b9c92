#pragma once

#include "toriclift/lattice.hpp"
#include "toriclift/numeric_types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclift {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// <x, normal> <= offset
struct Facet {
  IntVector normal;
  Rational offset;
};

using FacetSet = std::vector<int>;  // sorted facet indices

struct Vertex {
  RatVector point;
  FacetSet active;
};

struct Face {
  FacetSet active;
  int dim = 0;
  std::vector<RatVector> vertices;
};

/// Generators of a subtorus of T^n = R^n / Z^n as columns; the subtorus is
/// the image of their real span.
struct Subtorus {
  IntMatrix generators;
  bool saturated = true;
};

/// Bounded, full-dimensional polytope {x : <x, a_i> <= l_i}. Construction
/// validates primitive nonzero normals, distinct facets, boundedness and that
/// every inequality defines a facet; the object is immutable afterwards.
class HPolytope {
 public:
  HPolytope(int dimension, std::vector<Facet> facets);

  int dimension() const { return n_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(int i) const { return facets_.at(i); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// offset_i - <x, normal_i>; nonnegative exactly on the polytope.
  Rational slack(int facet, const RatVector& x) const;
  bool contains(const RatVector& x) const;
  FacetSet tight_facets(const RatVector& x) const;
  /// Normals of the given facets as rows.
  IntMatrix normal_rows(const FacetSet& facets) const;

 private:
  int n_;
  std::vector<Facet> facets_;
  std::vector<Vertex> vertices_;
};

/// Brute force over n-subsets of facets; vertices in lexicographic order.
std::vector<Vertex> enumerate_vertices(const HPolytope& P);

/// All nonempty faces, the polytope itself included; sorted by decreasing
/// dimension, then by active set.
std::vector<Face> face_lattice(const HPolytope& P);

/// Index of the vertex equal to `v`, if any.
std::optional<int> find_vertex(const HPolytope& P, const RatVector& v);

class NonSimpleVertex : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Primitive edge directions at a simple vertex, one per column. Edges are
/// named by the n-1 active facets they lie in and listed in lexicographic
/// order of those sets; column j therefore leaves the active facet with the
/// j-th largest index. Throws NonSimpleVertex when more than n facets are
/// active, DomainError when v is not a vertex.
IntMatrix edge_vectors_at_vertex(const HPolytope& P, const RatVector& v);

struct VertexCheck {
  RatVector vertex;
  FacetSet active;
  bool simple = false;
  bool rational = false;
  bool smooth = false;
  std::optional<Integer> det;  ///< det U, when the vertex is simple
};

struct DelzantReport {
  bool pass = false;
  std::vector<VertexCheck> vertices;
};

DelzantReport validate_delzant(const HPolytope& P);

struct QuasitoricVertex {
  RatVector vertex;
  FacetSet active;
  Integer det;  ///< det of the facet vectors of the active facets, in facet order
  bool ok = false;
};

struct QuasitoricReport {
  bool pass = false;
  bool strict = true;
  std::vector<QuasitoricVertex> vertices;
};

/// det = +1 at every vertex (strict), or |det| = 1 when `strict` is false.
QuasitoricReport validate_quasitoric(const HPolytope& P, const std::vector<IntVector>& facet_vectors,
                                     bool strict = true);

/// The face with r in its relative interior (active set = facets tight at r).
Face minimal_face(const HPolytope& P, const RatVector& r);

/// Columns are the facet normals of the active facets.
Subtorus characteristic_subtorus(const HPolytope& P, const Face& F);
/// Same, for an arbitrary facet-vector assignment (quasitoric data).
Subtorus characteristic_subtorus(const std::vector<IntVector>& facet_vectors, const Face& F);

/// True iff t1 - t2 lies in span_R(G) + Z^n for the generator matrix G.
bool in_subtorus(const Subtorus& T, const RatVector& difference);

/// (t1, r1) ~ (t2, r2) in (T^n x P) / ~ : r1 = r2 and t1 t2^-1 in l(F(r1)).
bool points_equivalent(const HPolytope& P, const RatVector& t1, const RatVector& r1,
                       const RatVector& t2, const RatVector& r2);

}  // namespace toriclift
