#pragma once

// Vertex-centred local model. At a vertex o of a Delzant polytope with edge
// basis U (columns u_1..u_n, the isotropy weights at the fixed point), the
// chart coordinates of p are x = U^-1 (p - o), the moment map of the model is
// mu(z) = o + sum_j |z_j|^2/2 u_j, and x_j = 0 exactly on the facet that u_j
// leaves.

#include "toriclift/numeric_types.hpp"
#include "toriclift/polytope.hpp"

#include <vector>

namespace toriclift {

/// The image of the generator of S^1 in the Lie algebra of T^n. Nonzero and
/// primitive, i.e. the circle acts effectively.
class CircleEmbedding {
 public:
  explicit CircleEmbedding(IntVector direction);
  const IntVector& direction() const { return k_; }
  CircleEmbedding operator-() const { return CircleEmbedding(IntVector(-k_)); }

 private:
  IntVector k_;
};

class VertexChart {
 public:
  VertexChart(HPolytope polytope, RatVector vertex, IntMatrix edges);

  const HPolytope& polytope() const { return P_; }
  const RatVector& vertex() const { return o_; }
  const IntMatrix& edges() const { return U_; }
  const RatMatrix& edges_inverse() const { return U_inv_; }
  /// Facets through the vertex: the faces kept in the local region.
  const FacetSet& lambda_facets() const { return lambda_; }
  int dimension() const { return P_.dimension(); }

 private:
  HPolytope P_;
  RatVector o_;
  IntMatrix U_;
  RatMatrix U_inv_;
  FacetSet lambda_;
};

/// Throws DomainError unless o is a simple vertex with |det U| = 1.
VertexChart make_chart(const HPolytope& P, const RatVector& o);

RatVector to_chart(const VertexChart& chart, const RatVector& p);
RatVector from_chart(const VertexChart& chart, const RatVector& x);

/// k_j = <u_j, K>.
IntVector local_weights(const VertexChart& chart, const CircleEmbedding& circle);

struct MomentImage {
  RatVector chart;    ///< equal to the input rho
  RatVector ambient;  ///< o + sum_j rho_j u_j
};

/// Image of the model moment map for |z_j|^2 / 2 = rho_j.
MomentImage local_moment_image(const VertexChart& chart, const RatVector& rho);

/// Chart coordinates j whose edge u_j lies in the minimal face of v1, i.e.
/// those not forced to zero there. Throws DomainError when the chart vertex is
/// not a vertex of that face.
std::vector<int> q_set(const VertexChart& chart, const RatVector& v1);

}  // namespace toriclift
