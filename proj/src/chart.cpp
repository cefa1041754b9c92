#include "toriclift/chart.hpp"

#include <algorithm>

namespace toriclift {

CircleEmbedding::CircleEmbedding(IntVector direction) : k_(std::move(direction)) {
  Integer g = gcd_of(k_);
  if (g == 0) throw DomainError("circle direction is zero (action not effective)");
  if (g != 1) throw DomainError("circle direction is not primitive (action not effective)");
}

VertexChart::VertexChart(HPolytope polytope, RatVector vertex, IntMatrix edges)
    : P_(std::move(polytope)), o_(std::move(vertex)), U_(std::move(edges)) {
  auto inv = inverse(U_.cast<Rational>());
  if (!inv) throw DomainError("chart edge matrix is singular");
  U_inv_ = *inv;
  lambda_ = P_.tight_facets(o_);
}

VertexChart make_chart(const HPolytope& P, const RatVector& o) {
  IntMatrix U = edge_vectors_at_vertex(P, o);
  Integer d = determinant(U);
  if (abs(d) != 1) {
    std::string where = "(";
    for (Eigen::Index i = 0; i < o.size(); ++i) where += (i ? "," : "") + to_string(o(i));
    throw DomainError("vertex " + where + ") is not smooth: |det U| = " + to_string(Integer(abs(d))));
  }
  return VertexChart(P, o, std::move(U));
}

RatVector to_chart(const VertexChart& chart, const RatVector& p) {
  return chart.edges_inverse() * (p - chart.vertex());
}

RatVector from_chart(const VertexChart& chart, const RatVector& x) {
  return chart.vertex() + chart.edges().cast<Rational>() * x;
}

IntVector local_weights(const VertexChart& chart, const CircleEmbedding& circle) {
  if (circle.direction().size() != chart.dimension())
    throw DomainError("circle direction has wrong dimension");
  return chart.edges().transpose() * circle.direction();
}

MomentImage local_moment_image(const VertexChart& chart, const RatVector& rho) {
  if (rho.size() != chart.dimension()) throw DomainError("moment vector has wrong dimension");
  for (const auto& r : rho)
    if (r < 0) throw DomainError("negative |z_j|^2 / 2");
  return {rho, from_chart(chart, rho)};
}

std::vector<int> q_set(const VertexChart& chart, const RatVector& v1) {
  Face F = minimal_face(chart.polytope(), v1);
  if (std::find(F.vertices.begin(), F.vertices.end(), chart.vertex()) == F.vertices.end()) {
    std::string msg = "chart vertex is not a vertex of the minimal face of the endpoint; use one of:";
    for (const auto& v : F.vertices) {
      msg += " (";
      for (Eigen::Index i = 0; i < v.size(); ++i) msg += (i ? "," : "") + to_string(v(i));
      msg += ")";
    }
    throw DomainError(msg);
  }
  std::vector<int> Q;
  for (int j = 0; j < chart.dimension(); ++j) {
    bool inside = true;
    for (int f : F.active)
      if (chart.polytope().facet(f).normal.dot(chart.edges().col(j)) != 0) inside = false;
    if (inside) Q.push_back(j);
  }
  return Q;
}

}  // namespace toriclift
