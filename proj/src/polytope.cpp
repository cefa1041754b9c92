#include "toriclift/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toriclift {

namespace {

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

// Calls visit(subset) for every k-subset of {0..d-1} in lexicographic order.
void for_each_subset(int d, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k > d) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int affine_dimension(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  RatMatrix D(points.front().size(), static_cast<Eigen::Index>(points.size()) - 1);
  for (std::size_t i = 1; i < points.size(); ++i) D.col(i - 1) = points[i] - points[0];
  return static_cast<int>(rank(D));
}

std::string describe(const RatVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

std::vector<Vertex> vertices_of(int n, const std::vector<Facet>& facets,
                                const std::function<bool(const RatVector&)>& contains,
                                const std::function<FacetSet(const RatVector&)>& tight) {
  std::vector<Vertex> out;
  const int d = static_cast<int>(facets.size());
  for_each_subset(d, n, [&](const std::vector<int>& S) {
    RatMatrix A(n, n);
    RatVector b(n);
    for (int r = 0; r < n; ++r) {
      A.row(r) = facets[S[r]].normal.cast<Rational>().transpose();
      b(r) = facets[S[r]].offset;
    }
    auto sol = solve_rational(A, b);
    if (sol.status != LinearSolution::Status::unique || !contains(sol.solution)) return;
    for (const auto& v : out)
      if (v.point == sol.solution) return;
    out.push_back({sol.solution, tight(sol.solution)});
  });
  std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return lex_less(a.point, b.point); });
  return out;
}

}  // namespace

HPolytope::HPolytope(int dimension, std::vector<Facet> facets) : n_(dimension), facets_(std::move(facets)) {
  if (n_ < 1) throw DomainError("polytope dimension must be at least 1");
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const auto& f = facets_[i];
    if (f.normal.size() != n_)
      throw DomainError("facet " + std::to_string(i) + ": normal has wrong dimension");
    Integer g = gcd_of(f.normal);
    if (g == 0) throw DomainError("facet " + std::to_string(i) + ": zero normal");
    if (g != 1) throw DomainError("facet " + std::to_string(i) + ": normal is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (facets_[j].normal == f.normal)
        throw DomainError("facets " + std::to_string(j) + " and " + std::to_string(i) + " share a normal");
  }

  // Bounded iff the recession cone {y : <a_i, y> <= 0} is {0}: the normals
  // have rank n and no extreme ray (cut out by n-1 independent normals)
  // satisfies every inequality.
  IntMatrix all(static_cast<Eigen::Index>(facets_.size()), n_);
  for (std::size_t i = 0; i < facets_.size(); ++i) all.row(i) = facets_[i].normal.transpose();
  if (rank(all) < n_) throw DomainError("polytope is unbounded (normals do not span)");
  bool unbounded = false;
  for_each_subset(facet_count(), n_ - 1, [&](const std::vector<int>& S) {
    if (unbounded) return;
    RatMatrix M(static_cast<Eigen::Index>(S.size()), n_);
    for (std::size_t r = 0; r < S.size(); ++r) M.row(r) = facets_[S[r]].normal.cast<Rational>().transpose();
    RatMatrix N = nullspace(M);
    if (N.cols() != 1) return;
    for (int s : {1, -1}) {
      RatVector y = N.col(0) * Rational(s);
      bool inside = true;
      for (const auto& f : facets_)
        if ((f.normal.cast<Rational>().dot(y)) > 0) inside = false;
      if (inside) unbounded = true;
    }
  });
  if (unbounded) throw DomainError("polytope is unbounded");

  vertices_ = vertices_of(n_, facets_, [this](const RatVector& x) { return contains(x); },
                          [this](const RatVector& x) { return tight_facets(x); });
  if (vertices_.empty()) throw DomainError("polytope is empty");
  std::vector<RatVector> pts;
  for (const auto& v : vertices_) pts.push_back(v.point);
  if (affine_dimension(pts) != n_) throw DomainError("polytope is not full-dimensional");
  for (int i = 0; i < facet_count(); ++i) {
    std::vector<RatVector> on;
    for (const auto& v : vertices_)
      if (std::binary_search(v.active.begin(), v.active.end(), i)) on.push_back(v.point);
    if (affine_dimension(on) != n_ - 1)
      throw DomainError("inequality " + std::to_string(i) + " is redundant (does not define a facet)");
  }
}

Rational HPolytope::slack(int facet, const RatVector& x) const {
  const auto& f = facets_.at(facet);
  return f.offset - f.normal.cast<Rational>().dot(x);
}

bool HPolytope::contains(const RatVector& x) const {
  if (x.size() != n_) throw DomainError("point has wrong dimension");
  for (int i = 0; i < facet_count(); ++i)
    if (slack(i, x) < 0) return false;
  return true;
}

FacetSet HPolytope::tight_facets(const RatVector& x) const {
  FacetSet out;
  for (int i = 0; i < facet_count(); ++i)
    if (slack(i, x) == 0) out.push_back(i);
  return out;
}

IntMatrix HPolytope::normal_rows(const FacetSet& facets) const {
  IntMatrix A(static_cast<Eigen::Index>(facets.size()), n_);
  for (std::size_t r = 0; r < facets.size(); ++r) A.row(r) = facets_.at(facets[r]).normal.transpose();
  return A;
}

std::vector<Vertex> enumerate_vertices(const HPolytope& P) { return P.vertices(); }

std::vector<Face> face_lattice(const HPolytope& P) {
  const auto& V = P.vertices();
  std::set<std::vector<int>> vertex_sets;
  std::vector<int> everything(V.size());
  for (std::size_t i = 0; i < V.size(); ++i) everything[i] = static_cast<int>(i);
  vertex_sets.insert(everything);
  std::vector<std::vector<int>> frontier;
  for (int f = 0; f < P.facet_count(); ++f) {
    std::vector<int> on;
    for (std::size_t i = 0; i < V.size(); ++i)
      if (std::binary_search(V[i].active.begin(), V[i].active.end(), f)) on.push_back(static_cast<int>(i));
    if (vertex_sets.insert(on).second) frontier.push_back(on);
  }
  // Close the facet vertex sets under intersection.
  std::vector<std::vector<int>> facet_sets = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& b : facet_sets) {
        std::vector<int> c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (!c.empty() && vertex_sets.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<Face> faces;
  for (const auto& s : vertex_sets) {
    Face F;
    FacetSet active = V[s.front()].active;
    std::vector<RatVector> pts;
    for (int i : s) {
      FacetSet tmp;
      std::set_intersection(active.begin(), active.end(), V[i].active.begin(), V[i].active.end(),
                            std::back_inserter(tmp));
      active = std::move(tmp);
      pts.push_back(V[i].point);
    }
    F.active = std::move(active);
    F.dim = affine_dimension(pts);
    F.vertices = std::move(pts);
    faces.push_back(std::move(F));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.active < b.active;
  });
  return faces;
}

std::optional<int> find_vertex(const HPolytope& P, const RatVector& v) {
  const auto& V = P.vertices();
  for (std::size_t i = 0; i < V.size(); ++i)
    if (V[i].point == v) return static_cast<int>(i);
  return std::nullopt;
}

IntMatrix edge_vectors_at_vertex(const HPolytope& P, const RatVector& v) {
  auto idx = find_vertex(P, v);
  if (!idx) throw DomainError(describe(v) + " is not a vertex");
  const auto& active = P.vertices()[*idx].active;
  const int n = P.dimension();
  if (static_cast<int>(active.size()) != n)
    throw NonSimpleVertex("vertex " + describe(v) + " has " + std::to_string(active.size()) +
                          " active facets (not simple)");
  RatMatrix inv = *inverse(P.normal_rows(active).cast<Rational>());
  IntMatrix U(n, n);
  for (int j = 0; j < n; ++j) {
    // Leaves the active facet at position n-1-j: A d = -e_{n-1-j}.
    RatVector d = -inv.col(n - 1 - j);
    U.col(j) = primitive_direction(d);
  }
  return U;
}

DelzantReport validate_delzant(const HPolytope& P) {
  DelzantReport report;
  report.pass = true;
  const int n = P.dimension();
  for (const auto& vx : P.vertices()) {
    VertexCheck c;
    c.vertex = vx.point;
    c.active = vx.active;
    c.simple = static_cast<int>(vx.active.size()) == n;
    if (c.simple) {
      IntMatrix U = edge_vectors_at_vertex(P, vx.point);
      // Each primitive edge direction must run along a genuine edge to
      // another vertex.
      c.rational = true;
      for (int j = 0; j < n; ++j) {
        RatVector u = U.col(j).cast<Rational>();
        std::optional<Rational> t_max;
        for (int i = 0; i < P.facet_count(); ++i) {
          Rational rate = P.facet(i).normal.cast<Rational>().dot(u);
          if (rate <= 0) continue;
          Rational t = P.slack(i, vx.point) / rate;
          if (!t_max || t < *t_max) t_max = t;
        }
        if (!t_max || *t_max <= 0 || !find_vertex(P, RatVector(vx.point + u * *t_max))) c.rational = false;
      }
      c.det = determinant(U);
      c.smooth = abs(*c.det) == 1;
    }
    if (!(c.simple && c.rational && c.smooth)) report.pass = false;
    report.vertices.push_back(std::move(c));
  }
  return report;
}

QuasitoricReport validate_quasitoric(const HPolytope& P, const std::vector<IntVector>& facet_vectors,
                                     bool strict) {
  if (static_cast<int>(facet_vectors.size()) != P.facet_count())
    throw std::invalid_argument("validate_quasitoric: expected " + std::to_string(P.facet_count()) +
                                " facet vectors, got " + std::to_string(facet_vectors.size()));
  const int n = P.dimension();
  for (const auto& a : facet_vectors)
    if (a.size() != n) throw std::invalid_argument("validate_quasitoric: facet vector has wrong dimension");
  QuasitoricReport report;
  report.strict = strict;
  report.pass = true;
  for (const auto& vx : P.vertices()) {
    if (static_cast<int>(vx.active.size()) != n)
      throw NonSimpleVertex("vertex " + describe(vx.point) + " is not simple");
    IntMatrix M(n, n);
    for (int j = 0; j < n; ++j) M.col(j) = facet_vectors[vx.active[j]];
    QuasitoricVertex q{vx.point, vx.active, determinant(M), false};
    q.ok = strict ? q.det == 1 : abs(q.det) == 1;
    if (!q.ok) report.pass = false;
    report.vertices.push_back(std::move(q));
  }
  return report;
}

Face minimal_face(const HPolytope& P, const RatVector& r) {
  if (!P.contains(r)) throw DomainError("point " + describe(r) + " is outside the polytope");
  Face F;
  F.active = P.tight_facets(r);
  F.dim = P.dimension() - static_cast<int>(rank(P.normal_rows(F.active)));
  for (const auto& v : P.vertices())
    if (std::includes(v.active.begin(), v.active.end(), F.active.begin(), F.active.end()))
      F.vertices.push_back(v.point);
  return F;
}

namespace {

Subtorus subtorus_from(IntMatrix G) {
  Subtorus T;
  T.saturated = rank(G) == G.cols() && maximal_minor_gcd(G) == 1;
  T.generators = std::move(G);
  return T;
}

}  // namespace

Subtorus characteristic_subtorus(const HPolytope& P, const Face& F) {
  IntMatrix G(P.dimension(), static_cast<Eigen::Index>(F.active.size()));
  for (std::size_t j = 0; j < F.active.size(); ++j) G.col(j) = P.facet(F.active[j]).normal;
  return subtorus_from(std::move(G));
}

Subtorus characteristic_subtorus(const std::vector<IntVector>& facet_vectors, const Face& F) {
  if (facet_vectors.empty()) throw std::invalid_argument("characteristic_subtorus: no facet vectors");
  IntMatrix G(facet_vectors.front().size(), static_cast<Eigen::Index>(F.active.size()));
  for (std::size_t j = 0; j < F.active.size(); ++j) G.col(j) = facet_vectors.at(F.active[j]);
  return subtorus_from(std::move(G));
}

bool in_subtorus(const Subtorus& T, const RatVector& difference) {
  const Eigen::Index n = difference.size();
  if (T.generators.cols() == 0) {
    for (const auto& x : difference)
      if (!is_integer(x)) return false;
    return true;
  }
  if (T.generators.rows() != n) throw std::invalid_argument("in_subtorus: dimension mismatch");
  // hnf(G^T): G^T U = [L | 0], so W = U^T maps span(G) onto the first r
  // coordinates and Z^n onto itself.
  HermiteForm h = hnf(T.generators.transpose());
  RatVector w = h.U.transpose().cast<Rational>() * difference;
  for (Eigen::Index i = h.rank; i < n; ++i)
    if (!is_integer(w(i))) return false;
  return true;
}

bool points_equivalent(const HPolytope& P, const RatVector& t1, const RatVector& r1, const RatVector& t2,
                       const RatVector& r2) {
  if (!P.contains(r1) || !P.contains(r2)) throw DomainError("base point outside the polytope");
  if (t1.size() != P.dimension() || t2.size() != P.dimension())
    throw DomainError("torus point has wrong dimension");
  if (r1 != r2) return false;
  return in_subtorus(characteristic_subtorus(P, minimal_face(P, r1)), RatVector(t1 - t2));
}

}  // namespace toriclift
