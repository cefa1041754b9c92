#pragma once

// Exact linear algebra over the integers and the rationals: Bareiss
// determinants, column-style Hermite normal form, row reduction and solving.
// Everything is templated on the scalar and accepts any Eigen dense
// expression; the scalar must be exact (Integer or Rational).

#include "toriclift/numeric_types.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace toriclift {

/// Fraction-free Gaussian elimination. Every intermediate division is exact,
/// so this works unchanged over Integer and Rational.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix is not square");
  Matrix<Scalar> M = A;
  const Eigen::Index n = M.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  int swaps = 0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      M.row(k).swap(M.row(p));
      ++swaps;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / previous;
      M(i, k) = 0;
    }
    previous = M(k, k);
  }
  Scalar d = M(n - 1, n - 1);
  return swaps % 2 ? Scalar(-d) : d;
}

struct DeterminantReport {
  Integer det;
  bool unimodular;
};

inline DeterminantReport det_and_unimodular(const IntMatrix& A) {
  Integer d = determinant(A);
  return {d, abs(d) == 1};
}

/// Divides an integer vector by the gcd of its entries. Signs are kept.
inline IntVector primitive(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) g = gcd(g, Integer(abs(x)));
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way.
inline IntVector primitive_direction(const RatVector& v) {
  Integer l(1);
  for (const auto& x : v) l = lcm(l, denominator(x));
  IntVector scaled(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) scaled(i) = numerator(v(i) * Rational(l));
  return primitive(scaled);
}

inline Integer gcd_of(const IntVector& v) {
  Integer g(0);
  for (const auto& x : v) g = gcd(g, Integer(abs(x)));
  return g;
}

struct HermiteForm {
  IntMatrix H;  ///< A·U, lower column echelon form
  IntMatrix U;  ///< unimodular
  Eigen::Index rank = 0;
};

/// Column-style Hermite normal form: H = A·U with U unimodular. Column j of H
/// (j < rank) has its leading nonzero entry (pivot) in row p_j, p_0 < p_1 < ...,
/// positive; entries of the pivot row left of the pivot lie in [0, pivot).
/// Columns from `rank` on are zero.
inline HermiteForm hnf(const IntMatrix& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  IntMatrix H = A;
  IntMatrix U = IntMatrix::Identity(n, n);
  auto combine = [&](Eigen::Index a, Eigen::Index b, const Integer& p, const Integer& q,
                     const Integer& r, const Integer& s) {
    // (col_a, col_b) <- (p·col_a + q·col_b, r·col_a + s·col_b), ps - qr = ±1
    for (auto* M : {&H, &U}) {
      IntVector ca = M->col(a), cb = M->col(b);
      M->col(a) = ca * p + cb * q;
      M->col(b) = ca * r + cb * s;
    }
  };
  Eigen::Index col = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;  // (row, col)
  for (Eigen::Index row = 0; row < m && col < n; ++row) {
    for (Eigen::Index j = col + 1; j < n; ++j) {
      if (H(row, j) == 0) continue;
      if (H(row, col) == 0) {
        H.col(col).swap(H.col(j));
        U.col(col).swap(U.col(j));
        continue;
      }
      // Extended gcd: x·a + y·b = g.
      Integer a = H(row, col), b = H(row, j);
      Integer x(1), y(0), x1(0), y1(1), aa = a, bb = b;
      while (bb != 0) {
        Integer q = aa / bb;
        Integer t = aa - q * bb; aa = bb; bb = t;
        t = x - q * x1; x = x1; x1 = t;
        t = y - q * y1; y = y1; y1 = t;
      }
      Integer g = aa;
      combine(col, j, x, y, Integer(-b / g), Integer(a / g));
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      H.col(col) = -H.col(col);
      U.col(col) = -U.col(col);
    }
    pivots.emplace_back(row, col);
    ++col;
  }
  // Reduce entries left of each pivot into [0, pivot).
  for (const auto& [row, c] : pivots) {
    const Integer pivot = H(row, c);
    for (Eigen::Index j = 0; j < c; ++j) {
      Integer q = toriclift::floor(Rational(H(row, j), pivot));
      if (q == 0) continue;
      H.col(j) -= H.col(c) * q;
      U.col(j) -= U.col(c) * q;
    }
  }
  return {std::move(H), std::move(U), col};
}

/// Reduced row echelon form; returns the pivot column of each nonzero row.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(Matrix<Scalar>& M) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < M.cols() && row < M.rows(); ++c) {
    Eigen::Index p = row;
    while (p < M.rows() && M(p, c) == 0) ++p;
    if (p == M.rows()) continue;
    M.row(row).swap(M.row(p));
    Scalar inv = Scalar(1) / M(row, c);
    M.row(row) *= inv;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      if (i == row || M(i, c) == 0) continue;
      Scalar f = M(i, c);
      M.row(i) -= M.row(row) * f;
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& A) {
  RatMatrix M = A.template cast<Rational>();
  return static_cast<Eigen::Index>(rref_in_place(M).size());
}

/// Columns form a basis of {x : A·x = 0}.
inline RatMatrix nullspace(const RatMatrix& A) {
  RatMatrix R = A;
  auto pivots = rref_in_place(R);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix N(A.cols(), A.cols() - static_cast<Eigen::Index>(pivots.size()));
  N.setZero();
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    N(free, out) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) N(pivots[r], out) = -R(r, free);
    ++out;
  }
  return N;
}

struct LinearSolution {
  enum class Status { unique, inconsistent, underdetermined };
  Status status = Status::inconsistent;
  RatVector solution;  ///< the solution, or a particular one when underdetermined
  RatMatrix nullspace; ///< empty unless underdetermined
};

inline LinearSolution solve_rational(const RatMatrix& A, const RatVector& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("solve_rational: dimension mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  aug << A, b;
  auto pivots = rref_in_place(aug);
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == A.cols()) return out;  // 0 = 1 row
  out.solution = RatVector::Zero(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.solution(pivots[r]) = aug(r, A.cols());
  if (static_cast<Eigen::Index>(pivots.size()) == A.cols()) {
    out.status = LinearSolution::Status::unique;
  } else {
    out.status = LinearSolution::Status::underdetermined;
    out.nullspace = toriclift::nullspace(A);
  }
  return out;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = A.rows();
  RatMatrix aug(n, 2 * n);
  aug << A, RatMatrix::Identity(n, n);
  auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
  return RatMatrix(aug.rightCols(n));
}

/// gcd of all k×k minors of an n×k integer matrix (k ≤ n). The columns span a
/// saturated sublattice of rank k exactly when this is 1.
inline Integer maximal_minor_gcd(const IntMatrix& G) {
  const Eigen::Index n = G.rows(), k = G.cols();
  if (k == 0) return Integer(1);
  if (k > n) return Integer(0);
  Integer g(0);
  std::vector<Eigen::Index> rows(k);
  for (Eigen::Index i = 0; i < k; ++i) rows[i] = i;
  while (true) {
    IntMatrix minor(k, k);
    for (Eigen::Index i = 0; i < k; ++i) minor.row(i) = G.row(rows[i]);
    g = gcd(g, Integer(abs(determinant(minor))));
    Eigen::Index i = k - 1;
    while (i >= 0 && rows[i] == n - k + i) --i;
    if (i < 0) break;
    ++rows[i];
    for (Eigen::Index j = i + 1; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  return g;
}

}  // namespace toriclift
