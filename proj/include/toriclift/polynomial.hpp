#pragma once

// Dense univariate polynomials and exact real-root counting (Sturm sequences).

#include "toriclift/numeric_types.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace toriclift {

/// Coefficients lowest degree first; the highest stored coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const Scalar& a) { return Polynomial({a}); }
  static Polynomial monomial(const Scalar& a, int degree) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) { return constant(s) * a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// f(g(x)).
  Polynomial compose(const Polynomial& g) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  /// Euclidean division over a field.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> r = a.c_, q(std::max<int>(a.degree() - b.degree() + 1, 0), Scalar(0));
    for (int d = a.degree(); d >= b.degree(); --d) {
      Scalar f = r[d] / b.leading();
      if (f == 0) continue;
      q[d - b.degree()] = f;
      for (int j = 0; j <= b.degree(); ++j) r[d - b.degree() + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<Scalar> c = c_;
    Scalar lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial(std::move(c));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using RatPoly = Polynomial<Rational>;

template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

/// Canonical Sturm chain p, p', -rem(p, p'), ... for a square-free p.
inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

inline int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct real roots of p strictly inside (lo, hi).
inline int sturm_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
  RatPoly q = squarefree_part(p);
  // Endpoint roots are simple after the square-free step; divide them out so
  // the chain is evaluated away from zeros of q.
  for (const Rational& e : {lo, hi})
    if (q(e) == 0) q = divmod(q, RatPoly{Rational(-e), Rational(1)}).first;
  if (q.degree() <= 0) return 0;
  auto chain = sturm_chain(q);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

struct RootInterval {
  Rational lo, hi;  ///< a root lies in [lo, hi]; lo == hi when it is exact
};

/// Isolating intervals, of width at most `width`, for every distinct root of p
/// strictly inside (lo, hi), in increasing order.
inline std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rational& lo,
                                               const Rational& hi,
                                               const Rational& width = Rational(1, 1024)) {
  std::vector<RootInterval> out;
  if (sturm_count(p, lo, hi) == 0) return out;
  std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
  RatPoly q = squarefree_part(p);
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = sturm_count(q, a, b);
    if (n == 0) continue;
    if (n == 1 && b - a <= width) {
      out.push_back({a, b});
      continue;
    }
    Rational mid = (a + b) / 2;
    if (q(mid) == 0) out.push_back({mid, mid});
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace toriclift
