#pragma once

// Truncated power series ("jets") and the valuation/parity analysis used to
// decide smoothness of sqrt(g(x^2)) and sqrt(g(x^2)) / x^m at x = 0.
//
// A jet of order N stores coefficients 0..N. It is either polynomial-exact
// (every coefficient above N is known to be zero) or truncated (coefficients
// above N are unknown). Decisions read only the valuation a, the parity of
// a - m and the sign of the leading coefficient, which is why they can be
// exact: sqrt(g(x^2)) = |x|^a sqrt(c_a) E(x^2) for an even unit series E.

#include "toriclift/numeric_types.hpp"
#include "toriclift/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toriclift {

inline constexpr int kDefaultJetOrder = 16;

template <class Scalar>
class Jet {
 public:
  Jet() : Jet(std::vector<Scalar>{}, 0, true) {}
  Jet(std::vector<Scalar> coeffs, int order, bool exact) : c_(std::move(coeffs)), exact_(exact) {
    if (order < 0) throw std::invalid_argument("Jet: negative truncation order");
    // Anything beyond the order is dropped; an exact jet that loses nonzero
    // terms that way is no longer exact.
    for (std::size_t i = order + 1; i < c_.size(); ++i)
      if (c_[i] != 0) exact_ = false;
    c_.resize(order + 1, Scalar(0));
  }

  static Jet from_polynomial(const Polynomial<Scalar>& p, int order) {
    return Jet(p.coefficients(), order, true);
  }
  static Jet constant(const Scalar& a, int order) { return Jet({a}, order, true); }
  static Jet identity(int order) {
    return Jet({Scalar(0), Scalar(1)}, std::max(order, 1), true);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool exact() const { return exact_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& operator[](int i) const { return c_.at(i); }

  /// The stored coefficients as a polynomial (the jet itself when exact).
  Polynomial<Scalar> polynomial() const { return Polynomial<Scalar>(c_); }

  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Jet truncate(int order) const { return Jet(c_, order, exact_); }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_ && a.exact_ == b.exact_; }

 private:
  std::vector<Scalar> c_;
  bool exact_;
};

using RatJet = Jet<Rational>;

enum class JetOp { add, sub, mul };

/// Works to the smaller of the two orders. The result is exact only when both
/// inputs are and no nonzero term of the true result falls above that order.
template <class Scalar>
Jet<Scalar> jet_arith(const Jet<Scalar>& a, const Jet<Scalar>& b, JetOp op) {
  const int order = std::min(a.order(), b.order());
  Polynomial<Scalar> pa = a.truncate(order).polynomial(), pb = b.truncate(order).polynomial();
  const bool exact = a.exact() && b.exact();
  Polynomial<Scalar> full;
  switch (op) {
    case JetOp::add: full = exact ? a.polynomial() + b.polynomial() : pa + pb; break;
    case JetOp::sub: full = exact ? a.polynomial() - b.polynomial() : pa - pb; break;
    case JetOp::mul: full = exact ? a.polynomial() * b.polynomial() : pa * pb; break;
  }
  return Jet<Scalar>(full.coefficients(), order, exact);
}

template <class Scalar>
Jet<Scalar> operator+(const Jet<Scalar>& a, const Jet<Scalar>& b) { return jet_arith(a, b, JetOp::add); }
template <class Scalar>
Jet<Scalar> operator-(const Jet<Scalar>& a, const Jet<Scalar>& b) { return jet_arith(a, b, JetOp::sub); }
template <class Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, const Jet<Scalar>& b) { return jet_arith(a, b, JetOp::mul); }

/// x -> g(x^2); order doubles and every odd coefficient is zero.
template <class Scalar>
Jet<Scalar> compose_square(const Jet<Scalar>& g) {
  std::vector<Scalar> c(2 * g.order() + 1, Scalar(0));
  for (int q = 0; q <= g.order(); ++q) c[2 * q] = g[q];
  return Jet<Scalar>(std::move(c), 2 * g.order(), g.exact());
}

/// f(g(x)) for g(0) = 0, to the smaller of the two orders.
template <class Scalar>
Jet<Scalar> compose(const Jet<Scalar>& f, const Jet<Scalar>& g) {
  if (g[0] != 0) throw std::invalid_argument("compose: inner jet has nonzero constant term");
  const int order = std::min(f.order(), g.order());
  if (f.exact() && g.exact())
    return Jet<Scalar>(f.polynomial().compose(g.polynomial()).coefficients(), order, true);
  // Horner in the truncated ring.
  Jet<Scalar> inner = Jet<Scalar>(g.coeffs(), order, false);
  Jet<Scalar> acc = Jet<Scalar>::constant(Scalar(0), order);
  for (int i = f.order(); i >= 0; --i)
    acc = Jet<Scalar>((acc * inner).coeffs(), order, false) + Jet<Scalar>::constant(f[i], order);
  return Jet<Scalar>(acc.coeffs(), order, false);
}

/// Compositional inverse: f(h(x)) = x to the order of f.
template <class Scalar>
Jet<Scalar> reversion(const Jet<Scalar>& f) {
  if (f.order() < 1) throw std::invalid_argument("reversion: order must be at least 1");
  if (f[0] != 0) throw std::invalid_argument("reversion: f(0) != 0");
  if (f[1] == 0) throw std::invalid_argument("reversion: f'(0) == 0");
  const int order = f.order();
  bool linear = f.exact();
  for (int i = 2; i <= order && linear; ++i) linear = f[i] == 0;
  std::vector<Scalar> h(order + 1, Scalar(0));
  h[1] = Scalar(1) / f[1];
  if (linear) return Jet<Scalar>(std::move(h), order, true);
  Polynomial<Scalar> fp = f.polynomial();
  for (int k = 2; k <= order; ++k) {
    // Coefficient of x^k in f(h) with h known through degree k-1.
    Jet<Scalar> hk(h, k, false);
    Scalar e = compose(Jet<Scalar>(fp.coefficients(), k, false), hk)[k];
    h[k] = -e / f[1];
  }
  return Jet<Scalar>(std::move(h), order, false);
}

struct Valuation {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  int value = 0;  ///< meaningful when finite
};

template <class Scalar>
Valuation valuation(const Jet<Scalar>& g) {
  for (int i = 0; i <= g.order(); ++i)
    if (g[i] != 0) return {Valuation::Kind::finite, i};
  return {g.exact() ? Valuation::Kind::infinite : Valuation::Kind::unknown, 0};
}

enum class SqrtTag { identically_zero, smooth_even, odd_one_sided, negative_leading, unknown };

inline const char* to_string(SqrtTag t) {
  switch (t) {
    case SqrtTag::identically_zero: return "IdenticallyZero";
    case SqrtTag::smooth_even: return "SmoothEven";
    case SqrtTag::odd_one_sided: return "OddOneSided";
    case SqrtTag::negative_leading: return "NegativeLeading";
    case SqrtTag::unknown: return "Unknown";
  }
  return "?";
}

struct SqrtClass {
  SqrtTag tag = SqrtTag::unknown;
  std::optional<int> valuation;
  std::optional<Rational> leading;
};

/// Classifies x -> sqrt(g(x^2)) near x = 0 on the whole real line.
inline SqrtClass sqrt_factor_class(const RatJet& g) {
  Valuation v = valuation(g);
  if (v.kind == Valuation::Kind::infinite) return {SqrtTag::identically_zero, {}, {}};
  if (v.kind == Valuation::Kind::unknown) return {SqrtTag::unknown, {}, {}};
  const Rational& c = g[v.value];
  SqrtTag tag = c < 0 ? SqrtTag::negative_leading
                      : (v.value % 2 == 0 ? SqrtTag::smooth_even : SqrtTag::odd_one_sided);
  return {tag, v.value, c};
}

struct DividedSmoothness {
  enum class Outcome { holds, fails, unknown };
  enum class Reason { none, negative_leading, negative_order, parity, truncated };
  Outcome outcome = Outcome::unknown;
  Reason reason = Reason::none;
  std::optional<int> valuation;
  int m = 0;
};

inline const char* to_string(DividedSmoothness::Reason r) {
  using R = DividedSmoothness::Reason;
  switch (r) {
    case R::none: return "none";
    case R::negative_leading: return "negative leading coefficient";
    case R::negative_order: return "valuation below exponent (unbounded quotient)";
    case R::parity: return "odd a - m (cone / odd-order derivative)";
    case R::truncated: return "all stored coefficients zero in a truncated jet";
  }
  return "?";
}

/// Smoothness at 0+ of sqrt(g(x^2)) / x^m with all odd-order derivatives zero,
/// i.e. x^(a-m) sqrt(c_a) E(x^2) with a - m a nonnegative even integer.
/// An identically zero g holds (the coordinate stays on its facet).
inline DividedSmoothness divided_smoothness(const RatJet& g, int m) {
  using O = DividedSmoothness::Outcome;
  using R = DividedSmoothness::Reason;
  Valuation v = valuation(g);
  if (v.kind == Valuation::Kind::infinite) return {O::holds, R::none, {}, m};
  if (v.kind == Valuation::Kind::unknown) return {O::unknown, R::truncated, {}, m};
  const int a = v.value;
  if (g[a] < 0) return {O::fails, R::negative_leading, a, m};
  if (a - m < 0) return {O::fails, R::negative_order, a, m};
  if ((a - m) % 2 != 0) return {O::fails, R::parity, a, m};
  return {O::holds, R::none, a, m};
}

}  // namespace toriclift
