#include "oracles.hpp"

#include "toriclift/jet.hpp"

#include <doctest.h>

#include <random>

using namespace toriclift;

namespace {

RatJet jet(std::initializer_list<long> cs, int order, bool exact = true) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return RatJet(v, order, exact);
}

RatJet random_jet(std::mt19937& rng, int order, bool exact) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(order + 1);
  c[0] = 0;
  c[1] = Rational(num(rng) == 0 ? 1 : num(rng), den(rng));
  if (c[1] == 0) c[1] = 1;
  for (int i = 2; i <= order; ++i) c[i] = Rational(num(rng), den(rng));
  return RatJet(c, order, exact);
}

}  // namespace

TEST_CASE("construction drops terms above the order") {
  RatJet a = jet({1, 2, 3}, 1);
  CHECK(a.order() == 1);
  CHECK_FALSE(a.exact());
  RatJet b = jet({1, 2, 0}, 1);
  CHECK(b.exact());
  CHECK(RatJet::identity(4)[1] == 1);
  CHECK_THROWS(RatJet({}, -1, true));
}

TEST_CASE("arithmetic tracks exactness") {
  RatJet x = RatJet::identity(3);
  RatJet sq = x * x;
  CHECK(sq[2] == 1);
  CHECK(sq.exact());
  RatJet cube = sq * sq;  // x^4 does not fit in order 3
  CHECK_FALSE(cube.exact());
  CHECK(cube.coeffs() == std::vector<Rational>(4, Rational(0)));
  RatJet t = jet({0, 1}, 3, false);
  CHECK_FALSE((t + x).exact());
}

TEST_CASE("composition and square composition") {
  RatJet f = jet({1, 1, 1}, 6);  // 1 + s + s^2
  RatJet g = jet({0, 2}, 6);     // 2s
  RatJet h = compose(f, g);
  CHECK(h.exact());
  CHECK(h.coeffs()[0] == 1);
  CHECK(h.coeffs()[1] == 2);
  CHECK(h.coeffs()[2] == 4);
  CHECK_THROWS(compose(f, jet({1, 1}, 6)));
  RatJet sq = compose_square(jet({0, 1, 1}, 8));
  CHECK(sq[2] == 1);
  CHECK(sq[4] == 1);
  CHECK(sq[1] == 0);
}

TEST_CASE("reversion examples") {
  RatJet lin = jet({0, 2}, 16);
  RatJet r = reversion(lin);
  CHECK(r.exact());
  CHECK(r[1] == Rational(1, 2));
  // s + s^2 reverses to s - s^2 + 2 s^3 - 5 s^4 + ... (Catalan numbers).
  RatJet q = reversion(jet({0, 1, 1}, 6));
  CHECK_FALSE(q.exact());
  CHECK(q[2] == -1);
  CHECK(q[3] == 2);
  CHECK(q[4] == -5);
  CHECK(q[5] == 14);
  CHECK_THROWS(reversion(jet({1, 1}, 4)));
  CHECK_THROWS(reversion(jet({0, 0, 1}, 4)));
}

TEST_CASE("reversion round trip on random jets") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    RatJet f = random_jet(rng, 16, trial % 2 == 0);
    RatJet h = reversion(f);
    RatJet id1 = compose(f, h), id2 = compose(h, f);
    for (int i = 0; i <= 16; ++i) {
      CHECK(id1[i] == (i == 1 ? 1 : 0));
      CHECK(id2[i] == (i == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("valuation") {
  CHECK(valuation(jet({0, 0, 3}, 4)).value == 2);
  CHECK(valuation(jet({0}, 4)).kind == Valuation::Kind::infinite);
  CHECK(valuation(jet({0}, 4, false)).kind == Valuation::Kind::unknown);
}

TEST_CASE("sqrt factor classes") {
  CHECK(sqrt_factor_class(jet({0, 0, 1}, 8)).tag == SqrtTag::smooth_even);
  CHECK(sqrt_factor_class(jet({0, 1}, 8)).tag == SqrtTag::odd_one_sided);
  CHECK(sqrt_factor_class(jet({0, -1}, 8)).tag == SqrtTag::negative_leading);
  CHECK(sqrt_factor_class(jet({0}, 8)).tag == SqrtTag::identically_zero);
  CHECK(sqrt_factor_class(jet({0, 0}, 8, false)).tag == SqrtTag::unknown);
  CHECK(std::string(to_string(SqrtTag::smooth_even)) == "SmoothEven");
}

TEST_CASE("divided smoothness examples") {
  using O = DividedSmoothness::Outcome;
  using R = DividedSmoothness::Reason;
  CHECK(divided_smoothness(jet({0, 0, 1}, 8), 2).outcome == O::holds);  // s^2, m = 2
  CHECK(divided_smoothness(jet({0, 1}, 8), 1).outcome == O::holds);     // diagonal, m = 1
  auto p = divided_smoothness(jet({0, 1}, 8), 0);
  CHECK(p.outcome == O::fails);
  CHECK(p.reason == R::parity);
  CHECK(divided_smoothness(jet({0, 1}, 8), 3).reason == R::negative_order);
  CHECK(divided_smoothness(jet({0, -1}, 8), 1).reason == R::negative_leading);
  CHECK(divided_smoothness(jet({0}, 8), 5).outcome == O::holds);
  CHECK(divided_smoothness(jet({0, 0}, 8, false), 1).outcome == O::unknown);
  CHECK(divided_smoothness(jet({0, 0, 0, 1}, 8), -1).outcome == O::holds);  // a - m = 4
}

TEST_CASE("exact classification agrees with the numeric even-fit sampler") {
  // g = s^a (1 + s), h(x) = sqrt(g(x^2)) / x^m = x^(a-m) sqrt(1 + x^2) for x > 0.
  for (int a = 0; a <= 6; ++a) {
    std::vector<Rational> c(a + 2, Rational(0));
    c[a] = 1;
    c[a + 1] = 1;
    RatJet g(c, 16, true);
    for (int m = -2; m <= 4; ++m) {
      auto h = [a, m](double x) { return std::pow(x, a - m) * std::sqrt(1 + x * x); };
      oracle::Smoothness numeric = oracle::classify_even_smoothness(h);
      auto exact = divided_smoothness(g, m);
      CAPTURE(a);
      CAPTURE(m);
      CAPTURE(oracle::name(numeric));
      CHECK((exact.outcome == DividedSmoothness::Outcome::holds) == (numeric == oracle::Smoothness::smooth_even));
      if (a - m < 0) CHECK(numeric == oracle::Smoothness::unbounded);
    }
    auto sq = sqrt_factor_class(g);
    auto numeric = oracle::classify_even_smoothness([a](double x) { return std::pow(x, a) * std::sqrt(1 + x * x); });
    CHECK((sq.tag == SqrtTag::smooth_even) == (numeric == oracle::Smoothness::smooth_even));
    CHECK((sq.tag == SqrtTag::odd_one_sided) == (numeric == oracle::Smoothness::not_smooth));
  }
}
