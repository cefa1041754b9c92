#include "toriclift/catalog.hpp"

namespace toriclift {

namespace {

IntVector unit(int n, int i, int value) {
  IntVector v = IntVector::Zero(n);
  v(i) = value;
  return v;
}

IntVector int_vector(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

}  // namespace

HPolytope projective_simplex(int n, const Rational& scale) {
  if (n < 1 || scale <= 0) throw DomainError("simplex needs n >= 1 and a positive scale");
  std::vector<Facet> f;
  for (int i = 0; i < n; ++i) f.push_back({unit(n, i, -1), Rational(0)});
  f.push_back({IntVector::Ones(n), scale});
  return HPolytope(n, std::move(f));
}

HPolytope box(const std::vector<Rational>& lengths) {
  const int n = static_cast<int>(lengths.size());
  if (n < 1) throw DomainError("box needs at least one side");
  std::vector<Facet> f;
  for (int i = 0; i < n; ++i) {
    if (lengths[i] <= 0) throw DomainError("box sides must be positive");
    f.push_back({unit(n, i, -1), Rational(0)});
    f.push_back({unit(n, i, 1), lengths[i]});
  }
  return HPolytope(n, std::move(f));
}

HPolytope hirzebruch(int k, const Rational& a, const Rational& b) {
  if (k < 0 || b <= 0 || a <= k * b) throw DomainError("hirzebruch polytope needs k >= 0, b > 0, a > k b");
  return HPolytope(2, {{int_vector({-1, 0}), Rational(0)},
                       {int_vector({0, -1}), Rational(0)},
                       {int_vector({0, 1}), b},
                       {int_vector({1, k}), a}});
}

HPolytope non_delzant_triangle() {
  return HPolytope(2, {{int_vector({-1, 0}), Rational(0)},
                       {int_vector({0, -1}), Rational(0)},
                       {int_vector({2, 1}), Rational(2)}});
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"cp1_2", projective_simplex(1, 2), true});
  c.push_back({"cp2_3", projective_simplex(2, 3), true});
  c.push_back({"cp3_1", projective_simplex(3, 1), true});
  c.push_back({"cp4_1", projective_simplex(4, 1), true});
  c.push_back({"square", box({1, 1}), true});
  c.push_back({"rectangle_2x1", box({2, 1}), true});
  c.push_back({"cube", box({1, 1, 1}), true});
  c.push_back({"hirzebruch_1", hirzebruch(1, 2, 1), true});
  c.push_back({"hirzebruch_2", hirzebruch(2, 3, 1), true});
  c.push_back({"non_delzant_triangle", non_delzant_triangle(), false});
  return c;
}

}  // namespace toriclift
