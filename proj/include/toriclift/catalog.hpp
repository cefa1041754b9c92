#pragma once

// Named polytopes used by the tests, the shipped data files and the CLI.

#include "toriclift/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toriclift {

/// {x >= 0, x_1 + ... + x_n <= scale}, the moment image of CP^n.
HPolytope projective_simplex(int n, const Rational& scale);

/// [0, L_1] x ... x [0, L_n].
HPolytope box(const std::vector<Rational>& lengths);

/// Normals (-1,0), (0,-1), (0,1), (1,k) with offsets 0, 0, b, a. Needs a > k b.
HPolytope hirzebruch(int k, const Rational& a, const Rational& b);

/// conv{(0,0), (1,0), (0,2)}: simple and rational but singular at (1,0).
HPolytope non_delzant_triangle();

struct CatalogEntry {
  std::string name;
  HPolytope polytope;
  bool delzant;
};

/// Fixed order; names double as data file stems.
std::vector<CatalogEntry> catalog();

}  // namespace toriclift
