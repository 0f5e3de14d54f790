#pragma once

#include "kroncave/exact_int.hpp"
#include "kroncave/partition.hpp"

namespace kroncave {

// Lattice-point count over the box [a, a+b] x [c, c+d] of the points reachable
// from (x, y).
struct GammaQuery {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int x = 0;
  int y = 0;
};

// (u, v) is reached from (x, y) by zero or more unit steps (-1, -1) or (-1, +1):
// u <= x, |v - y| <= x - u and v - y = x - u (mod 2).
bool reachable(int x, int y, int u, int v) noexcept;

ExactInt gamma(const GammaQuery& q);

// Reduced Kronecker coefficient for two one-row shapes (j), (k), from the
// stable Gamma term of the two-row Kronecker formula. Zero when nu has more
// than three parts.
ExactInt reduced_two_row(int j, int k, const Partition& nu);

// Reduced Kronecker coefficient for two one-column shapes (1^j), (1^k), by the
// four-case hook formula. Always 0, 1 or 2.
ExactInt reduced_hook(int j, int k, const Partition& nu);

}  // namespace kroncave
