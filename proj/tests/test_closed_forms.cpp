#include <doctest.h>

#include "kroncave/closed_forms.hpp"
#include "kroncave/coefficients.hpp"
#include "oracles.hpp"

using namespace kroncave;

TEST_CASE("reachability") {
  CHECK(reachable(3, 3, 3, 3));
  CHECK(reachable(3, 3, 2, 4));
  CHECK(reachable(3, 3, 1, 3));
  CHECK_FALSE(reachable(3, 3, 2, 3));
  CHECK_FALSE(reachable(3, 3, 4, 3));
  CHECK_FALSE(reachable(3, 3, 0, 7));
}

TEST_CASE("gamma equals breadth-first step enumeration for parameters <= 8") {
  for (int x = 0; x <= 8; ++x) {
    for (int y = 0; y <= 8; ++y) {
      for (int a = 0; a <= 8; a += 2) {
        for (int b = 0; b <= 8; b += 3) {
          for (int c = 0; c <= 8; ++c) {
            for (int d = 0; d <= 8; d += 2) {
              const GammaQuery q{a, b, c, d, x, y};
              CHECK(gamma(q) == oracle::breadth_first_gamma(q));
            }
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(gamma({-1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("two-row closed form on known values") {
  CHECK(reduced_two_row(1, 1, Partition{}) == 1);
  CHECK(reduced_two_row(1, 1, Partition{1}) == 1);
  CHECK(reduced_two_row(1, 1, Partition{2}) == 1);
  CHECK(reduced_two_row(1, 1, Partition{1, 1}) == 1);
  CHECK(reduced_two_row(2, 3, Partition{1, 1, 1, 1}) == 0);
  CHECK(reduced_two_row(2, 1, Partition{2, 1}) == reduced_two_row(1, 2, Partition{2, 1}));
}

TEST_CASE("hook closed form on known values") {
  CHECK(reduced_hook(8, 8, Partition{3, 3}) == 0);
  CHECK(reduced_hook(0, 2, Partition{1, 1}) == 1);
  CHECK(reduced_hook(0, 2, Partition{2}) == 0);
  CHECK(reduced_hook(2, 2, Partition{}) == 1);
  CHECK(reduced_hook(2, 3, Partition{}) == 0);
  CHECK(reduced_hook(1, 1, Partition{1}) == 1);
  for (int j = 0; j <= 5; ++j) {
    for (int k = 0; k <= 5; ++k) {
      for (const auto& nu : partitions_up_to(j + k)) {
        const ExactInt v = reduced_hook(j, k, nu);
        CHECK(v >= 0);
        CHECK(v <= 2);
        CHECK(v == reduced_hook(k, j, nu));
      }
    }
  }
}

TEST_CASE("closed forms agree with the character engine for j, k <= 4") {
  Engine engine;
  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= 4; ++k) {
      for (const auto& nu : partitions_up_to(j + k)) {
        CHECK(reduced_two_row(j, k, nu) == engine.reduced_kronecker(Partition::row(j), Partition::row(k), nu));
        CHECK(reduced_hook(j, k, nu) ==
              engine.reduced_kronecker(Partition::column(j), Partition::column(k), nu));
      }
    }
  }
}
