#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "kroncave/errors.hpp"
#include "kroncave/partition.hpp"
#include "oracles.hpp"

using namespace kroncave;

TEST_CASE("construction validates parts") {
  CHECK(Partition{3, 3, 1, 1}.size() == 8);
  CHECK(Partition{3, 3, 1, 1}.length() == 4);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), InvalidPartition);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), InvalidPartition);
  CHECK_THROWS_AS(Partition(std::vector<int>{-1}), InvalidPartition);
  CHECK(Partition::from_multiset({1, 0, 3, 1}) == Partition{3, 1, 1});
  CHECK(Partition::row(0).empty());
  CHECK(Partition::column(3) == Partition{1, 1, 1});
  CHECK(to_string(Partition{}) == "-");
  CHECK(to_string(Partition{3, 3, 1, 1}) == "3,3,1,1");
  std::ostringstream os;
  os << Partition{2, 1};
  CHECK(os.str() == "2,1");
}

TEST_CASE("canonical order") {
  CHECK(Partition{4} < Partition{3, 1});
  CHECK(Partition{3, 1} < Partition{2, 2});
  CHECK(Partition{1, 1, 1, 1} < Partition{5});
  CHECK(Partition{} < Partition{1});
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<int>(ps.size()) == expected[n]);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    for (const auto& p : ps) CHECK(p.size() == n);
  }
  const auto all = partitions_up_to(6);
  CHECK(all.size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("pad") {
  CHECK(pad(Partition{2, 1}, 6) == Partition{3, 2, 1});
  CHECK(pad(Partition{2, 1}, 5) == Partition{2, 2, 1});
  CHECK_THROWS_AS(pad(Partition{2, 1}, 4), PadTooSmall);
  CHECK(pad(Partition{}, 0).empty());
  CHECK(pad(Partition{}, 3) == Partition{3});
  CHECK(min_pad(Partition{3, 1}) == 7);
}

TEST_CASE("conjugate is an involution and preserves size") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}).empty());
  for (const auto& p : partitions_up_to(9)) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
  }
}

TEST_CASE("midpoint") {
  CHECK(midpoint(Partition{3, 1}, Partition{1, 1}) == Partition{2, 1});
  CHECK(midpoint(Partition{4}, Partition{2, 2}) == Partition{3, 1});
  CHECK_THROWS_AS(midpoint(Partition{2}, Partition{1, 1}), NotIntegral);
  CHECK(midpoint(Partition{2}, Partition{1, 1}, MidpointMode::ceil) == Partition{2, 1});
  CHECK(midpoint(Partition{2}, Partition{1, 1}, MidpointMode::floor) == Partition{1});
  for (const auto& p : partitions_up_to(6)) CHECK(midpoint(p, p) == p);
}

TEST_CASE("ceil and floor midpoints conjugate to the sort split") {
  const auto all = partitions_up_to(8);
  for (const auto& l : all) {
    for (const auto& m : all) {
      const auto [s1, s2] = sort_split(conjugate(l), conjugate(m));
      CHECK(conjugate(midpoint(l, m, MidpointMode::ceil)) == s1);
      CHECK(conjugate(midpoint(l, m, MidpointMode::floor)) == s2);
    }
  }
}

TEST_CASE("sort and interleave splits") {
  CHECK(union_of(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2, 2, 1});
  const auto [a, b] = sort_split(Partition{3, 1}, Partition{2, 2});
  CHECK(a == Partition{3, 2});
  CHECK(b == Partition{2, 1});
  const auto parts = interleave_split(Partition{5, 4, 3, 2, 1}, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Partition{5, 2});
  CHECK(parts[1] == Partition{4, 1});
  CHECK(parts[2] == Partition{3});
  CHECK_THROWS_AS(interleave_split(Partition{1}, 0), std::invalid_argument);
  for (const auto& l : partitions_up_to(6)) {
    for (const auto& m : partitions_up_to(6)) {
      const auto s = sort_split(l, m);
      const auto i = interleave_split(union_of(l, m), 2);
      CHECK(i[0] == s.first);
      CHECK(i[1] == s.second);
    }
  }
}

TEST_CASE("scaled and contains") {
  CHECK(scaled(Partition{1, 1}, 3) == Partition{3, 3});
  CHECK(scaled(Partition{2, 1}, 0).empty());
  CHECK(contains(Partition{3, 2}, Partition{2, 2}));
  CHECK_FALSE(contains(Partition{3}, Partition{1, 1}));
}

TEST_CASE("hook length formula matches corner-removal recursion") {
  CHECK(syt_count(Partition{}) == 1);
  CHECK(syt_count(Partition{3, 3, 1, 1}) == 56);
  for (const auto& p : partitions_up_to(14)) CHECK(syt_count(p) == oracle::syt(p));
}

TEST_CASE("double hook decomposition") {
  const auto d = double_hook_decompose(Partition{5, 3, 2, 2, 1});
  REQUIRE(d);
  CHECK(d->n4 == 5);
  CHECK(d->n3 == 3);
  CHECK(d->d2 == 2);
  CHECK(d->d1 == 1);
  CHECK(d->x() == 5);
  CHECK(d->reassemble() == Partition{5, 3, 2, 2, 1});
  CHECK_FALSE(double_hook_decompose(Partition{3, 3, 3}));
  for (const auto& p : partitions_up_to(10)) {
    if (auto h = double_hook_decompose(p)) CHECK(h->reassemble() == p);
  }
}

TEST_CASE("Murnaghan inequalities") {
  CHECK(murnaghan_inequalities(Partition{1}, Partition{1}, Partition{2}));
  CHECK_FALSE(murnaghan_inequalities(Partition{1}, Partition{1}, Partition{3}));
  CHECK(murnaghan_inequalities(Partition{}, Partition{}, Partition{}));
}
