#include <doctest.h>

#include "kroncave/closed_forms.hpp"
#include "kroncave/conjectures.hpp"
#include "kroncave/errors.hpp"
#include "oracles.hpp"

using namespace kroncave;

namespace {

bool has_nu(const ViolationReport& r, const Partition& nu) {
  for (const auto& v : r.violations) {
    if (v.nu == nu) return true;
  }
  return false;
}

void check_records(const ViolationReport& r) {
  for (const auto& v : r.violations) CHECK(v.lhs < v.rhs);
  CHECK(r.passed() == r.violations.empty());
}

}  // namespace

TEST_CASE("midpoint check in the stable ring") {
  Engine engine;
  const auto same = check_midpoint_reduced(engine, {2, 1}, {2, 1});
  CHECK(same.passed());
  CHECK(same.pairs_scanned == 1);
  const auto r = check_midpoint_reduced(engine, {3, 1}, {1, 1});
  CHECK(r.passed());
  CHECK(r.subject == "midpoint-reduced");
  CHECK_THROWS_AS(check_midpoint_reduced(engine, {2}, {1, 1}), NotIntegral);
}

TEST_CASE("midpoint check for S_n tensor products fails on known triples") {
  Engine engine;
  const auto r8 = check_midpoint_kronecker(engine, {4, 4}, {2, 2, 2, 2});
  check_records(r8);
  REQUIRE(has_nu(r8, Partition::column(8)));
  for (const auto& v : r8.violations) {
    if (v.nu == Partition::column(8)) {
      CHECK(v.lhs == 0);
      CHECK(v.rhs == 1);
    }
  }
  const auto r10 = check_midpoint_kronecker(engine, {6, 4}, {2, 2, 2, 2, 2});
  check_records(r10);
  CHECK_FALSE(r10.passed());
  CHECK(midpoint({6, 4}, {2, 2, 2, 2, 2}) == Partition{4, 3, 1, 1, 1});
  CHECK(has_nu(r10, Partition{2, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(check_midpoint_kronecker(engine, {3, 1}, {3, 1}).passed());
  CHECK_THROWS_AS(check_midpoint_kronecker(engine, {2}, {1}), SizeMismatch);
}

TEST_CASE("sort check") {
  Engine engine;
  CHECK(check_sort_conjecture(engine, Partition::column(2), Partition::column(4)).passed());
  CHECK(check_sort_conjecture(engine, {2, 1}, {2}).passed());
  // Already split: (3,1) U (2) = (3,2,1) gives back (3,1), (2).
  CHECK(check_sort_conjecture(engine, {3, 1}, {2}).passed());
}

TEST_CASE("chain check") {
  Engine engine;
  const std::vector<Partition> one{{2, 1}};
  CHECK(check_chain_conjecture(engine, one).passed());
  const std::vector<Partition> cols{{1}, {1, 1}, {1, 1, 1}};
  CHECK(check_chain_conjecture(engine, cols).passed());
  CHECK_THROWS_AS(check_chain_conjecture(engine, std::span<const Partition>{}), std::invalid_argument);
}

TEST_CASE("chain of two agrees with the sort check for |lambda| + |mu| <= 6") {
  Engine engine;
  ScanRequest req;
  req.family = ScanFamily::sort;
  req.max_boxes = 6;
  for (const auto& in : scan_inputs(req)) {
    const auto a = check_sort_conjecture(engine, in[0], in[1]);
    const auto b = check_chain_conjecture(engine, in);
    CHECK(a.passed() == b.passed());
    CHECK(a.violations.size() == b.violations.size());
  }
}

TEST_CASE("Schur log-concavity") {
  Engine engine;
  CHECK(check_schur_log_concavity(engine, {2, 2}, {2, 2}).passed());
  CHECK(check_schur_log_concavity(engine, {3, 1}, {1, 1}).passed());
  const Partition mid = midpoint({6, 4, 2}, {4, 2, 2});
  CHECK(mid == Partition{5, 3, 2});
  CHECK(engine.lr(mid, mid, {8, 6, 4, 2}) >= 6);
  CHECK_THROWS_AS(check_schur_log_concavity(engine, {2}, {1, 1}), NotIntegral);
}

TEST_CASE("reduced equals LR when the sizes add up") {
  Engine engine;
  const auto r4 = check_murnaghan_littlewood(engine, 4);
  CHECK(r4.passed());
  CHECK(r4.pairs_scanned > 0);
  CHECK(check_murnaghan_littlewood(engine, 6).passed());
  CHECK(engine.reduced_kronecker({6, 4, 2}, {4, 2, 2}, {8, 6, 4, 2}) == 6);
}

TEST_CASE("saturation") {
  Engine engine;
  const Partition p{1, 1};
  const auto k = check_saturation(engine, p, p, p, 2, SaturationMode::kronecker);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == std::pair{1, false});
  CHECK(k[1] == std::pair{2, true});
  const auto r = check_saturation(engine, Partition::column(8), Partition::column(8), {3, 3}, 1,
                                  SaturationMode::reduced);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == std::pair{1, false});
  CHECK_THROWS_AS(check_saturation(engine, {2}, {1}, {1}, 1, SaturationMode::kronecker), SizeMismatch);
  // Violating the Murnaghan inequalities once keeps them violated after scaling.
  for (const auto& [kk, nz] : check_saturation(engine, {1}, {1}, {3}, 3, SaturationMode::reduced)) CHECK_FALSE(nz);
}

TEST_CASE("dimension log-concavity") {
  const auto eq = check_dim_log_concavity({2, 1}, {2, 1}, 5);
  CHECK(eq.holds);
  CHECK(eq.lhs == eq.rhs);
  const auto a = check_dim_log_concavity({3, 1}, {1, 1}, 8);
  CHECK(a.holds);
  CHECK(a.lhs == syt_count(pad({2, 1}, 8)) * syt_count(pad({2, 1}, 8)));
  CHECK(a.rhs == oracle::syt(pad({3, 1}, 8)) * oracle::syt(pad({1, 1}, 8)));
  CHECK(check_dim_log_concavity({4}, {2, 2}, 10).holds);
  CHECK_THROWS_AS(check_dim_log_concavity({2}, {1, 1}, 6), NotIntegral);
  CHECK_THROWS_AS(check_dim_log_concavity({4}, {2, 2}, 7), PadTooSmall);
}

TEST_CASE("one-row midpoints and one-column sorts pass for j + k <= 10") {
  // Through the closed forms, which match the engine on these shapes.
  for (int j = 0; j <= 10; ++j) {
    for (int k = j; j + k <= 10; ++k) {
      const auto [s1, s2] = sort_split(Partition::column(j), Partition::column(k));
      for (const auto& nu : partitions_up_to(j + k)) {
        if ((j + k) % 2 == 0) {
          const int m = (j + k) / 2;
          CHECK(reduced_two_row(m, m, nu) >= reduced_two_row(j, k, nu));
        }
        CHECK(reduced_hook(s1.length(), s2.length(), nu) >= reduced_hook(j, k, nu));
      }
    }
  }
  Engine engine;
  for (int j = 0; j <= 6; ++j) {
    for (int k = j; j + k <= 6; ++k) {
      if ((j + k) % 2 == 0) CHECK(check_midpoint_reduced(engine, Partition::row(j), Partition::row(k)).passed());
      CHECK(check_sort_conjecture(engine, Partition::column(j), Partition::column(k)).passed());
    }
  }
}

TEST_CASE("scan inputs") {
  ScanRequest req;
  req.max_boxes = 2;
  const auto pairs = scan_inputs(req);
  // (-,-) (-,1) (-,2) (-,11) (1,1)
  CHECK(pairs.size() == 5);
  CHECK(pairs.front() == std::vector<Partition>{{}, {}});
  req.family = ScanFamily::midpoint_kronecker;
  req.max_boxes = 3;
  // sizes 1, 2, 3 with unordered pairs: 1 + 3 + 6
  CHECK(scan_inputs(req).size() == 10);
  req.family = ScanFamily::chain;
  req.chain_length = 2;
  req.max_boxes = 2;
  CHECK(scan_inputs(req).size() == 5);
}

TEST_CASE("scans are deterministic across job counts") {
  Engine engine;
  ScanRequest req;
  req.family = ScanFamily::midpoint_reduced;
  req.max_boxes = 5;
  const auto one = scan(engine, req);
  req.jobs = 3;
  const auto three = scan(engine, req);
  CHECK(to_json(one, false).dump() == to_json(three, false).dump());
  CHECK(one.passed());
  CHECK(one.skipped > 0);
  const auto j = to_json(one);
  CHECK(j.contains("elapsedMillis"));
  CHECK(j["subject"] == "scan midpoint-reduced max-boxes=5");
}

TEST_CASE("scans at small budgets") {
  Engine engine;
  for (auto family : {ScanFamily::midpoint_reduced, ScanFamily::schur_lr}) {
    ScanRequest req;
    req.family = family;
    req.max_boxes = 6;
    const auto r = scan(engine, req);
    CHECK(r.passed());
    CHECK(r.failed == 0);
  }
  ScanRequest chain;
  chain.family = ScanFamily::chain;
  chain.max_boxes = 2;
  CHECK(scan(engine, chain).passed());

  ScanRequest unstable;
  unstable.family = ScanFamily::midpoint_kronecker;
  unstable.max_boxes = 8;
  unstable.jobs = 2;
  const auto r = scan(engine, unstable);
  check_records(r);
  bool found = false;
  for (const auto& v : r.violations) {
    found = found || (v.args[0] == Partition{4, 4} && v.args[1] == Partition{2, 2, 2, 2});
  }
  CHECK(found);
}

TEST_CASE("sorting can unbalance sizes and then the sort inequality fails") {
  // sort_split((2),(1,1)) = ((2,1),(1)); the reduced coefficient at nu = (1)
  // vanishes on the sorted side (3 > 1 + 1) but not on the original side.
  Engine engine;
  const auto r = check_sort_conjecture(engine, {2}, {1, 1});
  check_records(r);
  REQUIRE(has_nu(r, {1}));
  for (int d = 5; d <= 8; ++d) {
    CHECK(oracle::kronecker(pad({2, 1}, d), pad({1}, d), pad({1}, d)) == 0);
    CHECK(oracle::kronecker(pad({2}, d), pad({1, 1}, d), pad({1}, d)) == 1);
  }
  ScanRequest req;
  req.family = ScanFamily::sort;
  req.max_boxes = 4;
  CHECK_FALSE(scan(engine, req).passed());
}

TEST_CASE("violation records can be recomputed") {
  Engine engine;
  const auto r = check_midpoint_kronecker(engine, {6, 4}, {2, 2, 2, 2, 2});
  const Partition mid = midpoint({6, 4}, {2, 2, 2, 2, 2});
  for (const auto& v : r.violations) {
    CHECK(engine.kronecker(mid, mid, v.nu) == v.lhs);
    CHECK(engine.kronecker(v.args[0], v.args[1], v.nu) == v.rhs);
  }
}

TEST_CASE("report serialization") {
  ViolationReport r;
  r.subject = "x";
  r.pairs_scanned = 2;
  r.violations.push_back({{{2}, {1, 1}}, {1, 1}, 1, 3});
  const auto j = to_json(r, false);
  CHECK(j.dump() ==
        R"({"subject":"x","pairsScanned":2,"skipped":0,"violations":[{"lambda":"2","mu":"1,1","nu":"1,1","lhs":"1","rhs":"3"}]})");
  CHECK(parse_family("midpoint_kronecker") == ScanFamily::midpoint_kronecker);
  CHECK(family_name(ScanFamily::schur_lr) == "schur-lr");
  CHECK_FALSE(parse_family("other"));
}
