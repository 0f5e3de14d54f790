#include "kroncave/verify.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "kroncave/closed_forms.hpp"
#include "kroncave/conjectures.hpp"
#include "kroncave/errors.hpp"

namespace kroncave {

const std::map<Partition, int>& s8_difference_table() {
  static const std::map<Partition, int> table{
      {{8}, 1},          {{6, 2}, 3},          {{7, 1}, 1},          {{2, 2, 2, 2}, 1},
      {{2, 2, 2, 1, 1}, 1},                    {{2, 2, 1, 1, 1, 1}, 1},
      {{1, 1, 1, 1, 1, 1, 1, 1}, -1},          {{4, 2, 2}, 5},       {{5, 1, 1, 1}, 3},
      {{5, 2, 1}, 5},    {{4, 2, 1, 1}, 6},    {{3, 2, 2, 1}, 5},    {{4, 1, 1, 1, 1}, 3},
      {{3, 2, 1, 1, 1}, 5},                    {{3, 1, 1, 1, 1, 1}, 2},
      {{6, 1, 1}, 1},    {{5, 3}, 2},          {{4, 4}, 1},          {{4, 3, 1}, 5},
      {{3, 3, 2}, 2},    {{3, 3, 1, 1}, 4},
  };
  return table;
}

namespace {

GoldenCheck s8_difference(const Engine& engine) {
  const Partition a{3, 3, 1, 1}, b{4, 4}, c{2, 2, 2, 2};
  const VirtualRep diff = engine.tensor_decompose(a, a) - engine.tensor_decompose(b, c);
  VirtualRep expected(8);
  for (const auto& [nu, v] : s8_difference_table()) expected.add(nu, v);
  std::ostringstream detail;
  detail << diff.coeffs().size() << " terms";
  return {"s8-tensor-difference", diff == expected, detail.str()};
}

GoldenCheck parity_family(const Engine& engine) {
  std::ostringstream detail;
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const Partition p{n, n};
    const ExactInt g = engine.kronecker(p, p, p);
    ok = ok && g == (n % 2 == 0 ? 1 : 0);
    detail << (n > 1 ? " " : "") << "N=" << n << ":" << g;
  }
  return {"two-row-parity", ok, detail.str()};
}

GoldenCheck kronecker_saturation(const Engine& engine) {
  const Partition p{1, 1};
  const auto r = check_saturation(engine, p, p, p, 2, SaturationMode::kronecker);
  const bool ok = r.size() == 2 && !r[0].second && r[1].second;
  return {"kronecker-saturation-fails", ok, "k=1 zero, k=2 nonzero"};
}

GoldenCheck s10_counterexample(const Engine& engine) {
  // (4,3,1,1,1) is the midpoint of the triple, not the violating nu.
  const Partition l{6, 4}, m{2, 2, 2, 2, 2};
  const auto report = check_midpoint_kronecker(engine, l, m);
  const bool ok = midpoint(l, m) == Partition{4, 3, 1, 1, 1} && !report.violations.empty();
  std::ostringstream detail;
  detail << report.violations.size() << " violations";
  return {"s10-midpoint-counterexample", ok, detail.str()};
}

GoldenCheck stable_lr_probe(const Engine& engine) {
  const Partition l{6, 4, 2}, m{4, 2, 2}, n{8, 6, 4, 2};
  const ExactInt reduced = engine.reduced_kronecker(l, m, n);
  const ExactInt lr = engine.lr(l, m, n);
  return {"reduced-equals-lr-probe", reduced == 6 && lr == 6,
          "reduced=" + to_decimal(reduced) + " lr=" + to_decimal(lr)};
}

GoldenCheck stable_lr_exhaustive(const Engine& engine) {
  const auto report = check_murnaghan_littlewood(engine, 6);
  return {"reduced-equals-lr-up-to-6", report.passed(),
          std::to_string(report.pairs_scanned) + " triples"};
}

GoldenCheck closed_forms(const Engine& engine, const VerifyOptions& options) {
  struct Query {
    int j, k;
    Partition nu;
  };
  std::vector<Query> queries;
  for (int j = 0; j <= options.closed_form_max; ++j) {
    for (int k = 0; k <= options.closed_form_max; ++k) {
      for (const auto& nu : partitions_up_to(j + k)) queries.push_back({j, k, nu});
    }
  }
  std::vector<char> bad(queries.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < queries.size(); i = next++) {
      const auto& q = queries[i];
      const bool rows = reduced_two_row(q.j, q.k, q.nu) ==
                        engine.reduced_kronecker(Partition::row(q.j), Partition::row(q.k), q.nu);
      const bool cols = reduced_hook(q.j, q.k, q.nu) ==
                        engine.reduced_kronecker(Partition::column(q.j), Partition::column(q.k), q.nu);
      bad[i] = !(rows && cols);
    }
  };
  std::vector<std::jthread> pool;
  for (int t = 1; t < options.jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::size_t mismatches = 0;
  for (char b : bad) mismatches += b;
  return {"closed-forms-match-engine", mismatches == 0,
          std::to_string(queries.size()) + " queries, " + std::to_string(mismatches) + " mismatches"};
}

GoldenCheck zero_triple(const Engine& engine) {
  const Partition col = Partition::column(8), nu{3, 3};
  const ExactInt closed = reduced_hook(8, 8, nu);
  const ExactInt direct = engine.reduced_kronecker(col, col, nu);
  return {"scaled-counterexample-zero-side", closed == 0 && direct == 0,
          "closed=" + to_decimal(closed) + " engine=" + to_decimal(direct)};
}

GoldenCheck scaled_nonzero(const Engine& engine) {
  const auto r =
      check_saturation(engine, Partition::column(8), Partition::column(8), {3, 3}, 3, SaturationMode::reduced);
  bool some = false;
  std::ostringstream detail;
  for (const auto& [k, nonzero] : r) {
    if (k >= 2) some = some || nonzero;
    detail << (k > 1 ? " " : "") << "k=" << k << ":" << (nonzero ? "nonzero" : "zero");
  }
  return {"scaled-counterexample-nonzero-side", some && !r[0].second, detail.str()};
}

}  // namespace

std::vector<GoldenCheck> verify_golden(const Engine& engine, const VerifyOptions& options) {
  std::vector<GoldenCheck> out;
  auto guarded = [&](const char* name, auto&& body) {
    try {
      out.push_back(body());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("error: ") + e.what()});
    }
  };
  guarded("s8-tensor-difference", [&] { return s8_difference(engine); });
  guarded("two-row-parity", [&] { return parity_family(engine); });
  guarded("kronecker-saturation-fails", [&] { return kronecker_saturation(engine); });
  guarded("s10-midpoint-counterexample", [&] { return s10_counterexample(engine); });
  guarded("reduced-equals-lr-probe", [&] { return stable_lr_probe(engine); });
  guarded("reduced-equals-lr-up-to-6", [&] { return stable_lr_exhaustive(engine); });
  guarded("closed-forms-match-engine", [&] { return closed_forms(engine, options); });
  guarded("scaled-counterexample-zero-side", [&] { return zero_triple(engine); });
  if (options.stretch) {
    guarded("scaled-counterexample-nonzero-side", [&] { return scaled_nonzero(engine); });
  }
  return out;
}

nlohmann::ordered_json to_json(const std::vector<GoldenCheck>& checks) {
  nlohmann::ordered_json j;
  j["subject"] = "verify";
  bool all = true;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["passed"] = all;
  j["checks"] = std::move(rows);
  return j;
}

}  // namespace kroncave
