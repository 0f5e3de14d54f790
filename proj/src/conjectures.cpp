#include "kroncave/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "kroncave/errors.hpp"

namespace kroncave {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

// Adds a violation for every nu where lhs falls short of rhs.
template <class Rep>
void record_shortfalls(ViolationReport& report, const std::vector<Partition>& args, const Rep& lhs,
                       const Rep& rhs) {
  std::set<Partition> support;
  for (const auto& [nu, c] : lhs.coeffs()) support.insert(nu);
  for (const auto& [nu, c] : rhs.coeffs()) support.insert(nu);
  for (const auto& nu : support) {
    ExactInt l = lhs[nu], r = rhs[nu];
    if (l < r) report.violations.push_back({args, nu, std::move(l), std::move(r)});
  }
}

ViolationReport compare_stable(std::string subject, std::vector<Partition> args,
                               const VirtualStableRep& lhs, const VirtualStableRep& rhs,
                               Clock::time_point start) {
  ViolationReport report;
  report.subject = std::move(subject);
  report.pairs_scanned = 1;
  // stable_ring_compare's shortfall list on the A side is exactly the violating nu.
  const auto cmp = stable_ring_compare(lhs, rhs);
  for (const auto& nu : cmp.shortfall_a) report.violations.push_back({args, nu, lhs[nu], rhs[nu]});
  report.elapsed = since(start);
  return report;
}

}  // namespace

void ViolationReport::absorb(const ViolationReport& other) {
  pairs_scanned += other.pairs_scanned;
  skipped += other.skipped;
  failed += other.failed;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

nlohmann::ordered_json to_json(const ViolationReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["subject"] = report.subject;
  j["pairsScanned"] = report.pairs_scanned;
  j["skipped"] = report.skipped;
  if (report.failed > 0) j["failed"] = report.failed;
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json row;
    row["lambda"] = v.args.empty() ? "-" : to_string(v.args[0]);
    row["mu"] = v.args.size() < 2 ? "-" : to_string(v.args[1]);
    if (v.args.size() > 2) {
      auto inputs = nlohmann::ordered_json::array();
      for (const auto& p : v.args) inputs.push_back(to_string(p));
      row["inputs"] = inputs;
    }
    row["nu"] = to_string(v.nu);
    row["lhs"] = to_decimal(v.lhs);
    row["rhs"] = to_decimal(v.rhs);
    violations.push_back(std::move(row));
  }
  j["violations"] = std::move(violations);
  if (with_timing) j["elapsedMillis"] = report.elapsed.count();
  return j;
}

ViolationReport check_midpoint_reduced(const Engine& engine, const Partition& lambda,
                                       const Partition& mu) {
  const auto start = Clock::now();
  const Partition mid = midpoint(lambda, mu);
  return compare_stable("midpoint-reduced", {lambda, mu}, engine.reduced_tensor_decompose(mid, mid),
                        engine.reduced_tensor_decompose(lambda, mu), start);
}

ViolationReport check_midpoint_kronecker(const Engine& engine, const Partition& lambda,
                                         const Partition& mu) {
  const auto start = Clock::now();
  if (lambda.size() != mu.size()) {
    throw SizeMismatch("midpoint-kronecker needs |lambda| = |mu|");
  }
  const Partition mid = midpoint(lambda, mu);
  ViolationReport report;
  report.subject = "midpoint-kronecker";
  report.pairs_scanned = 1;
  record_shortfalls(report, {lambda, mu}, engine.tensor_decompose(mid, mid),
                    engine.tensor_decompose(lambda, mu));
  report.elapsed = since(start);
  return report;
}

ViolationReport check_sort_conjecture(const Engine& engine, const Partition& lambda,
                                      const Partition& mu) {
  const auto start = Clock::now();
  const auto [first, second] = sort_split(lambda, mu);
  return compare_stable("sort", {lambda, mu}, engine.reduced_tensor_decompose(first, second),
                        engine.reduced_tensor_decompose(lambda, mu), start);
}

ViolationReport check_chain_conjecture(const Engine& engine, std::span<const Partition> parts) {
  const auto start = Clock::now();
  if (parts.empty()) throw std::invalid_argument("chain check needs at least one partition");
  const auto split = interleave_split(union_of(parts), static_cast<int>(parts.size()));
  auto product = [&](std::span<const Partition> factors) {
    VirtualStableRep acc = VirtualStableRep::single(factors.front());
    for (const auto& f : factors.subspan(1)) acc = engine.multiply(acc, VirtualStableRep::single(f));
    return acc;
  };
  return compare_stable("chain", std::vector<Partition>(parts.begin(), parts.end()), product(split),
                        product(parts), start);
}

ViolationReport check_schur_log_concavity(const Engine& engine, const Partition& lambda,
                                          const Partition& mu) {
  const auto start = Clock::now();
  const Partition mid = midpoint(lambda, mu);
  ViolationReport report;
  report.subject = "schur-lr";
  report.pairs_scanned = 1;
  for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
    ExactInt lhs = engine.lr(mid, mid, nu);
    ExactInt rhs = engine.lr(lambda, mu, nu);
    if (lhs < rhs) report.violations.push_back({{lambda, mu}, nu, std::move(lhs), std::move(rhs)});
  }
  report.elapsed = since(start);
  return report;
}

ViolationReport check_murnaghan_littlewood(const Engine& engine, int budget) {
  const auto start = Clock::now();
  ViolationReport report;
  report.subject = "murnaghan-littlewood";
  const auto all = partitions_up_to(budget);
  for (int s = 0; s <= budget; ++s) {
    const auto targets = partitions_of(s);
    for (const auto& lambda : all) {
      if (2 * lambda.size() > s) break;
      for (const auto& mu : partitions_of(s - lambda.size())) {
        if (mu < lambda) continue;  // both coefficients are symmetric in (lambda, mu)
        for (const auto& nu : targets) {
          ++report.pairs_scanned;
          ExactInt reduced = engine.reduced_kronecker(lambda, mu, nu);
          ExactInt lr = engine.lr(lambda, mu, nu);
          if (reduced != lr) report.violations.push_back({{lambda, mu}, nu, std::move(reduced), std::move(lr)});
        }
      }
    }
  }
  report.elapsed = since(start);
  return report;
}

std::vector<std::pair<int, bool>> check_saturation(const Engine& engine, const Partition& lambda,
                                                   const Partition& mu, const Partition& nu,
                                                   int k_max, SaturationMode mode) {
  if (mode == SaturationMode::kronecker && (lambda.size() != mu.size() || mu.size() != nu.size())) {
    throw SizeMismatch("kronecker saturation needs equal sizes");
  }
  std::vector<std::pair<int, bool>> out;
  for (int k = 1; k <= k_max; ++k) {
    const Partition a = scaled(lambda, k), b = scaled(mu, k), c = scaled(nu, k);
    const ExactInt v = mode == SaturationMode::kronecker ? engine.kronecker(a, b, c)
                                                         : engine.reduced_kronecker(a, b, c);
    out.emplace_back(k, v != 0);
  }
  return out;
}

DimensionCheck check_dim_log_concavity(const Partition& lambda, const Partition& mu, int d) {
  DimensionCheck check;
  check.midpoint = midpoint(lambda, mu);
  const ExactInt a = syt_count(pad(lambda, d));
  const ExactInt b = syt_count(pad(mu, d));
  const ExactInt m = syt_count(pad(check.midpoint, d));
  check.lhs = m * m;
  check.rhs = a * b;
  check.holds = check.lhs >= check.rhs;
  return check;
}

std::optional<ScanFamily> parse_family(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "midpoint-reduced") return ScanFamily::midpoint_reduced;
  if (s == "sort") return ScanFamily::sort;
  if (s == "chain") return ScanFamily::chain;
  if (s == "midpoint-kronecker") return ScanFamily::midpoint_kronecker;
  if (s == "schur-lr") return ScanFamily::schur_lr;
  return std::nullopt;
}

std::string_view family_name(ScanFamily family) {
  switch (family) {
    case ScanFamily::midpoint_reduced:
      return "midpoint-reduced";
    case ScanFamily::sort:
      return "sort";
    case ScanFamily::chain:
      return "chain";
    case ScanFamily::midpoint_kronecker:
      return "midpoint-kronecker";
    case ScanFamily::schur_lr:
      return "schur-lr";
  }
  return "?";
}

std::vector<std::vector<Partition>> scan_inputs(const ScanRequest& request) {
  std::vector<std::vector<Partition>> out;
  const int max = request.max_boxes;
  if (request.family == ScanFamily::midpoint_kronecker) {
    for (int m = 1; m <= max; ++m) {
      const auto block = partitions_of(m);
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = i; j < block.size(); ++j) out.push_back({block[i], block[j]});
      }
    }
    return out;
  }
  const auto all = partitions_up_to(max);
  if (request.family == ScanFamily::chain) {
    if (request.chain_length < 1) throw std::invalid_argument("chain length must be >= 1");
    // Multisets p_1 <= ... <= p_n in canonical order, ordered by total size first.
    for (int total = 0; total <= max; ++total) {
      std::vector<Partition> current;
      auto extend = [&](auto&& self, std::size_t from, int left) -> void {
        if (static_cast<int>(current.size()) == request.chain_length) {
          if (left == 0) out.push_back(current);
          return;
        }
        for (std::size_t i = from; i < all.size() && all[i].size() <= left; ++i) {
          current.push_back(all[i]);
          self(self, i, left - all[i].size());
          current.pop_back();
        }
      };
      extend(extend, 0, total);
    }
    return out;
  }
  for (int total = 0; total <= max; ++total) {
    for (const auto& lambda : all) {
      if (2 * lambda.size() > total) break;
      for (const auto& mu : partitions_of(total - lambda.size())) {
        if (mu < lambda) continue;
        out.push_back({lambda, mu});
      }
    }
  }
  return out;
}

ViolationReport scan(const Engine& engine, const ScanRequest& request) {
  const auto start = Clock::now();
  const auto inputs = scan_inputs(request);

  std::function<ViolationReport(const std::vector<Partition>&)> check;
  switch (request.family) {
    case ScanFamily::midpoint_reduced:
      check = [&](const auto& in) { return check_midpoint_reduced(engine, in[0], in[1]); };
      break;
    case ScanFamily::sort:
      check = [&](const auto& in) { return check_sort_conjecture(engine, in[0], in[1]); };
      break;
    case ScanFamily::chain:
      check = [&](const auto& in) { return check_chain_conjecture(engine, in); };
      break;
    case ScanFamily::midpoint_kronecker:
      check = [&](const auto& in) { return check_midpoint_kronecker(engine, in[0], in[1]); };
      break;
    case ScanFamily::schur_lr:
      check = [&](const auto& in) { return check_schur_log_concavity(engine, in[0], in[1]); };
      break;
  }

  std::vector<ViolationReport> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        results[i] = check(inputs[i]);
      } catch (const NotIntegral&) {
        results[i].skipped = 1;
      } catch (const Error&) {
        results[i].failed = 1;
      }
    }
  };
  const int jobs = std::max(1, request.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  ViolationReport merged;
  merged.subject = "scan " + std::string(family_name(request.family)) + " max-boxes=" +
                   std::to_string(request.max_boxes);
  if (request.family == ScanFamily::chain) merged.subject += " n=" + std::to_string(request.chain_length);
  for (const auto& r : results) merged.absorb(r);
  merged.elapsed = since(start);
  return merged;
}

}  // namespace kroncave
