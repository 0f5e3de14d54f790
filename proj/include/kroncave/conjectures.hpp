#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kroncave/coefficients.hpp"
#include "kroncave/partition.hpp"

namespace kroncave {

// One witness: at nu the conjecturally larger side (lhs) is smaller than rhs.
// args are the inputs of the check (lambda, mu, or the list of a chain check).
struct ViolationRecord {
  std::vector<Partition> args;
  Partition nu;
  ExactInt lhs;
  ExactInt rhs;
};

struct ViolationReport {
  std::string subject;
  std::size_t pairs_scanned = 0;
  std::size_t skipped = 0;
  // Cases that raised something other than NotIntegral during a scan.
  std::size_t failed = 0;
  std::vector<ViolationRecord> violations;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return violations.empty() && failed == 0; }
  // Appends counts and violations; keeps subject and elapsed.
  void absorb(const ViolationReport& other);
};

// Fields: subject, pairsScanned, skipped, violations[{lambda, mu, nu, lhs, rhs}],
// elapsedMillis. Values are exact decimal strings, partitions use the text form.
nlohmann::ordered_json to_json(const ViolationReport& report, bool with_timing = true);

// midpoint^2 >= lambda x mu in the stable ring. Throws NotIntegral.
ViolationReport check_midpoint_reduced(const Engine& engine, const Partition& lambda,
                                       const Partition& mu);
// The same comparison for S_n tensor products; fails on known triples.
ViolationReport check_midpoint_kronecker(const Engine& engine, const Partition& lambda,
                                         const Partition& mu);
// [sort_1][sort_2] >= [lambda][mu].
ViolationReport check_sort_conjecture(const Engine& engine, const Partition& lambda,
                                      const Partition& mu);
// prod_i [lambda^[i,n]] >= prod_i [parts_i] with lambda the union of the parts;
// products are left-associated.
ViolationReport check_chain_conjecture(const Engine& engine, std::span<const Partition> parts);
// c_{mid,mid}^nu >= c_{lambda,mu}^nu over every nu of size |lambda|+|mu|.
ViolationReport check_schur_log_concavity(const Engine& engine, const Partition& lambda,
                                          const Partition& mu);
// reduced = LR over every triple with |lambda| + |mu| = |nu| <= budget.
// Violations here record lhs = reduced, rhs = LR.
ViolationReport check_murnaghan_littlewood(const Engine& engine, int budget);

enum class SaturationMode { kronecker, reduced };

// (k, coefficient at (k lambda, k mu, k nu) != 0) for k = 1..k_max.
std::vector<std::pair<int, bool>> check_saturation(const Engine& engine, const Partition& lambda,
                                                   const Partition& mu, const Partition& nu,
                                                   int k_max, SaturationMode mode);

struct DimensionCheck {
  bool holds = false;
  Partition midpoint;
  ExactInt lhs;  // (f^{mid[d]})^2
  ExactInt rhs;  // f^{lambda[d]} f^{mu[d]}
};

// Throws NotIntegral, or PadTooSmall when d < max(|lambda| + lambda_1, |mu| + mu_1).
DimensionCheck check_dim_log_concavity(const Partition& lambda, const Partition& mu, int d);

enum class ScanFamily { midpoint_reduced, sort, chain, midpoint_kronecker, schur_lr };

std::optional<ScanFamily> parse_family(std::string_view name);
std::string_view family_name(ScanFamily family);

struct ScanRequest {
  ScanFamily family = ScanFamily::midpoint_reduced;
  // Total boxes over all inputs; for midpoint_kronecker, boxes per side.
  int max_boxes = 6;
  int chain_length = 3;
  int jobs = 1;
};

// Enumerates admissible inputs in canonical order, checks each (in parallel
// when jobs > 1) and folds the per-case reports in enumeration order.
ViolationReport scan(const Engine& engine, const ScanRequest& request);

// Inputs scan() would check, in order: pairs for the two-argument families,
// multisets of chain_length partitions for chain.
std::vector<std::vector<Partition>> scan_inputs(const ScanRequest& request);

}  // namespace kroncave
