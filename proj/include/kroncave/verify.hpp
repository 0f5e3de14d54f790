#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kroncave/coefficients.hpp"
#include "kroncave/partition.hpp"

namespace kroncave {

struct GoldenCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  // Also try the scaled zero triple at k = 2, 3 (large padded sizes, slow).
  bool stretch = false;
  int jobs = 1;
  // Row/column lengths covered by the closed-form comparison.
  int closed_form_max = 6;
};

// Every nonzero coefficient of V(3,3,1,1)^2 - V(4,4) x V(2,2,2,2) in S_8.
const std::map<Partition, int>& s8_difference_table();

// Known values, recomputed from scratch by the engine. The result does not
// depend on jobs or timing.
std::vector<GoldenCheck> verify_golden(const Engine& engine, const VerifyOptions& options);

nlohmann::ordered_json to_json(const std::vector<GoldenCheck>& checks);

}  // namespace kroncave
