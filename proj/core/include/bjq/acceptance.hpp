#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bjq::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// Run the full acceptance suite; the seed feeds the randomized criteria so
/// identical seeds give identical reports.
std::vector<CriterionResult> run_all(std::uint64_t seed);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace bjq::acceptance
