#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "rootgame/solver.hpp"

namespace rootgame {

inline constexpr int kCriteriaCount = 11;

struct SweepOptions {
  std::uint64_t budget = default_budget();  // per solver call
  int threads = 1;
  std::ostream* log = nullptr;              // tables and counts, when given
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs one acceptance sweep (1..kCriteriaCount).
CriterionResult run_criterion(int id, const SweepOptions& options = {});

/// "[PASS] 3 Grassmannian win <=> positivity (12.3 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace rootgame
