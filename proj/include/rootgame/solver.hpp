#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootgame/position.hpp"

namespace rootgame {

enum class SolveOutcome { Winnable, NotWinnable, BudgetExceeded };

std::string to_string(SolveOutcome outcome);

struct SolveStats {
  std::uint64_t nodes = 0;      // region states expanded
  std::uint64_t memo_hits = 0;
};

struct Verdict {
  SolveOutcome outcome = SolveOutcome::NotWinnable;
  std::optional<std::vector<Action>> certificate;  // present when winnable
  SolveStats stats;

  bool winnable() const { return outcome == SolveOutcome::Winnable; }
  bool decided() const { return outcome != SolveOutcome::BudgetExceeded; }
};

/// 10^7, or the value of ROOTGAME_BUDGET when it is set to a positive integer.
std::uint64_t default_budget();

struct SolveOptions {
  WinMode mode = WinMode::Exact;
  std::uint64_t budget = default_budget();
  int threads = 1;  // independent top-level regions are solved concurrently
};

/// Depth-first search over moves and splits, memoized per region.
///
/// Splits along traces holding exactly as many tokens as squares are made
/// eagerly in both modes. In AtMostOne mode every other trace holding fewer
/// tokens than squares is also tried as a split. Each region is searched as
/// its own subgame and the certificates are concatenated in region order.
Verdict solve(const GamePosition& pos, const SolveOptions& options = {});

/// Stable text key; equal exactly when the positions are equal.
std::string canonicalize(const GamePosition& pos);

/// Replays the actions and reports whether the final position is won. Throws
/// GameError naming the index of the first illegal action.
bool verify_certificate(const GamePosition& pos, std::span<const Action> actions, WinMode mode = WinMode::Exact);

}  // namespace rootgame
