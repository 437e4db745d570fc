#include "rootgame/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <sstream>
#include <unordered_map>

namespace rootgame {

std::string to_string(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::Winnable: return "winnable";
    case SolveOutcome::NotWinnable: return "not winnable";
    case SolveOutcome::BudgetExceeded: return "unknown (budget exceeded)";
  }
  return "?";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ROOTGAME_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

namespace {

struct BudgetHit {};

struct KeyHash {
  std::size_t operator()(const std::vector<SquareSet>& key) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (SquareSet v : key) h ^= std::hash<SquareSet>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// How a winnable state is won: the first action on a winning line.
struct Entry {
  bool win = false;
  bool split = false;
  SquareSet mask = 0;  // split part, or the moved label's mask
  int i = 0;
  int j = 0;
};

struct Occupancy {
  SquareSet ones = 0;
  SquareSet twos = 0;
};

Occupancy occupancy(const std::vector<SquareSet>& labels) {
  Occupancy o;
  for (SquareSet m : labels) {
    o.twos |= o.ones & m;
    o.ones |= m;
  }
  return o;
}

int token_total(const std::vector<SquareSet>& labels) {
  int total = 0;
  for (SquareSet m : labels) total += popcount(m);
  return total;
}

int excess_of(const std::vector<SquareSet>& labels, SquareSet part) {
  int total = -popcount(part);
  for (SquareSet m : labels) total += popcount(m & part);
  return total;
}

// Searches region subgames. Labels are kept label-indexed and restricted to
// the region; the memo key forgets label names, since the rules do not
// distinguish labels.
class Searcher {
 public:
  Searcher(const Board& board, WinMode mode, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : board_(board), mode_(mode), budget_(budget), nodes_(nodes) {}

  bool solve(SquareSet region, const std::vector<SquareSet>& labels) {
    if (won(region, labels)) return true;
    const int tokens = token_total(labels), squares = popcount(region);
    if (tokens > squares || (mode_ == WinMode::Exact && tokens < squares)) return false;

    auto key = make_key(region, labels);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second.win;
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) throw BudgetHit{};
    const bool tight = tokens == squares;
    Entry e = expand(region, labels, tight);
    memo_.emplace(std::move(key), e);
    return e.win;
  }

  void emit(SquareSet region, std::vector<SquareSet> labels, std::vector<Action>& out) const {
    while (!won(region, labels)) {
      const Entry& e = memo_.at(make_key(region, labels));
      if (!e.win) throw std::logic_error("certificate requested for a losing state");
      const Square id = board_.least(region);
      if (e.split) {
        out.push_back(Split{id, e.mask});
        emit(e.mask, restrict(labels, e.mask), out);
        emit(region & ~e.mask, restrict(labels, region & ~e.mask), out);
        return;
      }
      const auto k = std::find(labels.begin(), labels.end(), e.mask) - labels.begin();
      out.push_back(Move{id, static_cast<int>(k) + 1, e.i, e.j});
      labels[k] = ops::move_label(board_, region, labels[k], e.i, e.j);
    }
  }

  std::uint64_t hits() const { return hits_; }

  static std::vector<SquareSet> restrict(const std::vector<SquareSet>& labels, SquareSet part) {
    std::vector<SquareSet> out(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) out[k] = labels[k] & part;
    return out;
  }

 private:
  bool won(SquareSet region, const std::vector<SquareSet>& labels) const {
    const Occupancy o = occupancy(labels);
    return o.twos == 0 && (mode_ == WinMode::AtMostOne || o.ones == region);
  }

  static std::vector<SquareSet> make_key(SquareSet region, const std::vector<SquareSet>& labels) {
    std::vector<SquareSet> key;
    key.reserve(labels.size() + 1);
    for (SquareSet m : labels)
      if (m) key.push_back(m);
    std::sort(key.begin(), key.end());
    key.push_back(region);
    return key;
  }

  bool both(SquareSet region, const std::vector<SquareSet>& labels, SquareSet part) {
    const SquareSet rest = region & ~part;
    // Smaller side first: it fails faster.
    const SquareSet first = popcount(part) <= popcount(rest) ? part : rest;
    return solve(first, restrict(labels, first)) && solve(region & ~first, restrict(labels, region & ~first));
  }

  Entry expand(SquareSet region, const std::vector<SquareSet>& labels, bool tight) {
    Entry e;
    int worst = 0;
    SquareSet tight_part = 0;
    std::vector<SquareSet> deficit;
    for_each_trace(board_, region, [&](SquareSet a) {
      if (a == 0 || a == region) return true;
      const int x = excess_of(labels, a);
      worst = std::max(worst, x);
      if (x > 0) return false;
      if (x == 0 && !tight_part) tight_part = a;
      if (x < 0 && !tight) deficit.push_back(a);
      return true;
    });
    if (worst > 0) return e;  // tokens never leave an ideal

    if (tight_part) {
      e.split = true;
      e.mask = tight_part;
      e.win = both(region, labels, tight_part);
      return e;
    }

    for (const auto& c : ordered_moves(region, labels)) {
      std::vector<SquareSet> next = labels;
      next[c.label] = c.after;
      if (solve(region, next)) return {true, false, labels[c.label], c.i, c.j};
    }
    for (SquareSet a : deficit) {
      if (both(region, labels, a)) return {true, true, a, 0, 0};
    }
    return e;
  }

  struct Candidate {
    int label;
    int i;
    int j;
    SquareSet after;
    int singles;
  };

  // Displacing moves, those leaving more singly occupied squares first.
  std::vector<Candidate> ordered_moves(SquareSet region, const std::vector<SquareSet>& labels) const {
    std::vector<Candidate> out;
    const int n = board_.n();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const SquareSet mask = labels[k];
      if (!mask) continue;
      // Labels with equal masks are interchangeable.
      if (std::find(labels.begin(), labels.begin() + k, mask) != labels.begin() + k) continue;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const SquareSet after = ops::move_label(board_, region, mask, i, j);
          if (after == mask) continue;
          std::vector<SquareSet> next = labels;
          next[k] = after;
          const Occupancy o = occupancy(next);
          out.push_back({static_cast<int>(k), i, j, after, popcount(o.ones & ~o.twos)});
        }
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.singles > b.singles; });
    return out;
  }

  const Board& board_;
  WinMode mode_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t hits_ = 0;
  std::unordered_map<std::vector<SquareSet>, Entry, KeyHash> memo_;
};

struct RegionResult {
  bool win = false;
  bool budget = false;
  std::vector<Action> actions;
  std::uint64_t hits = 0;
};

RegionResult solve_region(const GamePosition& pos, SquareSet region, const SolveOptions& options,
                          std::atomic<std::uint64_t>& nodes) {
  RegionResult out;
  Searcher searcher(pos.board(), options.mode, options.budget, nodes);
  const auto labels = Searcher::restrict(pos.label_masks(), region);
  try {
    out.win = searcher.solve(region, labels);
    if (out.win) searcher.emit(region, labels, out.actions);
  } catch (const BudgetHit&) {
    out.budget = true;
  }
  out.hits = searcher.hits();
  return out;
}

}  // namespace

Verdict solve(const GamePosition& pos, const SolveOptions& options) {
  std::atomic<std::uint64_t> nodes{0};
  std::vector<RegionResult> results;
  const auto& regions = pos.regions();
  if (options.threads > 1 && regions.size() > 1) {
    std::vector<std::future<RegionResult>> pending;
    for (SquareSet r : regions)
      pending.push_back(std::async(std::launch::async, [&, r] { return solve_region(pos, r, options, nodes); }));
    for (auto& f : pending) results.push_back(f.get());
  } else {
    for (SquareSet r : regions) {
      results.push_back(solve_region(pos, r, options, nodes));
      if (!results.back().win) break;  // one lost region decides the game
    }
  }

  Verdict v;
  v.stats.nodes = nodes.load();
  for (const auto& r : results) v.stats.memo_hits += r.hits;
  const bool lost = std::any_of(results.begin(), results.end(), [](const auto& r) { return !r.win && !r.budget; });
  const bool budget = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.budget; });
  if (lost) {
    v.outcome = SolveOutcome::NotWinnable;
  } else if (budget) {
    v.outcome = SolveOutcome::BudgetExceeded;
  } else {
    v.outcome = SolveOutcome::Winnable;
    std::vector<Action> cert;
    for (auto& r : results) cert.insert(cert.end(), r.actions.begin(), r.actions.end());
    v.certificate = std::move(cert);
  }
  return v;
}

std::string canonicalize(const GamePosition& pos) {
  std::ostringstream out;
  out << "n" << pos.n() << ";m" << pos.m() << ";R";
  for (SquareSet r : pos.regions()) out << ':' << std::hex << r << std::dec;
  out << ";T";
  for (SquareSet t : pos.label_masks()) out << ':' << std::hex << t << std::dec;
  return out.str();
}

bool verify_certificate(const GamePosition& pos, std::span<const Action> actions, WinMode mode) {
  return is_won(replay(pos, actions), mode);
}

}  // namespace rootgame
