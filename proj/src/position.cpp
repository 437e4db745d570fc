#include "rootgame/position.hpp"

#include <algorithm>
#include <bit>

namespace rootgame {

std::string to_string(WinMode mode) { return mode == WinMode::Exact ? "exact" : "atmost"; }

WinMode parse_win_mode(const std::string& text) {
  if (text == "exact") return WinMode::Exact;
  if (text == "atmost") return WinMode::AtMostOne;
  throw std::invalid_argument("unknown win mode '" + text + "' (expected exact|atmost)");
}

GamePosition::GamePosition(int n, int m) : n_(n), labels_(m, 0), regions_{Board::of(n).all()} {
  if (m < 1) throw GameError("at least one label is required");
}

GamePosition::GamePosition(int n, std::vector<SquareSet> label_masks, std::vector<SquareSet> regions)
    : n_(n), labels_(std::move(label_masks)), regions_(std::move(regions)) {
  const Board& b = Board::of(n);
  if (labels_.empty()) throw GameError("at least one label is required");
  for (SquareSet mask : labels_) {
    if (mask & ~b.all()) throw GameError("token outside the board");
  }
  SquareSet seen = 0;
  for (SquareSet r : regions_) {
    if (r == 0) throw GameError("empty region");
    if (r & ~b.all()) throw GameError("region outside the board");
    if (r & seen) throw GameError("regions overlap");
    seen |= r;
  }
  if (seen != b.all()) throw GameError("regions do not cover the board");
  std::sort(regions_.begin(), regions_.end(),
            [](SquareSet a, SquareSet c) { return std::countr_zero(a) < std::countr_zero(c); });
}

std::vector<int> GamePosition::labels_at(Square s) const {
  std::vector<int> out;
  const SquareSet b = board().bit(s);
  for (int k = 0; k < m(); ++k)
    if (labels_[k] & b) out.push_back(k + 1);
  return out;
}

int GamePosition::occupancy(Square s) const { return token_count(board().bit(s)); }

int GamePosition::token_count(SquareSet squares) const {
  int total = 0;
  for (SquareSet mask : labels_) total += popcount(mask & squares);
  return total;
}

std::vector<Square> GamePosition::region_ids() const {
  std::vector<Square> ids;
  for (SquareSet r : regions_) ids.push_back(board().least(r));
  return ids;
}

std::optional<SquareSet> GamePosition::find_region(Square id) const {
  if (!board().contains(id)) return std::nullopt;
  const SquareSet b = board().bit(id);
  for (SquareSet r : regions_)
    if ((r & b) && board().least(r) == id) return r;
  return std::nullopt;
}

SquareSet GamePosition::region_containing(Square s) const {
  const SquareSet b = board().bit(s);
  for (SquareSet r : regions_)
    if (r & b) return r;
  throw GameError(to_string(s) + " is not on the board");
}

GamePosition initial_position(std::span<const Permutation> perms, int n) {
  if (perms.empty()) throw GameError("initial_position needs at least one permutation");
  const Board& b = Board::of(n);
  std::vector<SquareSet> masks;
  for (const Permutation& p : perms) {
    if (p.size() != n) {
      throw GameError("permutation " + p.to_string() + " is not in S_" + std::to_string(n));
    }
    SquareSet mask = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (p(i) > p(j)) mask |= b.bit(i, j);
    masks.push_back(mask);
  }
  return GamePosition(n, std::move(masks), {b.all()});
}

bool is_ideal(SquareSet set, int n) { return Board::of(n).is_ideal(set); }

bool is_ideal_trace(const Board& board, SquareSet region, SquareSet part) {
  if (part & ~region) return false;
  return (board.ideal_closure(part) & region) == part;
}

namespace ops {

SquareSet move_label(const Board& board, SquareSet region, SquareSet label_mask, int i, int j) {
  const int n = board.n();
  SquareSet out = label_mask;
  // Row j to row i.
  for (int h = j + 1; h <= n; ++h) {
    const SquareSet src = board.bit(j, h), dst = board.bit(i, h);
    if ((region & src) && (region & dst) && (label_mask & src) && !(label_mask & dst)) {
      out = (out & ~src) | dst;
    }
  }
  // Column i to column j.
  for (int h = 1; h < i; ++h) {
    const SquareSet src = board.bit(h, i), dst = board.bit(h, j);
    if ((region & src) && (region & dst) && (label_mask & src) && !(label_mask & dst)) {
      out = (out & ~src) | dst;
    }
  }
  return out;
}

int excess(std::span<const SquareSet> label_masks, SquareSet part) {
  int total = -popcount(part);
  for (SquareSet mask : label_masks) total += popcount(mask & part);
  return total;
}

}  // namespace ops

namespace {

SquareSet require_region(const GamePosition& pos, Square id) {
  auto r = pos.find_region(id);
  if (!r) throw GameError("no region with least square " + to_string(id));
  return *r;
}

void validate_move(const GamePosition& pos, const Move& mv) {
  require_region(pos, mv.region);
  if (mv.label < 1 || mv.label > pos.m()) {
    throw GameError("label " + std::to_string(mv.label) + " out of range 1.." + std::to_string(pos.m()));
  }
  if (!(1 <= mv.i && mv.i < mv.j && mv.j <= pos.n())) {
    throw GameError("pair (" + std::to_string(mv.i) + "," + std::to_string(mv.j) + ") is not 1 <= i < j <= n");
  }
}

}  // namespace

std::vector<SquareSet> splittable_subsets(const GamePosition& pos, Square region) {
  const SquareSet r = require_region(pos, region);
  std::vector<SquareSet> out;
  for_each_trace(pos.board(), r, [&](SquareSet a) {
    if (a != 0 && a != r && pos.token_count(a) == popcount(a)) out.push_back(a);
    return true;
  });
  return out;
}

std::vector<SquareSet> ideal_traces(const GamePosition& pos, Square region) {
  const SquareSet r = require_region(pos, region);
  std::vector<SquareSet> out;
  for_each_trace(pos.board(), r, [&](SquareSet a) {
    if (a != 0 && a != r) out.push_back(a);
    return true;
  });
  return out;
}

GamePosition split(const GamePosition& pos, Square region, SquareSet part) {
  const SquareSet r = require_region(pos, region);
  if (part == 0 || part == r) throw GameError("split part must be a nonempty proper subset of the region");
  if (!is_ideal_trace(pos.board(), r, part)) {
    throw GameError("split part is not the trace of an ideal on region " + to_string(region));
  }
  std::vector<SquareSet> regions;
  for (SquareSet other : pos.regions()) {
    if (other == r) {
      regions.push_back(r & part);
      regions.push_back(r & ~part);
    } else {
      regions.push_back(other);
    }
  }
  return GamePosition(pos.n(), pos.label_masks(), std::move(regions));
}

GamePosition split_maximally(const GamePosition& pos, std::vector<Split>* performed) {
  GamePosition current = pos;
  bool changed = true;
  while (changed) {
    changed = false;
    for (SquareSet r : current.regions()) {
      std::optional<SquareSet> found;
      for_each_trace(current.board(), r, [&](SquareSet a) {
        if (a != 0 && a != r && current.token_count(a) == popcount(a)) {
          found = a;
          return false;
        }
        return true;
      });
      if (found) {
        const Split s{current.board().least(r), *found};
        current = split(current, s.region, s.part);
        if (performed) performed->push_back(s);
        changed = true;
        break;
      }
    }
  }
  return current;
}

std::vector<std::pair<Square, Square>> move_transfers(const GamePosition& pos, const Move& mv) {
  validate_move(pos, mv);
  const Board& b = pos.board();
  const SquareSet r = *pos.find_region(mv.region);
  const SquareSet mask = pos.tokens(mv.label);
  std::vector<std::pair<Square, Square>> out;
  auto consider = [&](Square src, Square dst) {
    const SquareSet s = b.bit(src), d = b.bit(dst);
    if ((r & s) && (r & d) && (mask & s) && !(mask & d)) out.emplace_back(src, dst);
  };
  for (int h = mv.j + 1; h <= pos.n(); ++h) consider({mv.j, h}, {mv.i, h});
  for (int h = 1; h < mv.i; ++h) consider({h, mv.i}, {h, mv.j});
  return out;
}

GamePosition apply_move(const GamePosition& pos, const Move& mv) {
  validate_move(pos, mv);
  std::vector<SquareSet> masks = pos.label_masks();
  masks[mv.label - 1] = ops::move_label(pos.board(), *pos.find_region(mv.region), masks[mv.label - 1], mv.i, mv.j);
  return GamePosition(pos.n(), std::move(masks), pos.regions());
}

GamePosition apply_relabel(const GamePosition& pos, const Relabel& rl) {
  if (rl.from < 1 || rl.from > pos.m() || rl.to < 1 || rl.to > pos.m() || rl.from == rl.to) {
    throw GameError("relabel labels out of range");
  }
  const Board& b = pos.board();
  if (rl.squares & ~b.all()) throw GameError("relabel squares leave the board");
  for (Square s : b.squares_of(rl.squares)) {
    if (pos.region_containing(s) != b.bit(s)) throw GameError("relabel of " + to_string(s) + ", which is not a one-square region");
    if (!(pos.tokens(rl.from) & b.bit(s))) throw GameError("relabel of " + to_string(s) + ", which holds no source token");
    if (pos.tokens(rl.to) & b.bit(s)) throw GameError("relabel of " + to_string(s) + " would duplicate a label");
  }
  std::vector<SquareSet> masks = pos.label_masks();
  masks[rl.from - 1] &= ~rl.squares;
  masks[rl.to - 1] |= rl.squares;
  return GamePosition(pos.n(), std::move(masks), pos.regions());
}

GamePosition apply_action(const GamePosition& pos, const Action& action) {
  return std::visit(
      [&](const auto& a) -> GamePosition {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Move>) return apply_move(pos, a);
        else if constexpr (std::is_same_v<T, Split>) return split(pos, a.region, a.part);
        else return apply_relabel(pos, a);
      },
      action);
}

bool is_region_won(const GamePosition& pos, SquareSet region, WinMode mode) {
  for (Square s : pos.board().squares_of(region)) {
    const int c = pos.occupancy(s);
    if (mode == WinMode::Exact ? c != 1 : c > 1) return false;
  }
  return true;
}

bool is_won(const GamePosition& pos, WinMode mode) { return is_region_won(pos, pos.board().all(), mode); }

std::vector<Move> legal_moves_in(const GamePosition& pos, SquareSet region) {
  const Board& b = pos.board();
  const Square id = b.least(region);
  std::vector<Move> out;
  for (int k = 1; k <= pos.m(); ++k) {
    const SquareSet mask = pos.tokens(k);
    if ((mask & region) == 0) continue;
    for (int i = 1; i <= pos.n(); ++i)
      for (int j = i + 1; j <= pos.n(); ++j)
        if (ops::move_label(b, region, mask, i, j) != mask) out.push_back({id, k, i, j});
  }
  return out;
}

std::vector<Move> legal_moves(const GamePosition& pos) {
  std::vector<Move> out;
  for (SquareSet r : pos.regions()) {
    auto part = legal_moves_in(pos, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long potential(const GamePosition& pos) {
  long total = 0;
  for (SquareSet mask : pos.label_masks())
    for (Square s : pos.board().squares_of(mask)) total += s.j - s.i;
  return total;
}

long potential_bound(int n, int m) { return static_cast<long>(m) * n * (n - 1) / 2 * (n - 1); }

int max_excess(const GamePosition& pos, SquareSet region) {
  int best = 0;  // the empty trace
  for_each_trace(pos.board(), region, [&](SquareSet a) {
    best = std::max(best, ops::excess(pos.label_masks(), a));
    return true;
  });
  return best;
}

GamePosition relabel_all(const GamePosition& pos, std::span<const int> relabeling) {
  if (static_cast<int>(relabeling.size()) != pos.m()) throw GameError("relabeling has the wrong size");
  std::vector<SquareSet> masks(pos.m(), 0);
  std::vector<bool> used(pos.m() + 1, false);
  for (int k = 0; k < pos.m(); ++k) {
    const int target = relabeling[k];
    if (target < 1 || target > pos.m() || used[target]) throw GameError("relabeling is not a permutation");
    used[target] = true;
    masks[target - 1] = pos.label_masks()[k];
  }
  return GamePosition(pos.n(), std::move(masks), pos.regions());
}

GamePosition replay(const GamePosition& pos, std::span<const Action> actions) {
  GamePosition current = pos;
  for (std::size_t idx = 0; idx < actions.size(); ++idx) {
    try {
      current = apply_action(current, actions[idx]);
    } catch (const GameError& e) {
      throw GameError("action " + std::to_string(idx) + ": " + e.what());
    }
  }
  return current;
}

}  // namespace rootgame
