#include "rootgame/board.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace rootgame {

std::string to_string(Square s) {
  return "S(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

Board::Board(int n) : n_(n), offset_(n + 2, 0), rows_(n + 2, 0), columns_(n + 2, 0) {
  for (int i = 1; i <= n; ++i) {
    offset_[i + 1] = offset_[i] + (n - i);
    for (int j = i + 1; j <= n; ++j) squares_.push_back({i, j});
  }
  for (int idx = 0; idx < size(); ++idx) {
    const Square s = squares_[idx];
    const SquareSet b = SquareSet{1} << idx;
    all_ |= b;
    rows_[s.i] |= b;
    columns_[s.j] |= b;
  }
  up_.resize(size());
  for (int idx = 0; idx < size(); ++idx) {
    const Square s = squares_[idx];
    SquareSet mask = 0;
    for (int other = 0; other < size(); ++other) {
      const Square t = squares_[other];
      if (t.i <= s.i && t.j >= s.j) mask |= SquareSet{1} << other;
    }
    up_[idx] = mask;
  }
  closure_order_.resize(size());
  for (int idx = 0; idx < size(); ++idx) closure_order_[idx] = idx;
  std::sort(closure_order_.begin(), closure_order_.end(), [&](int a, int b) {
    const Square sa = squares_[a], sb = squares_[b];
    return sa.i != sb.i ? sa.i < sb.i : sa.j > sb.j;
  });
}

const Board& Board::of(int n) {
  if (n < 1 || n > kMaxBoard) {
    throw std::invalid_argument("board size must be in 1.." + std::to_string(kMaxBoard));
  }
  static std::array<std::unique_ptr<Board>, kMaxBoard + 1> boards;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int k = 1; k <= kMaxBoard; ++k) boards[k].reset(new Board(k));
  });
  return *boards[n];
}

SquareSet Board::ideal_closure(SquareSet set) const {
  SquareSet out = 0;
  for (SquareSet rest = set; rest != 0; rest &= rest - 1) out |= up_[std::countr_zero(rest)];
  return out;
}

bool Board::is_ideal(SquareSet set) const { return (set & ~all_) == 0 && ideal_closure(set) == set; }

std::vector<Square> Board::squares_of(SquareSet set) const {
  std::vector<Square> out;
  for (SquareSet rest = set; rest != 0; rest &= rest - 1) out.push_back(squares_[std::countr_zero(rest)]);
  return out;
}

}  // namespace rootgame
