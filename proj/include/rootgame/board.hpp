#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rootgame {

/// Largest supported board. Square sets are 64-bit masks, and an n = 11 board
/// has 55 squares.
inline constexpr int kMaxBoard = 11;

/// Bit k is set when the k-th square (row-major, lexicographic order) belongs.
using SquareSet = std::uint64_t;

/// The square S_ij, 1 <= i < j <= n. Ordering is lexicographic.
struct Square {
  int i = 0;
  int j = 0;
  auto operator<=>(const Square&) const = default;
};

std::string to_string(Square s);

inline int popcount(SquareSet s) { return std::popcount(s); }

/// Geometry of the triangular board {S_ij | 1 <= i < j <= n}.
///
/// Squares are numbered in lexicographic order, so the least set bit of a
/// square set is its lexicographically least square. Ideals are the
/// up-right closed sets: S_ij in A, i' <= i and j' >= j imply S_i'j' in A.
class Board {
 public:
  /// Shared immutable instance for 1 <= n <= kMaxBoard.
  static const Board& of(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(squares_.size()); }
  SquareSet all() const { return all_; }

  bool contains(Square s) const { return s.i >= 1 && s.i < s.j && s.j <= n_; }
  int index(int i, int j) const { return offset_[i] + (j - i - 1); }
  int index(Square s) const { return index(s.i, s.j); }
  Square square(int index) const { return squares_[index]; }
  SquareSet bit(int i, int j) const { return SquareSet{1} << index(i, j); }
  SquareSet bit(Square s) const { return bit(s.i, s.j); }

  SquareSet row(int i) const { return rows_[i]; }
  SquareSet column(int j) const { return columns_[j]; }

  /// Smallest ideal containing the square with this index.
  SquareSet up_closure(int index) const { return up_[index]; }
  SquareSet ideal_closure(SquareSet set) const;
  bool is_ideal(SquareSet set) const;

  /// Squares of `set` in lexicographic order.
  std::vector<Square> squares_of(SquareSet set) const;
  Square least(SquareSet set) const { return squares_[std::countr_zero(set)]; }

  /// Square indices ordered so that every square comes after all squares
  /// strictly above-right of it (rows ascending, columns descending).
  const std::vector<int>& closure_order() const { return closure_order_; }

 private:
  explicit Board(int n);

  int n_;
  SquareSet all_ = 0;
  std::vector<int> offset_;
  std::vector<Square> squares_;
  std::vector<SquareSet> rows_;
  std::vector<SquareSet> columns_;
  std::vector<SquareSet> up_;
  std::vector<int> closure_order_;
};

/// Calls visit(A) for every subset A of `region` that is the trace of an
/// ideal on it (A = region ∩ I for an ideal I), including the empty set and
/// `region` itself. Enumeration stops early when visit returns false.
template <typename Visitor>
void for_each_trace(const Board& board, SquareSet region, Visitor&& visit);

namespace detail {

template <typename Visitor>
bool trace_recurse(const Board& board, SquareSet region, const std::vector<int>& order,
                   std::size_t at, SquareSet chosen, Visitor& visit) {
  if (at == order.size()) return visit(chosen);
  const int idx = order[at];
  const SquareSet self = SquareSet{1} << idx;
  if (!trace_recurse(board, region, order, at + 1, chosen, visit)) return false;
  const SquareSet needed = board.up_closure(idx) & region & ~self;
  if ((needed & ~chosen) == 0) {
    return trace_recurse(board, region, order, at + 1, chosen | self, visit);
  }
  return true;
}

}  // namespace detail

template <typename Visitor>
void for_each_trace(const Board& board, SquareSet region, Visitor&& visit) {
  std::vector<int> order;
  for (int idx : board.closure_order())
    if (region >> idx & 1) order.push_back(idx);
  detail::trace_recurse(board, region, order, 0, SquareSet{0}, visit);
}

}  // namespace rootgame
