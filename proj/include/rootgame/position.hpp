#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rootgame/board.hpp"
#include "rootgame/permutation.hpp"

namespace rootgame {

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WinMode { Exact, AtMostOne };

std::string to_string(WinMode mode);
WinMode parse_win_mode(const std::string& text);

/// Move k-tokens inside `region` horizontally from column i to column j and
/// vertically from row j to row i. Regions are named by their least square.
struct Move {
  Square region;
  int label = 0;
  int i = 0;
  int j = 0;
  bool operator==(const Move&) const = default;
};

/// Replace `region` by region ∩ part and region \ part.
struct Split {
  Square region;
  SquareSet part = 0;
  bool operator==(const Split&) const = default;
};

/// Bookkeeping step of the multi-class Grassmannian construction: every
/// square in `squares` is a one-square region holding a `from` token, which
/// is renamed to `to`. Not a move of the game.
struct Relabel {
  SquareSet squares = 0;
  int from = 0;
  int to = 0;
  bool operator==(const Relabel&) const = default;
};

using Action = std::variant<Move, Split, Relabel>;

/// Token configuration plus region partition. Tokens are stored label-major:
/// one square set per label.
class GamePosition {
 public:
  /// Board n with labels 1..m, no tokens, a single region.
  GamePosition(int n, int m);

  /// Throws GameError if the masks leave the board or `regions` is not a
  /// partition of the board into nonempty parts.
  GamePosition(int n, std::vector<SquareSet> label_masks, std::vector<SquareSet> regions);

  int n() const { return n_; }
  int m() const { return static_cast<int>(labels_.size()); }
  const Board& board() const { return Board::of(n_); }

  SquareSet tokens(int label) const { return labels_.at(label - 1); }
  const std::vector<SquareSet>& label_masks() const { return labels_; }

  /// Labels present in a square, ascending.
  std::vector<int> labels_at(Square s) const;
  int occupancy(Square s) const;
  int token_count(SquareSet squares) const;
  int token_count() const { return token_count(board().all()); }

  /// Regions sorted by least square.
  const std::vector<SquareSet>& regions() const { return regions_; }
  std::vector<Square> region_ids() const;
  std::optional<SquareSet> find_region(Square id) const;
  SquareSet region_containing(Square s) const;

  bool operator==(const GamePosition&) const = default;

 private:

  int n_ = 0;
  std::vector<SquareSet> labels_;
  std::vector<SquareSet> regions_;
};

/// Token k in S_ij iff perms[k-1](i) > perms[k-1](j); a single region.
GamePosition initial_position(std::span<const Permutation> perms, int n);

bool is_ideal(SquareSet set, int n);

/// True when `part` is region ∩ I for some ideal I.
bool is_ideal_trace(const Board& board, SquareSet region, SquareSet part);

/// Nonempty proper ideal traces A of the region holding exactly |A| tokens.
std::vector<SquareSet> splittable_subsets(const GamePosition& pos, Square region);

/// Every nonempty proper ideal trace of the region, in enumeration order.
std::vector<SquareSet> ideal_traces(const GamePosition& pos, Square region);

GamePosition split(const GamePosition& pos, Square region, SquareSet part);

/// Fixed point of splitting along every A with token count |A|. When
/// `performed` is given, the splits are appended in the order applied.
GamePosition split_maximally(const GamePosition& pos, std::vector<Split>* performed = nullptr);

/// Squares whose k-token moves under `mv`, paired with their destinations.
std::vector<std::pair<Square, Square>> move_transfers(const GamePosition& pos, const Move& mv);

GamePosition apply_move(const GamePosition& pos, const Move& mv);

GamePosition apply_relabel(const GamePosition& pos, const Relabel& rl);

/// Dispatches on the action kind; throws GameError on an illegal action.
GamePosition apply_action(const GamePosition& pos, const Action& action);

bool is_won(const GamePosition& pos, WinMode mode);
bool is_region_won(const GamePosition& pos, SquareSet region, WinMode mode);

/// Moves that displace at least one token, ordered by region, label, i, j.
std::vector<Move> legal_moves(const GamePosition& pos);
std::vector<Move> legal_moves_in(const GamePosition& pos, SquareSet region);

/// Sum over tokens of (column - row).
long potential(const GamePosition& pos);
long potential_bound(int n, int m);

/// max over ideal traces A of the region of (tokens(A) - |A|). Tokens never
/// leave an ideal, so a positive value means the region can never be won.
int max_excess(const GamePosition& pos, SquareSet region);

/// Position with every label renamed: label k becomes relabeling[k-1].
GamePosition relabel_all(const GamePosition& pos, std::span<const int> relabeling);

/// Plays `actions` from `pos`; throws GameError naming the failing index.
GamePosition replay(const GamePosition& pos, std::span<const Action> actions);

namespace ops {

/// New label mask after moving tokens of one label within a region.
SquareSet move_label(const Board& board, SquareSet region, SquareSet label_mask, int i, int j);

int excess(std::span<const SquareSet> label_masks, SquareSet part);

}  // namespace ops

}  // namespace rootgame
