#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootgame/grassmann_problem.hpp"
#include "rootgame/pictures_lr.hpp"
#include "rootgame/position.hpp"

namespace rootgame {

/// zeros of sigma, then its ones, then n+1..n+N.
Permutation encode_pi(const ZeroOneString& sigma, int N);
/// zeros shifted by N, then 1..N, then ones shifted by N.
Permutation encode_pi_prime(const ZeroOneString& sigma, int N);
/// zeros descending, then n+N..n+1, then ones descending.
Permutation encode_pi_doubleprime(const ZeroOneString& sigma, int N);

/// [pi(sigma_1,N), ..., pi(sigma_s,N), pi'(mu,N), pi''(nu,N)].
std::vector<Permutation> encoded_permutations(const GrassmannProblem& prob);

struct ProblemShapes {
  std::vector<Partition> sigmas;  // lambda(sigma_k)
  Partition lower;                // N + lambda(mu)
  Partition big;                  // complement of lambda(nu) in (n-l) x (l+N)
};

ProblemShapes shapes(const GrassmannProblem& prob);

/// True when N + lambda(mu) does not fit inside the big shape, in which case
/// [Y_mu][Y_nu] = 0 already.
bool quick_zero(const GrassmannProblem& prob);

struct BuiltGame {
  GamePosition initial;         // one region
  GamePosition position;        // after `setup`
  std::vector<Action> setup;    // the splits, in order
  SquareSet big_region = 0;
  bool lower_fits = true;       // false exactly when quick_zero holds
};

/// Initial position of the encoded permutations on n+N, then split so that
/// every square holding an (s+2)-token is a one-square region. What is left
/// is the big region, shaped like the big shape with lower-left corner at
/// S_{n-l, n-l+1}.
BuiltGame build_game(const GrassmannProblem& prob);

/// Where one GRGA stage happens. Diagram box (row a, column c) is the
/// square S_{a, offset + c}.
struct GrgaLayout {
  int rows = 0;
  int offset = 0;
  int mover = 1;
  Partition moving;  // lambda_1
  Partition lower;   // lambda_2
  Partition big;     // lambda_3 bar
  SquareSet big_region = 0;

  Square square(Box b) const { return {b.row, offset + b.col}; }
  Box box(Square s) const { return {s.i, s.j - offset}; }
  SkewShape skew() const { return SkewShape(big, lower); }
};

/// The layout for s = 1 directly after build_game.
GrgaLayout initial_layout(const GrassmannProblem& prob, const BuiltGame& built);

struct TokenState {
  Box origin;
  Square current;
  Square destination;
  bool placed = false;
};

struct ReadinessState {
  std::vector<TokenState> tokens;
  std::vector<Square> skew_squares;  // every square of lambda_3 bar / lambda_2
  std::vector<bool> filled;          // parallel to skew_squares
};

struct ReadinessEntry {
  Square square;
  int number = 0;
  bool ready() const { return number == 0; }
};

/// Readiness numbers of unplaced tokens (at their current square) and of
/// empty skew squares, both in lexicographic order of the square.
struct ReadinessTable {
  std::vector<ReadinessEntry> tokens;
  std::vector<ReadinessEntry> squares;
};

ReadinessTable readiness_numbers(const ReadinessState& state);

/// Checks the four monotonicity properties of the numbering; on failure the
/// reason is written to `why`.
bool readiness_properties_hold(const ReadinessState& state, std::string* why = nullptr);

struct GrgaPanel {
  std::string caption;
  GamePosition position;
  ReadinessState state;
};

struct GrgaRun {
  std::vector<Move> moves;
  std::vector<GrgaPanel> panels;  // initial state, then one per Step-1 pass or Step-3 move
  GamePosition final_position;
  int step1_passes = 0;
  int step3_moves = 0;
};

/// Thrown when the run cannot proceed: a token is not left of its target, an
/// upward shift is blocked, or a move displaces a token that is not ready.
/// All of these mean N is too small for this problem.
class GrgaFailure : public GameError {
 public:
  GrgaFailure(const std::string& what, std::optional<Square> token, std::optional<Square> square)
      : GameError(what), token_(token), square_(square) {}
  std::optional<Square> token() const { return token_; }
  std::optional<Square> square() const { return square_; }

 private:
  std::optional<Square> token_;
  std::optional<Square> square_;
};

/// Runs the Grassmannian algorithm for one stage. Throws GameError if the
/// position does not match the layout or f is not a picture, GrgaFailure as
/// described above, and std::logic_error if an internal invariant breaks.
GrgaRun grga(const GamePosition& pos, const GrgaLayout& layout, const Picture& f);

/// s = 1 convenience: layout from build_game.
GrgaRun grga(const GrassmannProblem& prob, const BuiltGame& built, const Picture& f);

/// ASCII drawing of the rectangle rows x (l+N): digits are readiness numbers of
/// unplaced tokens, [d] empty skew squares with their number, '#' placed
/// tokens, '.' other squares of the big region, 'x' squares outside it.
std::string render_panel(const GrgaLayout& layout, const GrgaPanel& panel, int width);

enum class GrassmannOutcome { Won, Zero, Failed };

std::string to_string(GrassmannOutcome outcome);

struct GrassmannWin {
  GrassmannOutcome outcome = GrassmannOutcome::Zero;
  std::uint64_t number = 0;          // oracle intersection number
  std::optional<BuiltGame> game;
  std::vector<Action> trace;         // from game->initial, setup splits included
  std::vector<GrgaRun> stages;
  std::vector<GrgaLayout> layouts;
  std::string message;

  /// The winning sequence when outcome is Won.
  std::optional<std::vector<Action>> sequence() const;
};

/// Wins the game for a Grassmannian problem when the intersection number is
/// positive: the GRGA for s = 1, and for s > 1 one GRGA stage per sigma with
/// the sequestered tokens relabelled in between. Outcome Failed (as opposed
/// to Zero) means the number is positive but some stage could not run,
/// which can happen when N < l.
GrassmannWin win_grassmannian(const GrassmannProblem& prob);

}  // namespace rootgame
