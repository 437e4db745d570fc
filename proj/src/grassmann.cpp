#include "rootgame/grassmann.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rootgame {

Permutation encode_pi(const ZeroOneString& sigma, int N) {
  std::vector<int> images = sigma.zero_positions();
  for (int j : sigma.one_positions()) images.push_back(j);
  for (int k = 1; k <= N; ++k) images.push_back(sigma.size() + k);
  return Permutation(std::move(images));
}

Permutation encode_pi_prime(const ZeroOneString& sigma, int N) {
  std::vector<int> images;
  for (int i : sigma.zero_positions()) images.push_back(i + N);
  for (int k = 1; k <= N; ++k) images.push_back(k);
  for (int j : sigma.one_positions()) images.push_back(j + N);
  return Permutation(std::move(images));
}

Permutation encode_pi_doubleprime(const ZeroOneString& sigma, int N) {
  std::vector<int> images;
  const auto zeros = sigma.zero_positions();
  const auto ones = sigma.one_positions();
  images.insert(images.end(), zeros.rbegin(), zeros.rend());
  for (int k = N; k >= 1; --k) images.push_back(sigma.size() + k);
  images.insert(images.end(), ones.rbegin(), ones.rend());
  return Permutation(std::move(images));
}

std::vector<Permutation> encoded_permutations(const GrassmannProblem& prob) {
  prob.validate();
  std::vector<Permutation> perms;
  for (const auto& sigma : prob.sigmas) perms.push_back(encode_pi(sigma, prob.N));
  perms.push_back(encode_pi_prime(prob.mu, prob.N));
  perms.push_back(encode_pi_doubleprime(prob.nu, prob.N));
  return perms;
}

ProblemShapes shapes(const GrassmannProblem& prob) {
  prob.validate();
  const int rows = prob.n() - prob.l();
  ProblemShapes out;
  for (const auto& sigma : prob.sigmas) out.sigmas.push_back(shape_of_string(sigma).padded(rows));
  out.lower = shape_of_string(prob.mu).shifted(prob.N).padded(rows);
  out.big = shape_of_string(prob.nu).complement(rows, prob.l() + prob.N).padded(rows);
  return out;
}

bool quick_zero(const GrassmannProblem& prob) {
  const ProblemShapes sh = shapes(prob);
  return !sh.big.contains(sh.lower);
}

namespace {

SquareSet squares_of_boxes(const Board& board, int offset, const std::vector<Box>& boxes) {
  SquareSet out = 0;
  for (Box b : boxes) out |= board.bit(b.row, offset + b.col);
  return out;
}

// Splits `part` off the region with mask `region` unless it is trivial.
void split_off(GamePosition& pos, std::vector<Action>& log, SquareSet region, SquareSet part) {
  part &= region;
  if (part == 0 || part == region) return;
  const Split sp{pos.board().least(region), part};
  pos = apply_action(pos, sp);
  log.push_back(sp);
}

// Breaks a region into one-square regions, always splitting off a square
// with nothing of the region above-right of it.
void isolate(GamePosition& pos, std::vector<Action>& log, SquareSet region) {
  const Board& b = pos.board();
  for (int idx : b.closure_order()) {
    if (popcount(region) <= 1) break;
    const SquareSet self = SquareSet{1} << idx;
    if (!(region & self)) continue;
    split_off(pos, log, region, self);
    region &= ~self;
  }
}

}  // namespace

BuiltGame build_game(const GrassmannProblem& prob) {
  const auto perms = encoded_permutations(prob);
  const int n = prob.n() + prob.N;
  if (n > kMaxBoard) throw std::invalid_argument("n + N exceeds the largest supported board");
  const ProblemShapes sh = shapes(prob);
  const int rows = prob.n() - prob.l();
  const Board& b = Board::of(n);

  SquareSet rect = 0, upper = 0, lower = 0;
  for (int idx = 0; idx < b.size(); ++idx) {
    const Square s = b.square(idx);
    const SquareSet bit = SquareSet{1} << idx;
    if (s.j <= rows) upper |= bit;
    else if (s.i > rows) lower |= bit;
    else rect |= bit;
  }

  BuiltGame out{initial_position(perms, n), initial_position(perms, n), {}, 0, sh.big.contains(sh.lower)};
  GamePosition& pos = out.position;
  split_off(pos, out.setup, b.all(), rect);
  split_off(pos, out.setup, upper | lower, upper);
  isolate(pos, out.setup, upper);
  isolate(pos, out.setup, lower);

  const SquareSet big = squares_of_boxes(b, rows, boxes_of(sh.big));
  if (!out.lower_fits) {
    // T3 holds more tokens than squares; leave the rectangle whole.
    out.big_region = rect;
    return out;
  }
  split_off(pos, out.setup, rect, rect & ~big);
  isolate(pos, out.setup, rect & ~big);
  out.big_region = big;
  return out;
}

GrgaLayout initial_layout(const GrassmannProblem& prob, const BuiltGame& built) {
  const ProblemShapes sh = shapes(prob);
  GrgaLayout layout;
  layout.rows = prob.n() - prob.l();
  layout.offset = layout.rows;
  layout.mover = 1;
  layout.moving = sh.sigmas.front();
  layout.lower = sh.lower;
  layout.big = sh.big;
  layout.big_region = built.big_region;
  return layout;
}

namespace {

int token_number(const TokenState& t) { return t.current.i - t.destination.i; }

const TokenState* token_for(const ReadinessState& state, Square dest) {
  for (const TokenState& t : state.tokens)
    if (t.destination == dest) return &t;
  return nullptr;
}

}  // namespace

ReadinessTable readiness_numbers(const ReadinessState& state) {
  ReadinessTable table;
  for (const TokenState& t : state.tokens)
    if (!t.placed) table.tokens.push_back({t.current, token_number(t)});
  for (std::size_t k = 0; k < state.skew_squares.size(); ++k) {
    if (state.filled[k]) continue;
    const Square s = state.skew_squares[k];
    const TokenState* t = token_for(state, s);
    if (!t) throw std::logic_error("no token is destined for " + to_string(s));
    table.squares.push_back({s, t->current.i - s.i});
  }
  auto by_square = [](const ReadinessEntry& a, const ReadinessEntry& b) { return a.square < b.square; };
  std::sort(table.tokens.begin(), table.tokens.end(), by_square);
  std::sort(table.squares.begin(), table.squares.end(), by_square);
  return table;
}

bool readiness_properties_hold(const ReadinessState& state, std::string* why) {
  const ReadinessTable table = readiness_numbers(state);
  auto fail = [&](const std::string& what, Square a, Square b) {
    if (why) *why = what + " at " + to_string(a) + " and " + to_string(b);
    return false;
  };
  // Entries are sorted, so a comes before b in its row or column.
  for (const auto& a : table.tokens) {
    for (const auto& b : table.tokens) {
      if (!(a.square < b.square)) continue;
      if (a.square.i == b.square.i && a.number > b.number) return fail("token numbers decrease along a row", a.square, b.square);
      if (a.square.j == b.square.j && a.number < b.number) return fail("token numbers increase down a column", a.square, b.square);
    }
  }
  for (const auto& a : table.squares) {
    for (const auto& b : table.squares) {
      if (!(a.square < b.square)) continue;
      if (a.square.i == b.square.i && a.number < b.number) return fail("square numbers increase along a row", a.square, b.square);
      if (a.square.j == b.square.j && a.number > b.number) return fail("square numbers decrease down a column", a.square, b.square);
    }
  }
  return true;
}

namespace {

class GrgaRunner {
 public:
  GrgaRunner(const GamePosition& pos, const GrgaLayout& layout, const Picture& f)
      : layout_(layout), pos_(pos), region_id_(layout.big_region ? pos.board().least(layout.big_region) : Square{}) {
    const Board& b = pos.board();
    const SkewShape skew = layout.skew();
    if (!skew.valid()) throw GameError("lower shape " + layout.lower.to_string() + " does not fit in " + layout.big.to_string());
    if (!is_picture(layout.moving, skew, f)) throw GameError("not a picture from the moving shape onto the skew shape");
    if (layout.big_region && !pos.find_region(region_id_)) throw GameError("the big region is not a region of the position");
    if ((pos.tokens(layout.mover) & layout.big_region) != squares_of_boxes(b, layout.offset, boxes_of(layout.moving)))
      throw GameError("label " + std::to_string(layout.mover) + " tokens do not form the moving shape");
    for (Box box : skew.boxes()) {
      state_.skew_squares.push_back(layout.square(box));
      state_.filled.push_back(false);
    }
    for (std::size_t k = 0; k < f.domain.size(); ++k) {
      const Square origin = layout.square(f.domain[k]);
      state_.tokens.push_back({f.domain[k], origin, layout.square(f.image[k]), false});
    }
    sort_tokens();
  }

  GrgaRun run() {
    GrgaRun out{{}, {}, pos_, 0, 0};
    record(out, "initial position");
    while (std::any_of(state_.tokens.begin(), state_.tokens.end(), [](const TokenState& t) { return !t.placed; })) {
      check_state();
      if (!any_ready()) {
        if (++passes_ > layout_.rows) throw std::logic_error("Step 1 repeated more often than there are rows");
        step_one(out);
        ++out.step1_passes;
        record(out, "step 1: shift unplaced tokens up");
        continue;
      }
      check_ready_counts();
      const std::size_t target = pick_square();
      const Move mv = step_three(target);
      out.moves.push_back(mv);
      ++out.step3_moves;
      record(out, "step 3: move (" + std::to_string(mv.i) + "," + std::to_string(mv.j) + ") fills " +
                      to_string(state_.skew_squares[target]));
    }
    out.final_position = pos_;
    return out;
  }

 private:
  void record(GrgaRun& out, std::string caption) { out.panels.push_back({std::move(caption), pos_, state_}); }

  void sort_tokens() {
    std::sort(state_.tokens.begin(), state_.tokens.end(),
              [](const TokenState& a, const TokenState& b) { return a.current < b.current; });
  }

  bool is_ready(const TokenState& t) const { return !t.placed && token_number(t) == 0; }
  bool any_ready() const {
    return std::any_of(state_.tokens.begin(), state_.tokens.end(), [&](const TokenState& t) { return is_ready(t); });
  }

  TokenState* token_at(Square s) {
    for (TokenState& t : state_.tokens)
      if (t.current == s) return &t;
    return nullptr;
  }

  void check_state() const {
    std::string why;
    if (!readiness_properties_hold(state_, &why)) throw std::logic_error("readiness property violated: " + why);
    for (const TokenState& t : state_.tokens) {
      if (t.placed) continue;
      if (token_number(t) < 0) throw std::logic_error("negative readiness number at " + to_string(t.current));
      for (std::size_t k = 0; k < state_.skew_squares.size(); ++k) {
        const Square s = state_.skew_squares[k];
        if (!state_.filled[k] && s.i == t.current.i && s.j <= t.current.j)
          throw GrgaFailure("token at " + to_string(t.current) + " is not left of the empty square " + to_string(s) +
                                "; N is too small",
                            t.current, s);
      }
    }
  }

  void check_ready_counts() const {
    std::map<int, int> balance;
    for (const TokenState& t : state_.tokens)
      if (is_ready(t)) ++balance[t.current.i];
    const ReadinessTable table = readiness_numbers(state_);
    for (const auto& e : table.squares)
      if (e.ready()) --balance[e.square.i];
    for (const auto& [row, d] : balance)
      if (d != 0) throw std::logic_error("row " + std::to_string(row) + " has unequal numbers of ready tokens and squares");
  }

  void step_one(GrgaRun& out) {
    std::map<Box, Square> before;
    for (const TokenState& t : state_.tokens)
      if (!t.placed) before[t.origin] = t.current;
    for (int i = 1; i < layout_.rows; ++i) {
      const Move mv{region_id_, layout_.mover, i, i + 1};
      apply(mv, /*step_three=*/false);
      out.moves.push_back(mv);
    }
    for (const TokenState& t : state_.tokens) {
      if (t.placed) continue;
      const Square from = before.at(t.origin), above{from.i - 1, from.j};
      if (t.current != above)
        throw GrgaFailure("token at " + to_string(from) + " could not move up; N is too small", from, above);
    }
  }

  // Rightmost column first; in each column the topmost unfilled square.
  std::size_t pick_square() const {
    const ReadinessTable table = readiness_numbers(state_);
    std::map<int, Square, std::greater<>> top;
    for (const auto& e : table.squares) top.try_emplace(e.square.j, e.square);
    for (const auto& [col, s] : top) {
      auto it = std::find_if(table.squares.begin(), table.squares.end(), [&](const auto& e) { return e.square == s; });
      if (it->ready()) return std::find(state_.skew_squares.begin(), state_.skew_squares.end(), s) - state_.skew_squares.begin();
    }
    throw std::logic_error("a token is ready but no square is");
  }

  Move step_three(std::size_t target) {
    const Square s = state_.skew_squares[target];
    const TokenState* chosen = nullptr;
    for (const TokenState& t : state_.tokens)
      if (is_ready(t) && t.current.i == s.i && (!chosen || t.current.j < chosen->current.j)) chosen = &t;
    if (!chosen) throw std::logic_error("no ready token in the row of " + to_string(s));
    if (chosen->current.j >= s.j)
      throw GrgaFailure("ready token at " + to_string(chosen->current) + " is not left of " + to_string(s) +
                            "; N is too small",
                        chosen->current, s);
    const Move mv{region_id_, layout_.mover, chosen->current.j, s.j};
    apply(mv, /*step_three=*/true);
    return mv;
  }

  void apply(const Move& mv, bool step_three) {
    const auto transfers = move_transfers(pos_, mv);
    std::vector<std::pair<TokenState*, Square>> updates;
    for (const auto& [from, to] : transfers) {
      TokenState* t = token_at(from);
      if (!t) throw std::logic_error("untracked token at " + to_string(from));
      if (t->placed) throw GrgaFailure("move displaces the placed token at " + to_string(from), from, to);
      if (step_three && (!is_ready(*t) || t->destination != to))
        throw GrgaFailure("move sends the token at " + to_string(from) + " to " + to_string(to) +
                              " instead of its destination " + to_string(t->destination),
                          from, to);
      updates.emplace_back(t, to);
    }
    for (auto& [t, to] : updates) {
      t->current = to;
      if (step_three) {
        t->placed = true;
        const auto at = std::find(state_.skew_squares.begin(), state_.skew_squares.end(), to);
        state_.filled[at - state_.skew_squares.begin()] = true;
      }
    }
    pos_ = apply_move(pos_, mv);
    sort_tokens();
  }

  const GrgaLayout& layout_;
  GamePosition pos_;
  Square region_id_;
  ReadinessState state_;
  int passes_ = 0;
};

}  // namespace

GrgaRun grga(const GamePosition& pos, const GrgaLayout& layout, const Picture& f) {
  return GrgaRunner(pos, layout, f).run();
}

GrgaRun grga(const GrassmannProblem& prob, const BuiltGame& built, const Picture& f) {
  return grga(built.position, initial_layout(prob, built), f);
}

std::string render_panel(const GrgaLayout& layout, const GrgaPanel& panel, int width) {
  const ReadinessTable table = readiness_numbers(panel.state);
  const Board& b = panel.position.board();
  std::ostringstream out;
  out << panel.caption << '\n';
  for (int a = 1; a <= layout.rows; ++a) {
    for (int c = 1; c <= width; ++c) {
      const Square s = layout.square({a, c});
      std::string cell = " x ";
      if (b.contains(s) && (layout.big_region & b.bit(s))) {
        cell = " . ";
        for (const auto& e : table.squares)
          if (e.square == s) cell = "[" + std::to_string(e.number) + "]";
        for (const TokenState& t : panel.state.tokens)
          if (t.current == s) cell = t.placed ? " # " : " " + std::to_string(token_number(t)) + " ";
      }
      out << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_string(GrassmannOutcome outcome) {
  switch (outcome) {
    case GrassmannOutcome::Won: return "won";
    case GrassmannOutcome::Zero: return "zero";
    case GrassmannOutcome::Failed: return "failed";
  }
  return "?";
}

std::optional<std::vector<Action>> GrassmannWin::sequence() const {
  if (outcome != GrassmannOutcome::Won) return std::nullopt;
  return trace;
}

namespace {

// Lexicographically least sigma' with [Y_sigma_t][Y_sigma'][Y_nu] > 0 among
// the positive terms of the product of the classes still to be placed.
std::optional<ZeroOneString> choose_intermediate(const GrassmannProblem& prob, int t, const ZeroOneString& nu) {
  const int rows = prob.n() - prob.l(), cols = prob.l();
  std::vector<Partition> rest;
  for (int k = t; k < prob.s(); ++k) rest.push_back(shape_of_string(prob.sigmas[k]));
  rest.push_back(shape_of_string(prob.mu));
  std::optional<ZeroOneString> best;
  const SchurExpansion product = schur_product_expand(rest, std::make_pair(rows, cols));
  for (const auto& [shape, c] : product.terms()) {
    if (c == 0) continue;
    const ZeroOneString candidate = ZeroOneString::from_shape(shape, rows, cols);
    if (best && !(candidate < *best)) continue;
    if (grassmann_intersection(GrassmannProblem{{prob.sigmas[t - 1]}, candidate, nu, prob.N}) > 0) best = candidate;
  }
  return best;
}

}  // namespace

GrassmannWin win_grassmannian(const GrassmannProblem& prob) {
  prob.validate();
  GrassmannWin out;
  out.number = grassmann_intersection(prob);
  if (quick_zero(prob) || out.number == 0) {
    out.outcome = GrassmannOutcome::Zero;
    return out;
  }
  out.game = build_game(prob);
  out.trace = out.game->setup;

  const int s = prob.s(), rows = prob.n() - prob.l(), last = s + 2;
  const Board& b = Board::of(prob.n() + prob.N);
  GamePosition pos = out.game->position;
  GrgaLayout layout = initial_layout(prob, *out.game);
  ZeroOneString nu = prob.nu;
  try {
    for (int t = 1; t <= s; ++t) {
      ZeroOneString inner = prob.mu;
      if (t < s) {
        const auto chosen = choose_intermediate(prob, t, nu);
        if (!chosen) throw std::logic_error("no intermediate class with a positive triple number");
        inner = *chosen;
      }
      layout.mover = t;
      layout.moving = shape_of_string(prob.sigmas[t - 1]).padded(rows);
      layout.lower = shape_of_string(inner).shifted(prob.N).padded(rows);
      layout.big = shape_of_string(nu).complement(rows, prob.l() + prob.N).padded(rows);
      const auto f = first_picture(layout.moving, layout.skew());
      if (!f) throw std::logic_error("no picture although the triple number is positive");

      GrgaRun run = grga(pos, layout, *f);
      for (const Move& mv : run.moves) out.trace.push_back(mv);
      pos = run.final_position;
      out.layouts.push_back(layout);
      out.stages.push_back(std::move(run));
      if (t == s) break;

      // Sequester the placed tokens and hand them to the last label.
      const SquareSet placed = squares_of_boxes(b, layout.offset, layout.skew().boxes());
      std::vector<Action> steps;
      split_off(pos, steps, layout.big_region, placed);
      isolate(pos, steps, placed);
      const Relabel rl{placed, t, last};
      pos = apply_relabel(pos, rl);
      steps.push_back(rl);
      out.trace.insert(out.trace.end(), steps.begin(), steps.end());
      layout.big_region &= ~placed;
      nu = inner.reversed();
    }
  } catch (const GameError& e) {
    out.outcome = GrassmannOutcome::Failed;
    out.message = e.what();
    return out;
  } catch (const std::logic_error& e) {
    // The run's invariants are only guaranteed for N >= l.
    if (prob.N >= prob.l()) throw;
    out.outcome = GrassmannOutcome::Failed;
    out.message = e.what();
    return out;
  }
  if (!is_won(pos, WinMode::Exact)) throw std::logic_error("the algorithm finished without winning");
  out.outcome = GrassmannOutcome::Won;
  return out;
}

}  // namespace rootgame
