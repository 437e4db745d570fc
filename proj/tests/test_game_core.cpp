#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <iostream>
#include <set>

#include "rootgame/position.hpp"
#include "rootgame/position_io.hpp"
#include "test_support.hpp"

using namespace rootgame;
using testing_support::load_golden;
using testing_support::random_permutation;

namespace {

GamePosition small_initial() {
  const std::vector<Permutation> perms = {Permutation::parse("3426175"), Permutation::parse("5162347"),
                                          Permutation::parse("1326754")};
  return initial_position(perms, 7);
}

GamePosition random_position(int n, int m, std::mt19937& rng) {
  std::vector<Permutation> perms;
  for (int k = 0; k < m; ++k) perms.push_back(random_permutation(n, rng));
  return initial_position(perms, n);
}

// Plays random legal moves and qualifying splits.
GamePosition scramble(GamePosition pos, int steps, std::mt19937& rng) {
  for (int t = 0; t < steps; ++t) {
    auto moves = legal_moves(pos);
    if (moves.empty()) break;
    pos = apply_move(pos, moves[rng() % moves.size()]);
    if (rng() % 3 == 0) {
      const SquareSet r = pos.regions()[rng() % pos.regions().size()];
      auto traces = ideal_traces(pos, pos.board().least(r));
      if (!traces.empty()) pos = split(pos, pos.board().least(r), traces[rng() % traces.size()]);
    }
  }
  return pos;
}

}  // namespace

TEST(Permutation, ParseAndLength) {
  const Permutation p = Permutation::parse("3426175");
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p.length(), 8);
  EXPECT_EQ(Permutation::parse("2,4,6,1,3,5,7,8,9,10").to_string(), "2,4,6,1,3,5,7,8,9,10");
  EXPECT_EQ(Permutation::parse("4,3,1,10,9,8,7,6,5,2").to_display(), "431(10)987652");
  EXPECT_EQ(Permutation::parse("3426175").to_display(), "3426175");
  EXPECT_THROW(Permutation::parse("12345678910"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1224"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse(""), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1,x"), std::invalid_argument);
}

TEST(Permutation, CodeRoundTrip) {
  for (const Permutation& p : testing_support::all_permutations(5)) {
    const auto code = p.code();
    EXPECT_EQ(Permutation::from_code(code).extended(5), p.extended(std::max(5, p.size())));
    int sum = 0;
    for (int c : code) sum += c;
    EXPECT_EQ(sum, p.length());
  }
  EXPECT_EQ(Permutation::parse("321").times_longest_left(), Permutation::parse("123"));
  EXPECT_EQ(Permutation::parse("213").times_longest_left(), Permutation::parse("231"));
  EXPECT_EQ(Permutation::parse("2134").trimmed(), Permutation::parse("21"));
}

TEST(InitialPosition, SpecExamples) {
  const std::vector<Permutation> id = {Permutation::identity(3)};
  EXPECT_EQ(initial_position(id, 3).token_count(), 0);

  const std::vector<Permutation> w0 = {Permutation::parse("321")};
  const GamePosition pos = initial_position(w0, 3);
  for (Square s : pos.board().squares_of(pos.board().all())) EXPECT_EQ(pos.labels_at(s), std::vector<int>{1});
  EXPECT_EQ(pos.regions().size(), 1u);

  const std::vector<Permutation> mismatched = {Permutation::parse("21"), Permutation::parse("321")};
  EXPECT_THROW(initial_position(mismatched, 3), GameError);
  EXPECT_THROW(initial_position({}, 3), GameError);
}

TEST(InitialPosition, TokenCountIsLength) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation p = random_permutation(6, rng);
    const std::vector<Permutation> one = {p};
    EXPECT_EQ(initial_position(one, 6).token_count(), p.length());
  }
}

TEST(InitialPosition, SmallExampleGolden) {
  EXPECT_EQ(to_json(small_initial()), load_golden("small_initial.json"));
}

TEST(Ideal, SpecExamples) {
  const Board& b = Board::of(3);
  EXPECT_TRUE(is_ideal(0, 3));
  EXPECT_TRUE(is_ideal(b.all(), 3));
  EXPECT_FALSE(is_ideal(b.bit(1, 2), 3));
  EXPECT_TRUE(is_ideal(b.bit(1, 3), 3));
}

TEST(Ideal, ClosedUnderIntersectionAndUnion) {
  for (int n = 2; n <= 5; ++n) {
    const Board& b = Board::of(n);
    std::vector<SquareSet> ideals;
    for (SquareSet a = 0; a <= b.all(); ++a)
      if (is_ideal(a, n)) ideals.push_back(a);
    for (SquareSet a : ideals) {
      for (SquareSet c : ideals) {
        EXPECT_TRUE(is_ideal(a & c, n));
        EXPECT_TRUE(is_ideal(a | c, n));
      }
    }
  }
}

TEST(Ideal, TraceEnumerationMatchesBruteForce) {
  std::mt19937 rng(11);
  for (int n = 3; n <= 5; ++n) {
    const Board& b = Board::of(n);
    for (int trial = 0; trial < 20; ++trial) {
      const SquareSet region = (rng() & b.all()) | b.bit(1, n);
      std::set<SquareSet> expected;
      for (SquareSet a = 0; a <= b.all(); ++a)
        if (is_ideal(a, n)) expected.insert(a & region);
      std::set<SquareSet> got;
      for_each_trace(b, region, [&](SquareSet a) {
        EXPECT_TRUE(got.insert(a).second) << "duplicate trace";
        return true;
      });
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Splitting, SpecExamples) {
  const std::vector<Permutation> id = {Permutation::identity(4)};
  const GamePosition empty = initial_position(id, 4);
  EXPECT_TRUE(splittable_subsets(empty, {1, 2}).empty());
  EXPECT_THROW(splittable_subsets(empty, {2, 3}), GameError);

  // Every square holds exactly one token: all proper nonempty traces qualify.
  const std::vector<Permutation> dual = {Permutation::parse("4321"), Permutation::identity(4)};
  const GamePosition solved = initial_position(dual, 4);
  EXPECT_EQ(splittable_subsets(solved, {1, 2}), ideal_traces(solved, {1, 2}));

  const GamePosition start = small_initial();
  const auto summary = load_golden("small_summary.json");
  const auto candidates = splittable_subsets(start, {1, 2});
  EXPECT_EQ(static_cast<int>(candidates.size()), summary["splittable_count"].get<int>());
  const SquareSet part = squares_from_json(start.board(), summary["split_part"]);
  EXPECT_NE(std::find(candidates.begin(), candidates.end(), part), candidates.end());
}

TEST(Splitting, SplitBehaviour) {
  const GamePosition start = small_initial();
  const Board& b = start.board();
  const SquareSet corner = b.bit(1, 7);
  const GamePosition once = split(start, {1, 2}, corner);
  EXPECT_EQ(once.regions().size(), 2u);
  EXPECT_EQ(once.label_masks(), start.label_masks());
  const SquareSet bigger = b.ideal_closure(b.bit(2, 6));
  const GamePosition twice = split(once, {1, 2}, bigger & ~corner);
  EXPECT_EQ(twice.regions().size(), 3u);

  EXPECT_THROW(split(start, {1, 2}, 0), GameError);
  EXPECT_THROW(split(start, {1, 2}, b.all()), GameError);
  EXPECT_THROW(split(start, {1, 2}, b.bit(2, 3)), GameError);
  EXPECT_THROW(split(start, {1, 3}, corner), GameError);
}

TEST(Splitting, SmallExampleSplitAndMoveGolden) {
  const GamePosition start = small_initial();
  const auto summary = load_golden("small_summary.json");
  const SquareSet part = squares_from_json(start.board(), summary["split_part"]);
  const GamePosition after_split = split(start, {1, 2}, part);
  EXPECT_EQ(to_json(after_split), load_golden("small_split.json"));

  const Square unshaded{summary["unshaded_region_id"][0].get<int>(), summary["unshaded_region_id"][1].get<int>()};
  const Move mv{unshaded, 1, 3, 4};
  const auto listed = legal_moves(after_split);
  EXPECT_NE(std::find(listed.begin(), listed.end(), mv), listed.end());
  EXPECT_EQ(to_json(apply_move(after_split, mv)), load_golden("small_after_move.json"));
}

TEST(Splitting, MaximalSplitExamples) {
  const std::vector<Permutation> id = {Permutation::identity(5)};
  const GamePosition empty = initial_position(id, 5);
  EXPECT_EQ(split_maximally(empty), empty);

  for (int n = 2; n <= 4; ++n) {
    const std::vector<Permutation> dual = {Permutation::longest(n), Permutation::identity(n)};
    const GamePosition solved = split_maximally(initial_position(dual, n));
    EXPECT_EQ(static_cast<int>(solved.regions().size()), solved.board().size());
  }
}

// Every order of qualifying splits ends at the same partition, as long as no
// region holds more tokens than squares on some ideal trace. Dead positions
// (positive excess) can split in incompatible ways; one is pinned below.
TEST(Splitting, MaximalSplitConfluence) {
  std::mt19937 rng(3);
  int live_checked = 0;
  int dead_divergent = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 2;
    GamePosition pos = random_position(n, 2 + trial % 2, rng);
    if (trial % 4 != 0) pos = scramble(pos, 1 + trial % 4, rng);
    std::set<std::vector<SquareSet>> finals;
    std::set<std::vector<SquareSet>> visited;
    std::function<void(const GamePosition&)> explore = [&](const GamePosition& p) {
      if (!visited.insert(p.regions()).second) return;
      bool any = false;
      for (Square id : p.region_ids()) {
        for (SquareSet a : splittable_subsets(p, id)) {
          any = true;
          explore(split(p, id, a));
        }
      }
      if (!any) finals.insert(p.regions());
    };
    explore(pos);
    bool live = true;
    for (SquareSet r : pos.regions()) live = live && max_excess(pos, r) <= 0;
    if (live) {
      ++live_checked;
      ASSERT_EQ(finals.size(), 1u) << render_ascii(pos);
      EXPECT_EQ(*finals.begin(), split_maximally(pos).regions());
    } else if (finals.size() > 1) {
      ++dead_divergent;
    }
  }
  EXPECT_GT(live_checked, 20);

  // n = 3 with both tokens on S13: {S12,S13} and {S13,S23} are both tight,
  // and cutting along either one leaves the other unavailable.
  const Board& b = Board::of(3);
  const GamePosition dead(3, {b.bit(1, 3), b.bit(1, 3)}, {b.all()});
  EXPECT_GT(max_excess(dead, b.all()), 0);
  const auto tight = splittable_subsets(dead, {1, 2});
  ASSERT_EQ(tight.size(), 2u);
  EXPECT_NE(split_maximally(split(dead, {1, 2}, tight[0])).regions(),
            split_maximally(split(dead, {1, 2}, tight[1])).regions());
  EXPECT_GT(dead_divergent, 0);
}

TEST(Moves, SpecExamples) {
  const GamePosition start = small_initial();
  const std::vector<Permutation> id = {Permutation::identity(7), Permutation::parse("2134567")};
  const GamePosition sparse = initial_position(id, 7);
  EXPECT_EQ(apply_move(sparse, {{1, 2}, 1, 2, 5}), sparse);

  EXPECT_THROW(apply_move(start, {{1, 2}, 4, 1, 2}), GameError);
  EXPECT_THROW(apply_move(start, {{1, 2}, 1, 2, 2}), GameError);
  EXPECT_THROW(apply_move(start, {{2, 3}, 1, 1, 2}), GameError);

  const std::vector<Permutation> two = {Permutation::parse("21")};
  EXPECT_TRUE(legal_moves(initial_position(two, 2)).empty());
  EXPECT_TRUE(legal_moves(sparse).size() < 100);
}

TEST(Moves, ConservationAndPotential) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const GamePosition pos = scramble(random_position(n, 3, rng), 3, rng);
    for (const Move& mv : legal_moves(pos)) {
      const GamePosition next = apply_move(pos, mv);
      for (int k = 1; k <= pos.m(); ++k) EXPECT_EQ(popcount(next.tokens(k)), popcount(pos.tokens(k)));
      EXPECT_GT(potential(next), potential(pos));
      EXPECT_LE(potential(next), potential_bound(n, 3));
      EXPECT_EQ(next.regions(), pos.regions());
      EXPECT_EQ(static_cast<int>(move_transfers(pos, mv).size()),
                [&] {
                  int moved = 0;
                  for (int k = 1; k <= pos.m(); ++k) moved += popcount(next.tokens(k) & ~pos.tokens(k));
                  return moved;
                }());
    }
  }
}

TEST(Winning, SpecExamples) {
  const std::vector<Permutation> dual = {Permutation::parse("21"), Permutation::parse("12")};
  EXPECT_TRUE(is_won(initial_position(dual, 2), WinMode::Exact));
  const std::vector<Permutation> twice = {Permutation::parse("21"), Permutation::parse("21")};
  EXPECT_FALSE(is_won(initial_position(twice, 2), WinMode::Exact));
  EXPECT_FALSE(is_won(initial_position(twice, 2), WinMode::AtMostOne));
  const GamePosition empty(4, 2);
  EXPECT_TRUE(is_won(empty, WinMode::AtMostOne));
  EXPECT_FALSE(is_won(empty, WinMode::Exact));
  EXPECT_EQ(parse_win_mode("atmost"), WinMode::AtMostOne);
  EXPECT_THROW(parse_win_mode("sometimes"), std::invalid_argument);
}

TEST(Symmetry, RelabelingCommutes) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<Permutation> perms;
    for (int k = 0; k < 3; ++k) perms.push_back(random_permutation(n, rng));
    std::vector<int> sigma = {1, 2, 3};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Permutation> permuted(3);
    for (int k = 0; k < 3; ++k) permuted[sigma[k] - 1] = perms[k];

    const GamePosition pos = initial_position(perms, n);
    const GamePosition relabeled = relabel_all(pos, sigma);
    EXPECT_EQ(relabeled, initial_position(permuted, n));
    for (const Move& mv : legal_moves(pos)) {
      const Move image{mv.region, sigma[mv.label - 1], mv.i, mv.j};
      EXPECT_EQ(relabel_all(apply_move(pos, mv), sigma), apply_move(relabeled, image));
    }
    EXPECT_EQ(is_won(pos, WinMode::Exact), is_won(relabeled, WinMode::Exact));
  }
}

TEST(Serialization, JsonRoundTrip) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const GamePosition pos = scramble(random_position(5, 3, rng), 5, rng);
    EXPECT_EQ(position_from_json(to_json(pos)), pos);
    std::vector<Action> actions;
    for (const Move& mv : legal_moves(pos)) actions.emplace_back(mv);
    actions.emplace_back(Split{{1, 2}, pos.board().bit(1, 5)});
    actions.emplace_back(Relabel{pos.board().bit(2, 3), 1, 2});
    EXPECT_EQ(actions_from_json(to_json(std::span<const Action>(actions), 5), 5), actions);
  }
  EXPECT_THROW(position_from_json(nlohmann::json::parse(R"({"n":3,"m":1,"tokens":[{"i":2,"j":1,"labels":[1]}]})")),
               GameError);
}

TEST(Rendering, DrawsRegionsAndLabels) {
  const GamePosition start = small_initial();
  const auto summary = load_golden("small_summary.json");
  const GamePosition pos = split(start, {1, 2}, squares_from_json(start.board(), summary["split_part"]));
  const std::string text = render_ascii(pos);
  int empty_squares = 0;
  for (Square s : pos.board().squares_of(pos.board().all())) empty_squares += pos.occupancy(s) == 0;
  EXPECT_EQ(std::count(text.begin(), text.end(), '.'), empty_squares);
  EXPECT_NE(text.find('|'), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 14);
}

TEST(Replay, ReportsFailingIndex) {
  const GamePosition start = small_initial();
  const std::vector<Action> actions = {Move{{1, 2}, 1, 1, 2}, Move{{1, 2}, 9, 1, 2}};
  try {
    replay(start, actions);
    FAIL() << "expected GameError";
  } catch (const GameError& e) {
    EXPECT_NE(std::string(e.what()).find("action 1"), std::string::npos);
  }
}
