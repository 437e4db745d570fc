#include "rootgame/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "rootgame/flag_oracle.hpp"
#include "rootgame/geometry.hpp"
#include "rootgame/grassmann.hpp"
#include "rootgame/pictures_lr.hpp"

namespace rootgame {

namespace {

// Collects pass/fail plus a few example failures.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  bool pass() const { return failed_ == 0; }
  std::string summary(const std::string& noun) const {
    std::string s = std::to_string(checked_) + " " + noun + ", " + std::to_string(failed_) + " failed";
    for (const auto& e : examples_) s += "; e.g. " + e;
    return s;
  }

 private:
  long checked_ = 0;
  long failed_ = 0;
  std::vector<std::string> examples_;
};

void log_line(const SweepOptions& o, const std::string& text) {
  if (o.log) *o.log << text << '\n';
}

SolveOptions solve_options(const SweepOptions& o, WinMode mode) {
  SolveOptions s;
  s.mode = mode;
  s.budget = o.budget;
  s.threads = o.threads;
  return s;
}

std::string describe(const GrassmannProblem& p) {
  std::string s;
  for (const auto& x : p.sigmas) s += x.str() + " ";
  return s + "| " + p.mu.str() + " " + p.nu.str() + " N=" + std::to_string(p.N);
}

std::string describe(const std::vector<Permutation>& perms) {
  std::string s;
  for (const auto& p : perms) s += (s.empty() ? "" : " ") + p.to_string();
  return s;
}

int total_length(const std::vector<Permutation>& perms) {
  int t = 0;
  for (const auto& p : perms) t += p.length();
  return t;
}

// Every tuple of `count` words, in lexicographic order of indices.
void for_each_tuple(const std::vector<ZeroOneString>& words, int count,
                    const std::function<void(const std::vector<ZeroOneString>&)>& visit) {
  std::vector<std::size_t> idx(count, 0);
  std::vector<ZeroOneString> tuple(count, words.front());
  while (true) {
    for (int k = 0; k < count; ++k) tuple[k] = words[idx[k]];
    visit(tuple);
    int k = count - 1;
    while (k >= 0 && ++idx[k] == words.size()) idx[k--] = 0;
    if (k < 0) return;
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Verdict solve_perms(const std::vector<Permutation>& perms, int n, const SolveOptions& o) {
  return solve(initial_position(perms, n), o);
}

CriterionResult encoding_golden(const SweepOptions&) {
  const std::string got[] = {encode_pi(ZeroOneString("1010101"), 3).to_display(),
                             encode_pi_prime(ZeroOneString("1001011"), 3).to_display(),
                             encode_pi_doubleprime(ZeroOneString("0100111"), 3).to_display()};
  const std::string want[] = {"246135789(10)", "568123479(10)", "431(10)987652"};
  Tally t;
  for (int k = 0; k < 3; ++k) t.check(got[k] == want[k], got[k] + " != " + want[k]);
  return {1, "Encoding golden test", t.pass(), got[0] + " " + got[1] + " " + got[2]};
}

CriterionResult picture_lr(const SweepOptions&) {
  Tally t;
  const auto shapes = partitions_in_box(4, 4);
  long positive = 0;
  for (const Partition& nu : shapes) {
    if (nu.size() > 8) continue;
    for (const Partition& mu : shapes) {
      if (!nu.contains(mu)) continue;
      const SkewShape skew(nu.padded(4), mu.padded(4));
      for (const Partition& lambda : shapes) {
        if (lambda.size() + mu.size() != nu.size()) continue;
        const auto pictures = count_pictures(lambda.padded(4), skew);
        const auto lr = lr_coefficient(lambda, mu, nu);
        if (lr > 0) ++positive;
        t.check(pictures == lr, lambda.to_string() + " " + mu.to_string() + " " + nu.to_string());
      }
    }
  }
  return {2, "Picture-LR equivalence", t.pass(), t.summary("triples") + ", " + std::to_string(positive) + " positive"};
}

struct GrassmannSweep {
  long instances = 0;
  long positive = 0;
  std::vector<GrassmannProblem> winners;
};

CriterionResult grassmann_positivity(const SweepOptions& o) {
  Tally grga, solver;
  long instances = 0, positive = 0;
  for (int n = 4; n <= 6; ++n) {
    for (int l = 1; l <= 3 && l < n; ++l) {
      const auto words = ZeroOneString::all(n - l, l);
      for_each_tuple(words, 3, [&](const std::vector<ZeroOneString>& w) {
        const GrassmannProblem prob{{w[0]}, w[1], w[2], l};
        ++instances;
        const bool pos = grassmann_intersection(prob) > 0;
        positive += pos;
        const GrassmannWin win = win_grassmannian(prob);
        grga.check(win.outcome == (pos ? GrassmannOutcome::Won : GrassmannOutcome::Zero),
                   describe(prob) + " grga " + to_string(win.outcome));
        const Verdict v = solve_perms(encoded_permutations(prob), n + l, solve_options(o, WinMode::Exact));
        solver.check(v.decided() && v.winnable() == pos, describe(prob) + " solver " + to_string(v.outcome));
      });
    }
  }
  return {3, "Grassmannian win <=> positivity", grga.pass() && solver.pass(),
          std::to_string(instances) + " instances, " + std::to_string(positive) + " positive; GRGA: " +
              grga.summary("checks") + "; solver: " + solver.summary("checks")};
}

CriterionResult grga_structure(const SweepOptions&) {
  Tally t;
  long runs = 0, states = 0;
  for (int n = 4; n <= 6; ++n) {
    for (int l = 1; l <= 3 && l < n; ++l) {
      const auto words = ZeroOneString::all(n - l, l);
      for_each_tuple(words, 3, [&](const std::vector<ZeroOneString>& w) {
        const GrassmannProblem prob{{w[0]}, w[1], w[2], l};
        if (grassmann_intersection(prob) == 0) return;
        ++runs;
        const GrassmannWin win = win_grassmannian(prob);
        const std::string id = describe(prob);
        if (win.outcome != GrassmannOutcome::Won) {
          t.check(false, id + " not won");
          return;
        }
        const auto& setup = win.game->setup;
        bool labels_ok = true;
        for (std::size_t k = setup.size(); k < win.trace.size(); ++k) {
          const auto* mv = std::get_if<Move>(&win.trace[k]);
          labels_ok = labels_ok && mv && mv->label == 1;
        }
        t.check(labels_ok, id + " emitted a split or a move of another label");
        for (const auto& panel : win.stages.front().panels) {
          ++states;
          std::string why;
          t.check(readiness_properties_hold(panel.state, &why), id + " " + why);
        }
        t.check(verify_certificate(win.game->initial, *win.sequence()), id + " final position not won");
      });
    }
  }
  return {4, "GRGA structural checks", t.pass(),
          std::to_string(runs) + " runs, " + std::to_string(states) + " states; " + t.summary("checks")};
}

struct Table {
  long counts[3][2] = {};  // [won, lost, unknown][number > 0]
  void add(const Verdict& v, bool positive) {
    const int row = v.outcome == SolveOutcome::Winnable ? 0 : v.outcome == SolveOutcome::NotWinnable ? 1 : 2;
    ++counts[row][positive];
  }
  std::string str(const std::string& name) const {
    std::ostringstream s;
    s << name << ": winnable&positive " << counts[0][1] << ", winnable&zero " << counts[0][0]
      << ", unwinnable&positive " << counts[1][1] << ", unwinnable&zero " << counts[1][0] << ", unknown "
      << counts[2][0] + counts[2][1];
    return s.str();
  }
};

CriterionResult soundness(const SweepOptions& o) {
  const SolveOptions so = solve_options(o, WinMode::Exact);
  std::mt19937 rng(20240517);
  Tally sound;
  long unknown = 0;
  for (const auto& [n, samples] : std::vector<std::pair<int, int>>{{4, 1000}, {5, 300}}) {
    const auto perms = all_permutations(n);
    int taken = 0;
    while (taken < samples) {
      std::vector<Permutation> t = {perms[rng() % perms.size()], perms[rng() % perms.size()], perms[rng() % perms.size()]};
      if (total_length(t) != n * (n - 1) / 2) continue;
      ++taken;
      const Verdict v = solve_perms(t, n, so);
      if (!v.decided()) ++unknown;
      if (v.winnable()) sound.check(flag_intersection(t, n) >= 1, describe(t));
    }
  }

  // Converse, exhaustively in S4.
  Table s4;
  const auto p4 = all_permutations(4);
  for (const auto& a : p4)
    for (const auto& b : p4)
      for (const auto& c : p4) {
        const std::vector<Permutation> t = {a, b, c};
        if (total_length(t) != 6) continue;
        const Verdict v = solve_perms(t, 4, so);
        s4.add(v, flag_intersection(t, 4) > 0);
      }
  // Reported only.
  Table s5;
  const auto p5 = all_permutations(5);
  int taken = 0;
  while (taken < 10000) {
    std::vector<Permutation> t = {p5[rng() % 120], p5[rng() % 120], p5[rng() % 120]};
    if (total_length(t) != 10) continue;
    ++taken;
    s5.add(solve_perms(t, 5, so), flag_intersection(t, 5) > 0);
  }
  log_line(o, s4.str("S4 exhaustive"));
  log_line(o, s5.str("S5 sample of 10000"));
  const bool converse = s4.counts[1][1] == 0 && s4.counts[0][0] == 0 && s4.counts[2][0] + s4.counts[2][1] == 0;
  return {5, "Soundness of the game", sound.pass() && converse && unknown == 0,
          sound.summary("winnable samples") + ", " + std::to_string(unknown) + " unknown; " + s4.str("S4 exhaustive") +
              "; " + s5.str("S5 sample")};
}

CriterionResult encoded_consistency(const SweepOptions&) {
  Tally t;
  long nonzero = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int l = 0; l <= 2 && l <= n; ++l) {
      std::vector<int> ns = {0};
      if (l > 0) ns.push_back(l);
      const auto words = ZeroOneString::all(n - l, l);
      for (int N : ns) {
        for_each_tuple(words, 3, [&](const std::vector<ZeroOneString>& w) {
          const GrassmannProblem prob{{w[0]}, w[1], w[2], N};
          const auto g = grassmann_intersection(prob);
          const auto f = flag_intersection(encoded_permutations(prob), n + N);
          nonzero += g > 0;
          t.check(f == g, describe(prob) + ": flag " + std::to_string(f) + " vs " + std::to_string(g));
        });
      }
    }
  }
  return {6, "Flag and Grassmannian numbers agree", t.pass(), t.summary("problems") + ", " + std::to_string(nonzero) + " nonzero"};
}

CriterionResult at_most_one(const SweepOptions& o) {
  const SolveOptions so = solve_options(o, WinMode::AtMostOne);
  Tally t;
  long instances = 0, nonzero = 0, unknown = 0;
  std::uint64_t nodes = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; l <= 2 && l < n; ++l) {
      const auto words = ZeroOneString::all(n - l, l);
      for (int s = 1; s <= 2; ++s) {
        for_each_tuple(words, s + 2, [&](const std::vector<ZeroOneString>& w) {
          GrassmannProblem prob{{w.begin(), w.begin() + s}, w[s], w[s + 1], l};
          if (prob.degree_excess() == 0) return;
          ++instances;
          const bool product = !grassmann_product(prob).empty();
          nonzero += product;
          const Verdict v = solve_perms(encoded_permutations(prob), n + l, so);
          nodes += v.stats.nodes;
          if (!v.decided()) ++unknown;
          bool ok = v.decided() && v.winnable() == product;
          if (ok && v.winnable())
            ok = verify_certificate(initial_position(encoded_permutations(prob), n + l), *v.certificate, WinMode::AtMostOne);
          t.check(ok, describe(prob) + " " + to_string(v.outcome));
        });
      }
    }
  }
  return {7, "Modified winning condition", t.pass(),
          std::to_string(instances) + " products, " + std::to_string(nonzero) + " nonzero, " + std::to_string(unknown) +
              " unknown, " + std::to_string(nodes) + " nodes; " + t.summary("checks")};
}

CriterionResult induction(const SweepOptions&) {
  Tally t;
  long instances = 0, won = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; l <= 2 && l < n; ++l) {
      const auto words = ZeroOneString::all(n - l, l);
      for_each_tuple(words, 4, [&](const std::vector<ZeroOneString>& w) {
        const GrassmannProblem prob{{w[0], w[1]}, w[2], w[3], l};
        ++instances;
        const bool pos = grassmann_intersection(prob) > 0;
        const GrassmannWin win = win_grassmannian(prob);
        bool ok = win.outcome == (pos ? GrassmannOutcome::Won : GrassmannOutcome::Zero);
        if (ok && pos) {
          ++won;
          ok = verify_certificate(win.game->initial, *win.sequence());
        }
        t.check(ok, describe(prob) + " " + to_string(win.outcome) + " " + win.message);
      });
    }
  }
  return {8, "s>1 induction", t.pass(),
          std::to_string(instances) + " instances, " + std::to_string(won) + " won; " + t.summary("checks")};
}

CriterionResult symmetry(const SweepOptions& o) {
  const SolveOptions so = solve_options(o, WinMode::Exact);
  std::mt19937 rng(77);
  Tally t;
  // Flag triples in S4 and S5.
  for (int taken = 0; taken < 100;) {
    const int n = 4 + taken % 2;
    const auto perms = all_permutations(n);
    std::vector<Permutation> x = {perms[rng() % perms.size()], perms[rng() % perms.size()], perms[rng() % perms.size()]};
    if (total_length(x) != n * (n - 1) / 2) continue;
    ++taken;
    const auto base = solve_perms(x, n, so).outcome;
    const auto number = flag_intersection(x, n);
    std::vector<int> order = {0, 1, 2};
    while (std::next_permutation(order.begin(), order.end())) {
      const std::vector<Permutation> y = {x[order[0]], x[order[1]], x[order[2]]};
      t.check(solve_perms(y, n, so).outcome == base && flag_intersection(y, n) == number, describe(x));
    }
  }
  // Grassmannian triples: oracle, GRGA and solver on the encoded game.
  for (int taken = 0; taken < 100;) {
    const int n = 4 + taken % 3, l = 1 + static_cast<int>(rng() % (n - 1 < 3 ? n - 1 : 3));
    const auto words = ZeroOneString::all(n - l, l);
    std::vector<ZeroOneString> w = {words[rng() % words.size()], words[rng() % words.size()], words[rng() % words.size()]};
    const GrassmannProblem base{{w[0]}, w[1], w[2], l};
    if (base.degree_excess() != 0) continue;
    ++taken;
    const auto number = grassmann_intersection(base);
    const auto outcome = win_grassmannian(base).outcome;
    const auto verdict = solve_perms(encoded_permutations(base), n + l, so).outcome;
    std::vector<int> order = {0, 1, 2};
    while (std::next_permutation(order.begin(), order.end())) {
      const GrassmannProblem p{{w[order[0]]}, w[order[1]], w[order[2]], l};
      t.check(grassmann_intersection(p) == number && win_grassmannian(p).outcome == outcome &&
                  solve_perms(encoded_permutations(p), n + l, so).outcome == verdict,
              describe(p));
    }
  }
  return {9, "Symmetry", t.pass(), "200 instances; " + t.summary("permuted checks")};
}

CriterionResult geometry(const SweepOptions&) {
  Tally t;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 5;
    const Board& b = Board::of(n);
    std::vector<SquareSet> masks(3, 0);
    for (int idx = 0; idx < b.size(); ++idx) {
      const int roll = static_cast<int>(rng() % 16);
      const SquareSet bit = SquareSet{1} << idx;
      if (roll < 12) masks[roll % 3] |= bit;
      else if (roll == 12) masks[roll % 3] |= bit, masks[(roll + 1) % 3] |= bit;
    }
    const SquareSet cut = b.ideal_closure(SquareSet{1} << (rng() % b.size()));
    std::vector<SquareSet> regions = {cut};
    if (cut != b.all()) regions.push_back(b.all() & ~cut);
    const GamePosition pos(n, masks, regions);
    for (SquareSet r : pos.regions())
      t.check(is_transverse(weight_datum(pos, b.least(r))) == is_region_won(pos, r, WinMode::Exact),
              "random position " + std::to_string(trial));
  }

  const GrassmannProblem prob{{ZeroOneString("1010101")}, ZeroOneString("1001011"), ZeroOneString("0100111"), 3};
  const BuiltGame built = build_game(prob);
  const WeightDatum d = weight_datum(built.position, built.position.board().least(built.big_region));
  t.check(span_string(d.v) ==
              "span{e14, e15, e16, e17, e18, e19, e24, e25, e26, e27, e28, e29, e34, e35, e36, e37, e38, e39, e3,10}",
          "V = " + span_string(d.v));
  t.check(span_string(d.u[0]) == "span{e14, e24, e25, e34, e35, e36}", "U1 = " + span_string(d.u[0]));
  t.check(span_string(d.u[1]) == "span{e14, e15, e16, e17, e24, e25, e26, e27, e34, e35, e36, e37, e38}",
          "U2 = " + span_string(d.u[1]));
  t.check(d.u[2].empty(), "U3 is not zero");
  t.check(span_string(d.u_not_b) == "span{e18, e19, e28, e29, e39, e3,10}", "U23 = " + span_string(d.u_not_b));
  t.check(is_transverse(d.v, {d.u_not_b, d.u[1], d.u[2]}), "V is not U23 + U2 + U3");
  return {10, "Geometry dictionary", t.pass(), t.summary("checks")};
}

CriterionResult termination(const SweepOptions&) {
  Tally t;
  std::mt19937 rng(4242);
  long moves = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 5, m = 3;
    std::vector<Permutation> perms;
    for (int k = 0; k < m; ++k) {
      std::vector<int> images(n);
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      perms.emplace_back(images);
    }
    GamePosition pos = initial_position(perms, n);
    const long bound = potential_bound(n, m);
    while (true) {
      if (rng() % 4 == 0) {
        const auto& regions = pos.regions();
        const Square id = pos.board().least(regions[rng() % regions.size()]);
        const auto traces = ideal_traces(pos, id);
        if (!traces.empty()) pos = split(pos, id, traces[rng() % traces.size()]);
      }
      const auto options = legal_moves(pos);
      if (options.empty()) break;
      const long before = potential(pos);
      pos = apply_move(pos, options[rng() % options.size()]);
      ++moves;
      const long after = potential(pos);
      t.check(after > before && after <= bound, "play-out " + std::to_string(trial));
    }
  }
  return {11, "Termination and potential", t.pass(),
          "1000 play-outs, " + std::to_string(moves) + " moves; " + t.summary("moves")};
}

}  // namespace

CriterionResult run_criterion(int id, const SweepOptions& options) {
  using Fn = CriterionResult (*)(const SweepOptions&);
  static const Fn table[] = {encoding_golden, picture_lr,  grassmann_positivity, grga_structure,
                             soundness,       encoded_consistency, at_most_one,          induction,
                             symmetry,        geometry,    termination};
  if (id < 1 || id > kCriteriaCount) throw std::invalid_argument("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = table[id - 1](options);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace rootgame
