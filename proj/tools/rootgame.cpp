#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootgame/flag_oracle.hpp"
#include "rootgame/grassmann.hpp"
#include "rootgame/pictures_lr.hpp"
#include "rootgame/position_io.hpp"
#include "rootgame/solver.hpp"
#include "rootgame/sweeps.hpp"

using namespace rootgame;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kBudget = 2, kDisagree = 3;
constexpr int kFlagOracleMaxN = 6;

struct Common {
  bool json = false;
  std::string mode = "exact";
  std::uint64_t budget = default_budget();
  int threads = 1;
  std::string certificate;
};

struct ProblemArgs {
  std::vector<std::string> sigmas;
  std::string mu, nu, file;
  int N = -1;  // -1: default to l

  void add(CLI::App* cmd) {
    cmd->add_option("--sigma", sigmas, "0/1 string of a class (repeatable)");
    cmd->add_option("--mu", mu, "0/1 string");
    cmd->add_option("--nu", nu, "0/1 string");
    cmd->add_option("--N", N, "number of extra columns (default l)");
    cmd->add_option("--problem", file, "JSON problem file");
  }

  GrassmannProblem get() const {
    GrassmannProblem prob;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot read " + file);
      prob = problem_from_json(json::parse(in));
    } else {
      if (sigmas.empty() || mu.empty() || nu.empty())
        throw std::invalid_argument("give --sigma, --mu and --nu, or --problem");
      for (const auto& s : sigmas) prob.sigmas.emplace_back(s);
      prob.mu = ZeroOneString(mu);
      prob.nu = ZeroOneString(nu);
      prob.N = prob.l();
    }
    if (N >= 0) prob.N = N;
    prob.validate();
    return prob;
  }
};

SolveOptions solve_options(const Common& c) {
  SolveOptions o;
  o.mode = parse_win_mode(c.mode);
  o.budget = c.budget;
  o.threads = c.threads;
  return o;
}

void write_certificate(const Common& c, std::span<const Action> actions, int n) {
  if (c.certificate.empty()) return;
  std::ofstream out(c.certificate);
  if (!out) throw std::invalid_argument("cannot write " + c.certificate);
  out << to_json(actions, n).dump(2) << '\n';
}

std::string join(const std::vector<Permutation>& perms) {
  std::string s;
  for (const auto& p : perms) s += (s.empty() ? "" : " ") + p.to_string();
  return s;
}

GamePosition read_position(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return position_from_json(json::parse(in));
}

int flag_nonvanishing(const Common& c, const std::vector<std::string>& words, int n) {
  std::vector<Permutation> perms;
  for (const auto& w : words) perms.push_back(Permutation::parse(w));
  if (perms.empty()) throw std::invalid_argument("no permutations given");
  if (n <= 0)
    for (const auto& p : perms) n = std::max(n, p.size());
  for (const auto& p : perms)
    if (p.size() > n) throw std::invalid_argument(p.to_string() + " does not fit in S_" + std::to_string(n));

  const SolveOptions so = solve_options(c);
  const Verdict v = solve(initial_position(perms, n), so);
  std::optional<std::uint64_t> number;
  std::optional<bool> product_nonzero;
  if (n <= kFlagOracleMaxN) {
    number = flag_intersection(perms, n);
    if (so.mode == WinMode::AtMostOne) product_nonzero = !monk_product(perms, n).empty();
  }
  // Exact: winnable iff the number is positive (one direction is proved, the
  // other holds in every case checked). AtMostOne: iff the product is nonzero.
  std::optional<bool> agree;
  if (v.decided() && number)
    agree = so.mode == WinMode::Exact ? v.winnable() == (*number > 0) : v.winnable() == *product_nonzero;
  if (v.certificate) write_certificate(c, *v.certificate, n);

  if (c.json) {
    json out = {{"perms", words}, {"n", n}, {"mode", to_string(so.mode)}, {"verdict", to_string(v.outcome)},
                {"nodes", v.stats.nodes}};
    out["number"] = number ? json(*number) : json(nullptr);
    if (product_nonzero) out["product_nonzero"] = *product_nonzero;
    out["agree"] = agree ? json(*agree) : json(nullptr);
    if (v.certificate) out["certificate"] = to_json(*v.certificate, n);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << join(perms) << " in S_" << n << " (" << to_string(so.mode) << "): " << to_string(v.outcome) << '\n';
    if (number) std::cout << "intersection number: " << *number << '\n';
    else std::cout << "intersection number: not computed (n > " << kFlagOracleMaxN << ")\n";
    if (product_nonzero) std::cout << "product nonzero: " << (*product_nonzero ? "yes" : "no") << '\n';
    if (agree) std::cout << "agreement: " << (*agree ? "yes" : "NO") << '\n';
    if (v.certificate) {
      std::cout << "certificate (" << v.certificate->size() << " actions):\n";
      for (const auto& a : *v.certificate) std::cout << "  " << describe(a) << '\n';
    }
  }
  if (!v.decided()) return kBudget;
  return agree.value_or(true) ? kOk : kDisagree;
}

int grass_nonvanishing(const Common& c, const GrassmannProblem& prob, bool skip_solver) {
  const std::uint64_t number = grassmann_intersection(prob);
  const GrassmannWin win = win_grassmannian(prob);
  const int board = prob.n() + prob.N;
  std::optional<Verdict> v;
  if (!skip_solver) v = solve(initial_position(encoded_permutations(prob), board), solve_options(c));

  // Failed means N was too small for the algorithm, which is not a disagreement.
  bool agree = win.outcome != (number > 0 ? GrassmannOutcome::Zero : GrassmannOutcome::Won);
  if (v && v->decided()) agree = agree && v->winnable() == (number > 0);
  if (auto seq = win.sequence()) write_certificate(c, *seq, board);
  else if (v && v->certificate) write_certificate(c, *v->certificate, board);

  if (c.json) {
    json out = {{"problem", to_json(prob)},   {"number", number}, {"grga", to_string(win.outcome)},
                {"message", win.message},     {"agree", agree}};
    out["solver"] = v ? json(to_string(v->outcome)) : json(nullptr);
    if (auto seq = win.sequence()) out["trace"] = to_json(*seq, board);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "intersection number: " << number << '\n';
    std::cout << "GRGA: " << to_string(win.outcome);
    if (!win.message.empty()) std::cout << " (" << win.message << ")";
    std::cout << '\n';
    if (v) std::cout << "solver: " << to_string(v->outcome) << '\n';
    std::cout << "agreement: " << (agree ? "yes" : "NO") << '\n';
  }
  if (!agree) return kDisagree;
  return v && !v->decided() ? kBudget : kOk;
}

json readiness_json(const ReadinessState& state) {
  const ReadinessTable t = readiness_numbers(state);
  json tokens = json::array(), squares = json::array();
  for (const auto& e : t.tokens) tokens.push_back({e.square.i, e.square.j, e.number});
  for (const auto& e : t.squares) squares.push_back({e.square.i, e.square.j, e.number});
  return {{"tokens", tokens}, {"empty_squares", squares}};
}

int grga_trace(const Common& c, const GrassmannProblem& prob) {
  const GrassmannWin win = win_grassmannian(prob);
  const int board = prob.n() + prob.N;
  if (c.json) {
    json stages = json::array();
    for (std::size_t k = 0; k < win.stages.size(); ++k) {
      const auto& run = win.stages[k];
      json moves = json::array(), panels = json::array();
      for (const auto& m : run.moves) moves.push_back(to_json(Action{m}, board));
      for (const auto& p : run.panels)
        panels.push_back({{"caption", p.caption}, {"position", to_json(p.position)}, {"readiness", readiness_json(p.state)}});
      stages.push_back({{"mover", win.layouts[k].mover}, {"moves", moves}, {"panels", panels}});
    }
    json out = {{"problem", to_json(prob)}, {"outcome", to_string(win.outcome)}, {"number", win.number},
                {"message", win.message}, {"stages", stages}};
    if (auto seq = win.sequence()) out["trace"] = to_json(*seq, board);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "outcome: " << to_string(win.outcome) << ", number " << win.number << '\n';
    if (!win.message.empty()) std::cout << win.message << '\n';
    for (std::size_t k = 0; k < win.stages.size(); ++k) {
      std::cout << "\nstage " << k + 1 << " (label " << win.layouts[k].mover << ")\n";
      for (const auto& p : win.stages[k].panels)
        std::cout << render_panel(win.layouts[k], p, prob.l() + prob.N) << '\n';
    }
  }
  if (auto seq = win.sequence()) write_certificate(c, *seq, board);
  return kOk;
}

int lr_command(const Common& c, const std::string& lam, const std::string& mu, const std::string& nu, bool list) {
  const Partition a = Partition::parse(lam), b = Partition::parse(mu), n = Partition::parse(nu);
  const auto count = lr_coefficient(a, b, n);
  if (c.json) {
    json out = {{"lambda", a.parts()}, {"mu", b.parts()}, {"nu", n.parts()}, {"count", count}};
    if (list) {
      out["tableaux"] = json::array();
      for (const auto& t : lr_tableaux(a, b, n)) out["tableaux"].push_back(t.rows);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << count << '\n';
  if (list) {
    for (const auto& t : lr_tableaux(a, b, n)) {
      for (const auto& row : t.rows) {
        for (int x : row) std::cout << x << ' ';
        std::cout << '\n';
      }
      std::cout << '\n';
    }
  }
  return kOk;
}

int pictures_command(const Common& c, const std::string& lam, const std::string& mu, const std::string& nu, bool list) {
  const Partition a = Partition::parse(lam), b = Partition::parse(mu), n = Partition::parse(nu);
  const int rows = std::max({a.row_count(), b.row_count(), n.row_count()});
  const SkewShape skew(n.padded(rows), b.padded(rows));
  const auto pictures = enumerate_pictures(a.padded(rows), skew);
  const auto lr = lr_coefficient(a, b, n);
  const bool agree = pictures.size() == lr;
  if (c.json) {
    json out = {{"count", pictures.size()}, {"lr_coefficient", lr}, {"agree", agree}};
    if (list) {
      out["pictures"] = json::array();
      for (const auto& f : pictures) {
        json pairs = json::array();
        for (std::size_t k = 0; k < f.domain.size(); ++k)
          pairs.push_back({{f.domain[k].row, f.domain[k].col}, {f.image[k].row, f.image[k].col}});
        out["pictures"].push_back(pairs);
      }
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << pictures.size() << " (LR coefficient " << lr << ")\n";
    if (list) {
      for (const auto& f : pictures) {
        for (std::size_t k = 0; k < f.domain.size(); ++k)
          std::cout << "(" << f.domain[k].row << "," << f.domain[k].col << ")->(" << f.image[k].row << ","
                    << f.image[k].col << ") ";
        std::cout << '\n';
      }
    }
  }
  return agree ? kOk : kDisagree;
}

GamePosition position_source(const std::string& file, const std::vector<std::string>& perms, int n) {
  if (!file.empty()) return read_position(file);
  if (perms.empty()) throw std::invalid_argument("give --position or permutations");
  std::vector<Permutation> ps;
  for (const auto& w : perms) ps.push_back(Permutation::parse(w));
  if (n <= 0)
    for (const auto& p : ps) n = std::max(n, p.size());
  return initial_position(ps, n);
}

int render_command(const Common& c, GamePosition pos, const std::string& actions_file) {
  if (!actions_file.empty()) {
    std::ifstream in(actions_file);
    if (!in) throw std::invalid_argument("cannot read " + actions_file);
    pos = replay(pos, actions_from_json(json::parse(in), pos.n()));
  }
  const WinMode mode = parse_win_mode(c.mode);
  if (c.json) {
    json out = to_json(pos);
    out["won"] = is_won(pos, mode);
    out["potential"] = potential(pos);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << render_ascii(pos) << "won: " << (is_won(pos, mode) ? "yes" : "no") << ", potential "
              << potential(pos) << '\n';
  }
  return kOk;
}

// Square list "i,j i,j ..." from whitespace-separated tokens.
SquareSet read_squares(const Board& b, std::istringstream& in) {
  SquareSet set = 0;
  std::string tok;
  while (in >> tok) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream t(tok);
    if (!(t >> i >> comma >> j) || comma != ',' || !b.contains({i, j}))
      throw std::invalid_argument("bad square '" + tok + "'");
    set |= b.bit(i, j);
  }
  return set;
}

const char* kPlayHelp =
    "commands:\n"
    "  show                       draw the position\n"
    "  moves                      list legal moves\n"
    "  move RI RJ LABEL I J       move LABEL in the region named S_RI,RJ from column I to J\n"
    "  split RI RJ i,j i,j ...    split that region along the listed squares\n"
    "  auto                       perform every tight split\n"
    "  undo | history | help | quit\n";

int play_command(const Common& c, GamePosition pos) {
  const WinMode mode = parse_win_mode(c.mode);
  std::vector<GamePosition> past;
  std::vector<Action> history;
  std::cout << render_ascii(pos) << kPlayHelp;
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    std::istringstream in(line);
    std::string cmd;
    if (!(in >> cmd)) continue;
    try {
      std::optional<Action> action;
      if (cmd == "quit" || cmd == "exit") break;
      if (cmd == "help") std::cout << kPlayHelp;
      else if (cmd == "show") std::cout << render_ascii(pos);
      else if (cmd == "history")
        for (const auto& a : history) std::cout << "  " << describe(a) << '\n';
      else if (cmd == "moves")
        for (const auto& m : legal_moves(pos)) std::cout << "  " << describe(Action{m}) << '\n';
      else if (cmd == "undo") {
        if (past.empty()) std::cout << "nothing to undo\n";
        else pos = past.back(), past.pop_back(), history.pop_back(), std::cout << render_ascii(pos);
      } else if (cmd == "auto") {
        std::vector<Split> done;
        const GamePosition next = split_maximally(pos, &done);
        for (const auto& s : done) past.push_back(pos), history.push_back(s);
        pos = next;
        std::cout << done.size() << " splits\n";
      } else if (cmd == "move") {
        Move m;
        if (!(in >> m.region.i >> m.region.j >> m.label >> m.i >> m.j)) throw std::invalid_argument("usage: move RI RJ LABEL I J");
        if (move_transfers(pos, m).empty()) std::cout << "warning: this move transfers no tokens\n";
        action = m;
      } else if (cmd == "split") {
        Split s;
        if (!(in >> s.region.i >> s.region.j)) throw std::invalid_argument("usage: split RI RJ i,j ...");
        s.part = read_squares(pos.board(), in);
        action = s;
      } else {
        std::cout << "unknown command; try help\n";
      }
      if (action) {
        const GamePosition next = apply_action(pos, *action);
        past.push_back(pos);
        history.push_back(*action);
        pos = next;
        std::cout << render_ascii(pos);
        if (is_won(pos, mode)) std::cout << "won in " << history.size() << " actions\n";
        else if (legal_moves(pos).empty()) std::cout << "no legal moves left\n";
      }
    } catch (const std::exception& e) {
      std::cout << "illegal: " << e.what() << '\n';
    }
  }
  write_certificate(c, history, pos.n());
  return kOk;
}

int verify_command(const Common& c, std::vector<int> ids) {
  if (ids.empty())
    for (int id = 1; id <= kCriteriaCount; ++id) ids.push_back(id);
  SweepOptions o;
  o.budget = c.budget;
  o.threads = c.threads;
  if (!c.json) o.log = &std::cerr;
  bool ok = true;
  json out = json::array();
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, o);
    ok = ok && r.pass;
    if (c.json) out.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    else std::cout << format_result(r) << std::endl;
  }
  if (c.json) std::cout << out.dump(2) << '\n';
  return ok ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root games for Schubert calculus"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.json, "machine-readable output");
  app.add_option("--mode", c.mode, "winning condition: exact|atmost")->check(CLI::IsMember({"exact", "atmost"}));
  app.add_option("--budget", c.budget, "solver node budget (ROOTGAME_BUDGET overrides the default)");
  app.add_option("--threads", c.threads, "solver threads")->check(CLI::PositiveNumber);
  app.add_option("--certificate", c.certificate, "write the winning action list here as JSON");
  app.fallthrough();

  int result = kOk;
  std::function<int()> run;

  auto* flag = app.add_subcommand("flag-nonvanishing", "decide a flag manifold intersection by the root game");
  std::vector<std::string> perms;
  int n = 0;
  flag->add_option("perms", perms, "permutations, e.g. 3426175 or 1,2,11,...")->required();
  flag->add_option("--n", n, "flag manifold size (default: longest permutation)");
  flag->callback([&] { run = [&] { return flag_nonvanishing(c, perms, n); }; });

  ProblemArgs grass_args;
  bool skip_solver = false;
  auto* grass = app.add_subcommand("grass-nonvanishing", "decide a Grassmannian intersection");
  grass_args.add(grass);
  grass->add_flag("--skip-solver", skip_solver, "only run the direct algorithm");
  grass->callback([&] { run = [&] { return grass_nonvanishing(c, grass_args.get(), skip_solver); }; });

  std::string lam, mu, nu;
  bool list = false;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  auto* pics = app.add_subcommand("pictures", "count pictures from a shape onto a skew shape");
  for (auto* cmd : {lr, pics}) {
    cmd->add_option("--lambda", lam, "partition, weakly increasing, e.g. 1,2,3")->required();
    cmd->add_option("--mu", mu, "inner partition")->required();
    cmd->add_option("--nu", nu, "outer partition")->required();
    cmd->add_flag("--list", list, "print every tableau or picture");
  }
  lr->callback([&] { run = [&] { return lr_command(c, lam, mu, nu, list); }; });
  pics->callback([&] { run = [&] { return pictures_command(c, lam, mu, nu, list); }; });

  ProblemArgs trace_args;
  auto* trace = app.add_subcommand("grga-trace", "panel-by-panel trace of the direct algorithm");
  trace_args.add(trace);
  trace->callback([&] { run = [&] { return grga_trace(c, trace_args.get()); }; });

  std::string position_file, actions_file;
  auto* render = app.add_subcommand("render", "draw a position");
  auto* play = app.add_subcommand("play", "play interactively");
  for (auto* cmd : {render, play}) {
    cmd->add_option("perms", perms, "permutations for the initial position");
    cmd->add_option("--n", n, "board size");
    cmd->add_option("--position", position_file, "position JSON file");
  }
  render->add_option("--actions", actions_file, "replay these actions first");
  render->callback([&] { run = [&] { return render_command(c, position_source(position_file, perms, n), actions_file); }; });
  play->callback([&] { run = [&] { return play_command(c, position_source(position_file, perms, n)); }; });

  std::vector<int> criteria;
  auto* verify = app.add_subcommand("verify", "run the acceptance sweeps");
  verify->add_option("--criterion", criteria, "criterion ids (default: all)")->check(CLI::Range(1, kCriteriaCount));
  verify->callback([&] { run = [&] { return verify_command(c, criteria); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    result = run();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GameError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return result;
}
