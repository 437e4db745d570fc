#include "rootgame/position_io.hpp"

#include <algorithm>
#include <sstream>

namespace rootgame {

using nlohmann::json;

json squares_to_json(const Board& board, SquareSet set) {
  json out = json::array();
  for (Square s : board.squares_of(set)) out.push_back({s.i, s.j});
  return out;
}

SquareSet squares_from_json(const Board& board, const json& doc) {
  SquareSet out = 0;
  for (const auto& cell : doc) {
    const Square s{cell.at(0).get<int>(), cell.at(1).get<int>()};
    if (!board.contains(s)) throw GameError(to_string(s) + " is not on the board");
    out |= board.bit(s);
  }
  return out;
}

json to_json(const GamePosition& pos) {
  const Board& b = pos.board();
  json tokens = json::array();
  for (int idx = 0; idx < b.size(); ++idx) {
    const Square s = b.square(idx);
    auto labels = pos.labels_at(s);
    if (!labels.empty()) tokens.push_back({{"i", s.i}, {"j", s.j}, {"labels", labels}});
  }
  json regions = json::array();
  for (SquareSet r : pos.regions()) regions.push_back(squares_to_json(b, r));
  return {{"n", pos.n()}, {"m", pos.m()}, {"tokens", tokens}, {"regions", regions}};
}

GamePosition position_from_json(const json& doc) {
  const int n = doc.at("n").get<int>();
  const int m = doc.at("m").get<int>();
  const Board& b = Board::of(n);
  if (m < 1) throw GameError("m must be positive");
  std::vector<SquareSet> masks(m, 0);
  for (const auto& t : doc.at("tokens")) {
    const Square s{t.at("i").get<int>(), t.at("j").get<int>()};
    if (!b.contains(s)) throw GameError(to_string(s) + " is not on the board");
    for (int k : t.at("labels")) {
      if (k < 1 || k > m) throw GameError("token label out of range");
      if (masks[k - 1] & b.bit(s)) throw GameError("duplicate label in " + to_string(s));
      masks[k - 1] |= b.bit(s);
    }
  }
  std::vector<SquareSet> regions;
  if (doc.contains("regions")) {
    for (const auto& r : doc.at("regions")) regions.push_back(squares_from_json(b, r));
  } else {
    regions.push_back(b.all());
  }
  return GamePosition(n, std::move(masks), std::move(regions));
}

json to_json(const Action& action, int n) {
  const Board& b = Board::of(n);
  return std::visit(
      [&](const auto& a) -> json {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Move>) {
          return {{"type", "move"}, {"region", {a.region.i, a.region.j}}, {"k", a.label}, {"i", a.i}, {"j", a.j}};
        } else if constexpr (std::is_same_v<T, Split>) {
          return {{"type", "split"}, {"region", {a.region.i, a.region.j}}, {"part", squares_to_json(b, a.part)}};
        } else {
          return {{"type", "relabel"}, {"squares", squares_to_json(b, a.squares)}, {"from", a.from}, {"to", a.to}};
        }
      },
      action);
}

Action action_from_json(const json& doc, int n) {
  const Board& b = Board::of(n);
  const std::string type = doc.at("type").get<std::string>();
  if (type == "move") {
    return Move{{doc.at("region").at(0).get<int>(), doc.at("region").at(1).get<int>()},
                doc.at("k").get<int>(), doc.at("i").get<int>(), doc.at("j").get<int>()};
  }
  if (type == "split") {
    const Square region{doc.at("region").at(0).get<int>(), doc.at("region").at(1).get<int>()};
    return Split{region, squares_from_json(b, doc.at("part"))};
  }
  if (type == "relabel") {
    return Relabel{squares_from_json(b, doc.at("squares")), doc.at("from").get<int>(), doc.at("to").get<int>()};
  }
  throw GameError("unknown action type '" + type + "'");
}

json to_json(std::span<const Action> actions, int n) {
  json out = json::array();
  for (const Action& a : actions) out.push_back(to_json(a, n));
  return out;
}

std::vector<Action> actions_from_json(const json& doc, int n) {
  std::vector<Action> out;
  for (const auto& a : doc) out.push_back(action_from_json(a, n));
  return out;
}

std::string describe(const Action& action) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Move>) {
          return "move region " + to_string(a.region) + " k=" + std::to_string(a.label) + " (" + std::to_string(a.i) +
                 "," + std::to_string(a.j) + ")";
        } else if constexpr (std::is_same_v<T, Split>) {
          return "split region " + to_string(a.region) + " (" + std::to_string(popcount(a.part)) + " squares split off)";
        } else {
          return "relabel " + std::to_string(popcount(a.squares)) + " sequestered tokens " + std::to_string(a.from) +
                 " -> " + std::to_string(a.to);
        }
      },
      action);
}

std::string render_ascii(const GamePosition& pos) {
  const Board& b = pos.board();
  const int n = pos.n();
  if (n < 2) return "(empty board)\n";

  std::vector<std::string> cells(b.size());
  std::size_t width = 1;
  for (int idx = 0; idx < b.size(); ++idx) {
    std::string text;
    for (int k : pos.labels_at(b.square(idx))) {
      if (!text.empty() && pos.m() >= 10) text += ',';
      text += std::to_string(k);
    }
    if (text.empty()) text = ".";
    width = std::max(width, text.size());
    cells[idx] = std::move(text);
  }
  std::vector<int> region_of(b.size(), -1);
  for (std::size_t r = 0; r < pos.regions().size(); ++r)
    for (int idx = 0; idx < b.size(); ++idx)
      if (pos.regions()[r] >> idx & 1) region_of[idx] = static_cast<int>(r);

  const int stride = static_cast<int>(width) + 1;
  const int left = 4;
  const int top = 1;
  const int cols = left + (n - 1) * stride + 1;
  const int rows = top + 2 * (n - 1) + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  auto bx = [&](int j) { return left + (j - 2) * stride; };
  auto by = [&](int i) { return top + 2 * (i - 1); };

  for (int j = 2; j <= n; ++j) {
    const std::string label = std::to_string(j);
    for (std::size_t c = 0; c < label.size(); ++c) canvas[0][bx(j) + 1 + c] = label[c];
  }
  auto hline = [&](int y, int j) {
    for (int x = bx(j); x <= bx(j) + stride; ++x)
      if (canvas[y][x] != '+') canvas[y][x] = '-';
  };
  auto vline = [&](int i, int x) {
    canvas[by(i) + 1][x] = '|';
    canvas[by(i)][x] = '+';
    canvas[by(i) + 2][x] = '+';
  };
  for (int i = 1; i < n; ++i) {
    const std::string label = std::to_string(i);
    for (std::size_t c = 0; c < label.size(); ++c) canvas[by(i) + 1][1 + c] = label[c];
    for (int j = i + 1; j <= n; ++j) {
      const int idx = b.index(i, j);
      const std::string& text = cells[idx];
      for (std::size_t c = 0; c < text.size(); ++c) canvas[by(i) + 1][bx(j) + 1 + c] = text[c];
      if (i == 1 || region_of[b.index(i - 1, j)] != region_of[idx]) hline(by(i), j);
      if (i + 1 == j || region_of[b.index(i + 1, j)] != region_of[idx]) hline(by(i) + 2, j);
      if (j == i + 1 || region_of[b.index(i, j - 1)] != region_of[idx]) vline(i, bx(j));
      if (j == n || region_of[b.index(i, j + 1)] != region_of[idx]) vline(i, bx(j) + stride);
    }
  }
  std::ostringstream out;
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace rootgame
