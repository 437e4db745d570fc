#include "rootgame/geometry.hpp"

#include <algorithm>

namespace rootgame {

WeightDatum weight_datum(const GamePosition& pos, Square region, std::array<int, 3> labels) {
  const auto mask = pos.find_region(region);
  if (!mask) throw GameError(to_string(region) + " does not name a region");
  for (int k : labels)
    if (k < 1 || k > pos.m()) throw GameError("label " + std::to_string(k) + " is out of range");
  const Board& b = pos.board();
  WeightDatum d;
  d.region = region;
  d.labels = labels;
  d.v = b.squares_of(*mask);
  for (int k = 0; k < 3; ++k) d.u[k] = b.squares_of(*mask & pos.tokens(labels[k]));
  d.u_not_b = b.squares_of(*mask & ~pos.tokens(labels[1]));
  return d;
}

bool is_transverse(const std::vector<Square>& v, const std::array<std::vector<Square>, 3>& parts) {
  std::vector<Square> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  std::vector<Square> target = v;
  std::sort(target.begin(), target.end());
  return all == target;  // duplicates would make `all` longer
}

bool is_transverse(const WeightDatum& datum) { return is_transverse(datum.v, datum.u); }

std::string span_string(const std::vector<Square>& weights) {
  std::string out = "span{";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const Square s = weights[k];
    if (k) out += ", ";
    out += "e" + std::to_string(s.i) + (s.i >= 10 || s.j >= 10 ? "," : "") + std::to_string(s.j);
  }
  return out + "}";
}

nlohmann::json to_json(const WeightDatum& datum) {
  auto pairs = [](const std::vector<Square>& w) {
    nlohmann::json a = nlohmann::json::array();
    for (Square s : w) a.push_back({s.i, s.j});
    return a;
  };
  nlohmann::json u = nlohmann::json::array();
  for (const auto& part : datum.u) u.push_back(pairs(part));
  return {{"region", {datum.region.i, datum.region.j}},
          {"labels", datum.labels},
          {"V", pairs(datum.v)},
          {"U", u},
          {"U_not_b", pairs(datum.u_not_b)},
          {"transverse", is_transverse(datum)}};
}

}  // namespace rootgame
