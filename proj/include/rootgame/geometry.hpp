#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootgame/position.hpp"

namespace rootgame {

/// Torus weights attached to a region. The weight x_i - x_j is stored as the
/// square S_ij; all lists are in lexicographic order.
struct WeightDatum {
  Square region;
  std::array<int, 3> labels{1, 2, 3};
  std::vector<Square> v;                 // every square of the region
  std::array<std::vector<Square>, 3> u;  // squares holding labels[k]
  std::vector<Square> u_not_b;           // squares without a labels[1] token
};

/// Throws GameError when `region` does not name a region of `pos`, or a label
/// is out of range.
WeightDatum weight_datum(const GamePosition& pos, Square region, std::array<int, 3> labels = {1, 2, 3});

/// V is the disjoint union of the three weight sets.
bool is_transverse(const std::vector<Square>& v, const std::array<std::vector<Square>, 3>& parts);
bool is_transverse(const WeightDatum& datum);

/// "span{e14, e15, e3,10}": the basis vector e_ij is written e<i><j>, with a
/// comma between indices when either has two digits.
std::string span_string(const std::vector<Square>& weights);

nlohmann::json to_json(const WeightDatum& datum);

}  // namespace rootgame
