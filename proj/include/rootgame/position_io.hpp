#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootgame/position.hpp"

namespace rootgame {

/// {"n":int, "m":int, "tokens":[{"i","j","labels":[...]}], "regions":[[[i,j],...],...]}.
/// Only occupied squares are listed; regions and squares in lexicographic order.
nlohmann::json to_json(const GamePosition& pos);
GamePosition position_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Action& action, int n);
Action action_from_json(const nlohmann::json& doc, int n);

nlohmann::json to_json(std::span<const Action> actions, int n);
std::vector<Action> actions_from_json(const nlohmann::json& doc, int n);

nlohmann::json squares_to_json(const Board& board, SquareSet set);
SquareSet squares_from_json(const Board& board, const nlohmann::json& doc);

/// Triangular array, row i down and column j across. Each cell lists its
/// labels ('.' when empty); region boundaries are drawn with '|' and '-'.
std::string render_ascii(const GamePosition& pos);

std::string describe(const Action& action);

}  // namespace rootgame
