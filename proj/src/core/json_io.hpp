#pragma once

#include <string>

#include "core/game_model.hpp"

namespace regult {

// Game file format:
//   {"A": 100, "offers": [90, 60, 40], "beta": 10,
//    "u_proposer": {"kind": "linear"}, "u_responder": {"kind": "log", "gamma": 2.0}}
// "beta" selects sinh regret; "regret": "linear" selects the linear limit
// (exactly one of the two).  Utility objects default to linear when absent.
GameSpec game_from_json(const std::string& text);
std::string game_to_json(const GameSpec& game);

GameSpec load_game_file(const std::string& path);

}  // namespace regult
