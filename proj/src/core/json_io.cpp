#include "core/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace regult {

using nlohmann::json;

namespace {

UtilitySpec utility_from_json(const json& j) {
  UtilitySpec u;
  if (!j.is_object() || !j.contains("kind"))
    throw validation_error("utility spec must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    u.kind = UtilityKind::Linear;
  } else if (kind == "log") {
    u.kind = UtilityKind::Logarithmic;
    if (!j.contains("gamma")) throw validation_error("log utility needs \"gamma\"");
    u.gamma = j.at("gamma").get<double>();
  } else {
    throw validation_error("unknown utility kind \"" + kind + "\"");
  }
  return u;
}

json utility_to_json(const UtilitySpec& u) {
  if (u.kind == UtilityKind::Linear) return json{{"kind", "linear"}};
  return json{{"kind", "log"}, {"gamma", u.gamma}};
}

}  // namespace

GameSpec game_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("bad game JSON: ") + e.what());
  }
  if (!j.is_object()) throw validation_error("game JSON must be an object");

  GameSpec game;
  try {
    if (!j.contains("A")) throw validation_error("game JSON needs \"A\"");
    game.total = j.at("A").get<double>();
    if (!j.contains("offers")) throw validation_error("game JSON needs \"offers\"");
    game.offers = j.at("offers").get<std::vector<double>>();

    const bool has_beta = j.contains("beta") && !j.at("beta").is_null();
    const bool has_regret = j.contains("regret");
    if (has_beta && has_regret)
      throw validation_error("give either \"beta\" or \"regret\": \"linear\", not both");
    if (has_beta) {
      game.regret = {RegretKind::Sinh, j.at("beta").get<double>()};
    } else if (has_regret) {
      const auto& r = j.at("regret");
      if (!r.is_string() || r.get<std::string>() != "linear")
        throw validation_error("\"regret\" accepts only \"linear\"");
      game.regret = {RegretKind::Linear, 0.0};
    } else {
      throw validation_error("game JSON needs \"beta\" or \"regret\": \"linear\"");
    }

    if (j.contains("u_proposer")) game.utility_proposer = utility_from_json(j.at("u_proposer"));
    if (j.contains("u_responder")) game.utility_responder = utility_from_json(j.at("u_responder"));
  } catch (const json::exception& e) {
    throw validation_error(std::string("bad game JSON: ") + e.what());
  }
  return game;
}

std::string game_to_json(const GameSpec& game) {
  json j;
  j["A"] = game.total;
  j["offers"] = game.offers;
  if (game.regret.kind == RegretKind::Sinh)
    j["beta"] = game.regret.beta;
  else
    j["regret"] = "linear";
  j["u_proposer"] = utility_to_json(game.utility_proposer);
  j["u_responder"] = utility_to_json(game.utility_responder);
  return j.dump();
}

GameSpec load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open game file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return game_from_json(buf.str());
}

}  // namespace regult
