// Command-line front end.  Parses a game from inline flags or a spec file,
// dispatches one subcommand, and emits CSV or JSON.  Talks to the solver
// exclusively through the C API.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regret_ult.h"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 2 validation, 3 infeasible, 4 numeric degeneracy.
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDegenerate = 4;

int exit_code_for(ru_status s) {
  switch (s) {
    case RU_OK: return 0;
    case RU_ERR_INFEASIBLE: return kExitInfeasible;
    case RU_ERR_DEGENERATE: return kExitDegenerate;
    case RU_ERR_INTERNAL: return kExitDegenerate;
    default: return kExitValidation;
  }
}

struct cli_error {
  int code;
  std::string message;
};

[[noreturn]] void bail(int code, const std::string& message) {
  throw cli_error{code, message};
}

void check(ru_status s, const char* what) {
  if (s != RU_OK) {
    std::string msg = std::string(what) + ": " + ru_status_str(s);
    const char* detail = ru_last_error();
    if (detail && *detail) msg += std::string(" (") + detail + ")";
    bail(exit_code_for(s), msg);
  }
}

// Floats are printed with six significant digits and a C-locale decimal
// point; the process never calls setlocale, so snprintf stays locale-free.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Game construction from flags or a spec file.

struct GameOptions {
  double total = 0.0;
  std::vector<double> offers;
  double beta = 0.0;
  std::string regret;       // "sinh" (default) or "linear"
  std::string u_both;       // "linear" or "log[:gamma]"
  std::string u_proposer;
  std::string u_responder;
  std::string spec_path;
  CLI::Option* beta_opt = nullptr;
  bool placeholder_beta = false;  // sweeps overwrite the scale per row

  bool beta_set() const { return beta_opt && beta_opt->count() > 0; }
};

void add_game_flags(CLI::App* cmd, GameOptions* opt, bool need_offers) {
  auto* spec = cmd->add_option("--spec", opt->spec_path, "Game spec file (JSON)");
  auto* total = cmd->add_option("--A", opt->total, "Total amount to split");
  opt->beta_opt =
      cmd->add_option("--beta", opt->beta, "Regret scale for g(x) = sinh(x/beta)");
  auto* regret = cmd->add_option("--regret", opt->regret,
                                 "Regret kind: sinh (default) or linear")
                     ->check(CLI::IsMember({"sinh", "linear"}));
  auto* u = cmd->add_option("--u", opt->u_both,
                            "Utility for both sides: linear or log[:gamma]");
  auto* up = cmd->add_option("--u-proposer", opt->u_proposer, "Proposer utility");
  auto* ur = cmd->add_option("--u-responder", opt->u_responder, "Responder utility");
  opt->beta_opt->excludes(spec);
  total->excludes(spec);
  regret->excludes(spec);
  u->excludes(spec);
  up->excludes(spec);
  ur->excludes(spec);
  if (need_offers) {
    cmd->add_option("--offers", opt->offers, "Comma-separated kept amounts, descending")
        ->delimiter(',')
        ->excludes(spec);
  }
}

void apply_utility(ru_game* g, ru_side side, const std::string& text) {
  if (text == "linear") {
    check(ru_game_set_utility(g, side, RU_UTILITY_LINEAR, 0.0), "utility");
    return;
  }
  if (text == "log") {
    check(ru_game_set_utility(g, side, RU_UTILITY_LOG, 1.0), "utility");
    return;
  }
  if (text.rfind("log:", 0) == 0) {
    char* end = nullptr;
    const double gamma = std::strtod(text.c_str() + 4, &end);
    if (end && *end == '\0') {
      check(ru_game_set_utility(g, side, RU_UTILITY_LOG, gamma), "utility");
      return;
    }
  }
  bail(kExitValidation, "bad utility '" + text + "' (expected linear or log[:gamma])");
}

// Owning wrapper so early exits cannot leak handles.
struct Game {
  ru_game* h = nullptr;
  ~Game() { ru_game_free(h); }
  Game() = default;
  Game(const Game&) = delete;
  Game& operator=(const Game&) = delete;
};

void build_game(const GameOptions& opt, Game* out, bool need_offers) {
  if (!opt.spec_path.empty()) {
    std::ifstream in(opt.spec_path);
    if (!in) bail(kExitValidation, "cannot open spec file " + opt.spec_path);
    std::stringstream ss;
    ss << in.rdbuf();
    check(ru_game_from_json(ss.str().c_str(), &out->h), "spec file");
    return;
  }
  if (opt.total <= 0.0) bail(kExitValidation, "--A (or --spec) is required");
  if (need_offers && opt.offers.empty())
    bail(kExitValidation, "--offers (or --spec) is required");
  check(ru_game_create(opt.total, opt.offers.empty() ? nullptr : opt.offers.data(),
                       opt.offers.size(), &out->h),
        "game");
  if (opt.regret == "linear") {
    if (opt.beta_set()) bail(kExitValidation, "--beta conflicts with --regret linear");
    check(ru_game_set_regret(out->h, RU_REGRET_LINEAR, 0.0), "regret");
  } else {
    if (!opt.beta_set() && !opt.placeholder_beta)
      bail(kExitValidation, "--beta (or --regret linear) is required");
    check(ru_game_set_regret(out->h, RU_REGRET_SINH, opt.beta_set() ? opt.beta : 1.0),
          "regret");
  }
  if (!opt.u_both.empty()) {
    apply_utility(out->h, RU_SIDE_PROPOSER, opt.u_both);
    apply_utility(out->h, RU_SIDE_RESPONDER, opt.u_both);
  }
  if (!opt.u_proposer.empty()) apply_utility(out->h, RU_SIDE_PROPOSER, opt.u_proposer);
  if (!opt.u_responder.empty()) apply_utility(out->h, RU_SIDE_RESPONDER, opt.u_responder);
}

// ---------------------------------------------------------------------------
// Output plumbing.

struct OutputOptions {
  std::string path;
  std::string format;  // "", "csv", "json"
  bool json_flag = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opt) {
  cmd->add_option("-o,--output", opt->path, "Write to file instead of stdout");
  cmd->add_option("--format", opt->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--json", opt->json_flag, "Shorthand for --format json");
}

std::string extension_of(const std::string& path) {
  const size_t dot = path.find_last_of('.');
  const size_t slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return "";
  return path.substr(dot + 1);
}

// Resolves the effective format and enforces that an explicit or implied
// format agrees with the output path's extension.
std::string resolve_format(const OutputOptions& opt) {
  std::string format = opt.format;
  if (opt.json_flag) {
    if (!format.empty() && format != "json")
      bail(kExitValidation, "--json conflicts with --format " + format);
    format = "json";
  }
  const std::string ext = opt.path.empty() ? "" : extension_of(opt.path);
  if (format.empty()) format = ext.empty() ? "csv" : ext;
  if (format != "csv" && format != "json")
    bail(kExitValidation, "cannot infer output format from extension '" + ext + "'");
  if (!opt.path.empty() && ext != format)
    bail(kExitValidation, "output format " + format + " does not match extension of " +
                              opt.path);
  return format;
}

void emit(const OutputOptions& opt, const std::string& text) {
  if (opt.path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(opt.path, std::ios::binary);
  if (!out) bail(kExitValidation, "cannot open output file " + opt.path);
  out << text;
}

const char* winner_name(int w) {
  switch (w) {
    case RU_RESPONDER_WINS: return "ResponderWins";
    case RU_PROPOSER_WINS_WITH_BOUND: return "ProposerWinsWithBound";
    case RU_PROPOSER_ALWAYS_WINS: return "ProposerAlwaysWins";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// classify: two-offer verdict.

struct ClassifyCmd {
  GameOptions game;
  OutputOptions out;
};

int run_classify(const ClassifyCmd& cmd) {
  const std::string format = resolve_format(cmd.out);
  Game game;
  build_game(cmd.game, &game, true);

  ru_two_offer_verdict v;
  check(ru_classify_two_offer(game.h, &v), "classify");
  int eu_winner = 0;
  int eu_degenerate = 0;
  check(ru_eu_two_offer_winner(game.h, &eu_winner, &eu_degenerate), "eu winner");

  std::string text;
  if (format == "csv") {
    text = "winner,pi_c,p0_bound,kappa,eu_winner\n";
    text += std::string(winner_name(v.winner)) + "," + fmt(v.pi_c) + ",";
    if (v.has_p0_bound) text += fmt(v.p0_bound);
    text += "," + fmt(v.kappa.value) + "," + winner_name(eu_winner) + "\n";
  } else {
    ordered_json j;
    j["winner"] = winner_name(v.winner);
    j["pi_c"] = v.pi_c;
    if (v.has_p0_bound)
      j["p0_bound"] = v.p0_bound;
    else
      j["p0_bound"] = nullptr;
    j["kappa"] = v.kappa.value;
    j["eu_winner"] = winner_name(eu_winner);
    j["eu_degenerate"] = eu_degenerate != 0;
    text = j.dump(2) + "\n";
  }
  emit(cmd.out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// scan-pic: pi_c as a function of beta for a fixed two-offer game.

struct ScanCmd {
  GameOptions game;
  OutputOptions out;
  std::vector<double> betas;
  double beta_from = 0.0;
  double beta_to = 0.0;
  double beta_step = 0.0;
};

int run_scan(const ScanCmd& cmd) {
  const std::string format = resolve_format(cmd.out);
  // The sweep sets the regret scale per row, so no base --beta is needed.
  GameOptions base = cmd.game;
  base.placeholder_beta = true;
  Game game;
  build_game(base, &game, true);

  std::vector<double> betas = cmd.betas;
  if (betas.empty()) {
    if (cmd.beta_step <= 0.0 || cmd.beta_to < cmd.beta_from)
      bail(kExitValidation, "provide --betas or --beta-from/--beta-to/--beta-step");
    // Index-based stepping keeps a divisible endpoint exact; the sweep never
    // passes --beta-to.
    const double span = cmd.beta_to - cmd.beta_from;
    const long n = static_cast<long>(std::floor(span / cmd.beta_step + 1e-9));
    for (long i = 0; i <= n; ++i) betas.push_back(cmd.beta_from + i * cmd.beta_step);
  }
  if (betas.empty()) bail(kExitValidation, "empty beta sweep");

  std::string csv = "beta,pi_c,winner\n";
  ordered_json rows = ordered_json::array();
  for (double beta : betas) {
    check(ru_game_set_regret(game.h, RU_REGRET_SINH, beta), "regret");
    ru_two_offer_verdict v;
    check(ru_classify_two_offer(game.h, &v), "classify");
    if (format == "csv") {
      csv += fmt(beta) + "," + fmt(v.pi_c) + "," + winner_name(v.winner) + "\n";
    } else {
      ordered_json r;
      r["beta"] = beta;
      r["pi_c"] = v.pi_c;
      r["winner"] = winner_name(v.winner);
      rows.push_back(std::move(r));
    }
  }
  emit(cmd.out, format == "csv" ? csv : rows.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// domain: full simplex-grid membership table for two or three offers.

struct DomainCmd {
  GameOptions game;
  OutputOptions out;
  double grid = 0.01;
};

int run_domain(const DomainCmd& cmd) {
  const std::string format = resolve_format(cmd.out);
  Game game;
  build_game(cmd.game, &game, true);

  size_t arms = 0;
  check(ru_game_offer_count(game.h, &arms), "offer count");
  if (arms != 2 && arms != 3)
    bail(kExitValidation, "domain output is defined for 2 or 3 offers");

  ru_domain* dom = nullptr;
  check(ru_winning_domain(game.h, cmd.grid, &dom), "winning domain");
  size_t resolution = 0;
  ru_domain_resolution(dom, &resolution);

  const auto res = static_cast<double>(resolution);
  std::string csv = "pi_0,pi_1,in_omega\n";
  ordered_json rows = ordered_json::array();
  double w[3] = {0.0, 0.0, 0.0};
  // Full grid in the same canonical order the domain itself uses: leading
  // weights ascending.
  for (size_t m0 = 0; m0 <= resolution; ++m0) {
    const size_t hi1 = resolution - m0;           // rest of the mass
    const size_t lo1 = (arms == 2) ? hi1 : 0;     // two arms leave no freedom
    for (size_t m1 = lo1; m1 <= hi1; ++m1) {
      w[0] = static_cast<double>(m0) / res;
      w[1] = static_cast<double>(m1) / res;
      if (arms == 3) w[2] = static_cast<double>(resolution - m0 - m1) / res;
      int inside = 0;
      check(ru_domain_contains(dom, w, &inside), "membership");
      if (format == "csv") {
        csv += fmt(w[0]) + "," + fmt(w[1]) + "," + std::to_string(inside) + "\n";
      } else {
        ordered_json r;
        r["pi_0"] = w[0];
        r["pi_1"] = w[1];
        r["in_omega"] = inside;
        rows.push_back(std::move(r));
      }
    }
  }
  ru_domain_free(dom);
  emit(cmd.out, format == "csv" ? csv : rows.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// optimize: two-offer continuous optimum or grid optima over mixes.

struct OptimizeCmd {
  GameOptions game;
  OutputOptions out;
  std::string mode;  // two | u1 | u2 | tilde
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  bool a0_set = false;
  bool a1_set = false;
  bool a2_set = false;
  double grid = 0.01;
  double step = 1.0;
};

int run_optimize(const OptimizeCmd& cmd) {
  const std::string format = resolve_format(cmd.out);
  Game game;
  build_game(cmd.game, &game, false);

  std::string csv;
  ordered_json j;
  if (cmd.mode == "two") {
    if (!cmd.a1_set) bail(kExitValidation, "--mode two requires --a1");
    ru_two_offer_optimum opt;
    check(ru_optimize_two_offer(game.h, cmd.a1, 0, &opt), "optimize");
    csv = "value,a0,pi_c,open_boundary\n" + fmt(opt.value) + "," + fmt(opt.a0) + "," +
          fmt(opt.pi_c) + "," + std::to_string(opt.open_boundary) + "\n";
    j["mode"] = "two";
    j["value"] = opt.value;
    j["a0"] = opt.a0;
    j["pi_c"] = opt.pi_c;
    j["open_boundary"] = opt.open_boundary != 0;
  } else {
    if (!cmd.a2_set) bail(kExitValidation, "--mode " + cmd.mode + " requires --a2");
    ru_proposer_optimum opt;
    if (cmd.mode == "u1") {
      check(ru_optimize_u1(game.h, cmd.a2, cmd.grid, cmd.step, &opt), "optimize");
    } else if (cmd.mode == "u2") {
      check(ru_optimize_u2(game.h, cmd.a2, 0, 0.0, cmd.grid, cmd.step, &opt), "optimize");
    } else {  // tilde
      if (!cmd.a0_set) bail(kExitValidation, "--mode tilde requires --a0");
      check(ru_optimize_u2(game.h, cmd.a2, 1, cmd.a0, cmd.grid, cmd.step, &opt),
            "optimize");
    }
    std::string head = "value";
    std::string row = fmt(opt.value);
    for (size_t i = 0; i < opt.arm_count; ++i) {
      head += ",a" + std::to_string(i);
      row += "," + fmt(opt.offers[i]);
    }
    for (size_t i = 0; i < opt.arm_count; ++i) {
      head += ",pi_" + std::to_string(i);
      row += "," + fmt(opt.weights[i]);
    }
    csv = head + "\n" + row + "\n";
    j["mode"] = cmd.mode;
    j["value"] = opt.value;
    j["offers"] = std::vector<double>(opt.offers, opt.offers + opt.arm_count);
    j["pi"] = std::vector<double>(opt.weights, opt.weights + opt.arm_count);
  }
  emit(cmd.out, format == "csv" ? csv : j.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// table1: five embedded parameter sets, both grid optima per set, deviations
// against the published values, and the per-column sandwich check.

struct TableCmd {
  OutputOptions out;
  double grid = 0.01;
  double step = 1.0;
};

struct TableColumn {
  double a0, a1, a2, beta;
  double u1_ref;
  double pi2_ref[2];
  double u2t_ref;
  double pi3_ref[3];
};

// Published reference values; the second pi component of the last column is
// printed as 0.34 in the source table but the pair must sum to 1, so 0.44.
constexpr TableColumn kTable[] = {
    {59, 51, 47, 17, 53.24, {0.52, 0.48}, 53.44, {0.39, 0.44, 0.17}},
    {70, 54, 46, 16, 55.36, {0.39, 0.61}, 55.60, {0.27, 0.39, 0.34}},
    {69, 55, 47, 15, 54.04, {0.32, 0.68}, 54.30, {0.23, 0.28, 0.49}},
    {77, 61, 41, 18, 62.60, {0.60, 0.40}, 62.80, {0.55, 0.10, 0.35}},
    {72, 56, 43, 18, 59.24, {0.56, 0.44}, 59.46, {0.46, 0.24, 0.30}},
};

int run_table1(const TableCmd& cmd) {
  const std::string format = resolve_format(cmd.out);
  std::string csv =
      "col,a0,a1,a2,beta,u1,u1_ref,u1_dev,u1_a0,u1_pi0,u1_pi1,u1_pi_dev,"
      "u2t,u2t_ref,u2t_dev,u2t_a1,u2t_pi0,u2t_pi1,u2t_pi2,u2t_pi_dev,sandwich_ok\n";
  ordered_json rows = ordered_json::array();

  for (size_t c = 0; c < 5; ++c) {
    const TableColumn& col = kTable[c];
    Game game;
    check(ru_game_create(100.0, nullptr, 0, &game.h), "game");
    check(ru_game_set_regret(game.h, RU_REGRET_SINH, col.beta), "regret");

    ru_proposer_optimum u1;
    check(ru_optimize_u1(game.h, col.a2, cmd.grid, cmd.step, &u1), "optimize U1");
    ru_proposer_optimum u2t;
    check(ru_optimize_u2(game.h, col.a2, 1, col.a0, cmd.grid, cmd.step, &u2t),
          "optimize tilde U2");

    const double u1_dev = u1.value - col.u1_ref;
    const double u2t_dev = u2t.value - col.u2t_ref;
    double pi2_dev = 0.0;
    for (int i = 0; i < 2; ++i)
      pi2_dev = std::max(pi2_dev, std::abs(u1.weights[i] - col.pi2_ref[i]));
    double pi3_dev = 0.0;
    for (int i = 0; i < 3; ++i)
      pi3_dev = std::max(pi3_dev, std::abs(u2t.weights[i] - col.pi3_ref[i]));
    const bool sandwich = u1.value <= u2t.value + 1e-9;

    if (format == "csv") {
      csv += std::to_string(c + 1) + "," + fmt(col.a0) + "," + fmt(col.a1) + "," +
             fmt(col.a2) + "," + fmt(col.beta) + "," + fmt(u1.value) + "," +
             fmt(col.u1_ref) + "," + fmt(u1_dev) + "," + fmt(u1.offers[0]) + "," +
             fmt(u1.weights[0]) + "," + fmt(u1.weights[1]) + "," + fmt(pi2_dev) + "," +
             fmt(u2t.value) + "," + fmt(col.u2t_ref) + "," + fmt(u2t_dev) + "," +
             fmt(u2t.offers[1]) + "," + fmt(u2t.weights[0]) + "," +
             fmt(u2t.weights[1]) + "," + fmt(u2t.weights[2]) + "," + fmt(pi3_dev) +
             "," + (sandwich ? "TRUE" : "FALSE") + "\n";
    } else {
      ordered_json r;
      r["col"] = c + 1;
      r["params"] = {{"a0", col.a0}, {"a1", col.a1}, {"a2", col.a2}, {"beta", col.beta}};
      r["u1"] = {{"value", u1.value},
                 {"ref", col.u1_ref},
                 {"dev", u1_dev},
                 {"a0", u1.offers[0]},
                 {"pi", {u1.weights[0], u1.weights[1]}},
                 {"pi_dev", pi2_dev}};
      r["u2_tilde"] = {{"value", u2t.value},
                       {"ref", col.u2t_ref},
                       {"dev", u2t_dev},
                       {"a1", u2t.offers[1]},
                       {"pi", {u2t.weights[0], u2t.weights[1], u2t.weights[2]}},
                       {"pi_dev", pi3_dev}};
      r["sandwich_ok"] = sandwich;
      rows.push_back(std::move(r));
    }
  }
  emit(cmd.out, format == "csv" ? csv : rows.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret-theoretic ultimatum-game solver"};
  app.require_subcommand(1);
  long seed = 0;
  app.add_option("--seed", seed,
                 "Seed for randomized subcommands (accepted for config "
                 "compatibility; no current subcommand draws random numbers)");
  // Parent-level flags such as --seed are accepted after the subcommand too.
  app.fallthrough();

  ClassifyCmd classify;
  auto* c1 = app.add_subcommand("classify", "Winner and critical weight for two offers");
  add_game_flags(c1, &classify.game, true);
  add_output_flags(c1, &classify.out);

  ScanCmd scan;
  auto* c2 = app.add_subcommand("scan-pic", "pi_c as a function of beta");
  add_game_flags(c2, &scan.game, true);
  add_output_flags(c2, &scan.out);
  c2->add_option("--betas", scan.betas, "Comma-separated beta values")->delimiter(',');
  c2->add_option("--beta-from", scan.beta_from, "Sweep start");
  c2->add_option("--beta-to", scan.beta_to, "Sweep end (inclusive)");
  c2->add_option("--beta-step", scan.beta_step, "Sweep step");

  DomainCmd domain;
  auto* c3 = app.add_subcommand("domain", "Winning-domain membership on the prior grid");
  add_game_flags(c3, &domain.game, true);
  add_output_flags(c3, &domain.out);
  c3->add_option("--grid", domain.grid, "Grid step for the prior simplex");

  OptimizeCmd optimize;
  auto* c4 = app.add_subcommand("optimize", "Proposer optimum for a chosen mode");
  add_game_flags(c4, &optimize.game, false);
  add_output_flags(c4, &optimize.out);
  c4->add_option("--mode", optimize.mode, "two | u1 | u2 | tilde")
      ->required()
      ->check(CLI::IsMember({"two", "u1", "u2", "tilde"}));
  auto* a0 = c4->add_option("--a0", optimize.a0, "Pinned top offer (tilde mode)");
  auto* a1 = c4->add_option("--a1", optimize.a1, "Fixed fair offer (two mode)");
  auto* a2 = c4->add_option("--a2", optimize.a2, "Fixed bottom offer (u1/u2/tilde)");
  c4->add_option("--grid", optimize.grid, "Grid step for prior mixes");
  c4->add_option("--step", optimize.step, "Offer scan step");
  c4->callback([&optimize, a0, a1, a2] {
    optimize.a0_set = a0->count() > 0;
    optimize.a1_set = a1->count() > 0;
    optimize.a2_set = a2->count() > 0;
  });

  TableCmd table;
  auto* c5 = app.add_subcommand("table1", "Grid optima for the five benchmark columns");
  add_output_flags(c5, &table.out);
  c5->add_option("--grid", table.grid, "Grid step for prior mixes");
  c5->add_option("--step", table.step, "Offer scan step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (c1->parsed()) return run_classify(classify);
    if (c2->parsed()) return run_scan(scan);
    if (c3->parsed()) return run_domain(domain);
    if (c4->parsed()) return run_optimize(optimize);
    if (c5->parsed()) return run_table1(table);
  } catch (const cli_error& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  }
  return 0;
}
