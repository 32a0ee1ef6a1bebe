#include "regret_ult.h"

#include <cstring>
#include <optional>
#include <string>

#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/eu_oracle.hpp"
#include "core/json_io.hpp"
#include "core/mini_solver.hpp"
#include "core/multi_solver.hpp"

using namespace regult;

struct ru_game {
  GameSpec spec;
};

struct ru_domain {
  WinningDomain dom;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* msg) { t_last_error = msg ? msg : ""; }

ru_status fail(ru_status s, const char* msg) {
  set_error(msg);
  return s;
}

// Runs fn, translating exceptions to statuses.  Clears the error slot on
// success so stale messages never leak across calls.
template <class Fn>
ru_status guarded(Fn&& fn) {
  try {
    const ru_status s = fn();
    if (s == RU_OK) t_last_error.clear();
    return s;
  } catch (const validation_error& e) {
    return fail(RU_ERR_VALIDATION, e.what());
  } catch (const infeasible_error& e) {
    return fail(RU_ERR_INFEASIBLE, e.what());
  } catch (const degenerate_error& e) {
    return fail(RU_ERR_DEGENERATE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RU_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(RU_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RU_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RU_ERR_INTERNAL, "unknown failure");
  }
}

ru_real to_ru(const SignedLog& v) {
  ru_real r;
  r.value = v.to_double();
  r.sign = v.sign();
  r.log_abs = v.log_abs();
  return r;
}

ru_report to_ru(const RegretReport& rep) {
  ru_report r;
  r.rho_responder = to_ru(rep.rho_responder);
  r.rho_proposer = to_ru(rep.rho_proposer);
  r.delta = to_ru(rep.delta);
  return r;
}

bool bad(const void* p) { return p == nullptr; }

ProposerStrategy make_pi(const ru_game* g, const double* pi) {
  return ProposerStrategy(
      std::vector<double>(pi, pi + g->spec.offers.size()));
}

ResponderStrategy make_p(const ru_game* g, const double* p) {
  return ResponderStrategy(std::vector<double>(p, p + g->spec.offers.size()));
}

void fill_optimum(const ProposerOptimum& opt, ru_proposer_optimum* out) {
  out->value = opt.value;
  out->arm_count = opt.offers.size();
  for (size_t i = 0; i < opt.offers.size() && i < 4; ++i) {
    out->offers[i] = opt.offers[i];
    out->weights[i] = opt.weights[i];
  }
}

constexpr int kWinnerInts[] = {RU_RESPONDER_WINS, RU_PROPOSER_WINS_WITH_BOUND,
                               RU_PROPOSER_ALWAYS_WINS};

int winner_int(TwoOfferWinner w) { return kWinnerInts[static_cast<int>(w)]; }

}  // namespace

extern "C" {

const char* ru_status_str(ru_status s) {
  switch (s) {
    case RU_OK: return "ok";
    case RU_ERR_NULL_ARGUMENT: return "null argument";
    case RU_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RU_ERR_VALIDATION: return "validation failed";
    case RU_ERR_INFEASIBLE: return "infeasible";
    case RU_ERR_DEGENERATE: return "degenerate instance";
    case RU_ERR_PARSE: return "parse error";
    case RU_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case RU_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ru_last_error(void) { return t_last_error.c_str(); }

ru_status ru_game_create(double total, const double* offers, size_t n_offers,
                         ru_game** out) {
  if (bad(out) || (bad(offers) && n_offers > 0))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_game_create: null pointer");
  return guarded([&] {
    auto* g = new ru_game;
    g->spec.total = total;
    g->spec.offers.assign(offers, offers + n_offers);
    *out = g;
    return RU_OK;
  });
}

ru_status ru_game_clone(const ru_game* game, ru_game** out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_game_clone: null pointer");
  return guarded([&] {
    *out = new ru_game{game->spec};
    return RU_OK;
  });
}

void ru_game_free(ru_game* game) { delete game; }

ru_status ru_game_set_regret(ru_game* game, ru_regret_kind kind, double beta) {
  if (bad(game)) return fail(RU_ERR_NULL_ARGUMENT, "ru_game_set_regret: null game");
  if (kind != RU_REGRET_LINEAR && kind != RU_REGRET_SINH)
    return fail(RU_ERR_INVALID_ARGUMENT, "unknown regret kind");
  game->spec.regret.kind = (kind == RU_REGRET_SINH) ? RegretKind::Sinh : RegretKind::Linear;
  game->spec.regret.beta = beta;
  return guarded([] { return RU_OK; });
}

ru_status ru_game_set_utility(ru_game* game, ru_side side, ru_utility_kind kind,
                              double gamma) {
  if (bad(game)) return fail(RU_ERR_NULL_ARGUMENT, "ru_game_set_utility: null game");
  if (side != RU_SIDE_PROPOSER && side != RU_SIDE_RESPONDER)
    return fail(RU_ERR_INVALID_ARGUMENT, "unknown side");
  if (kind != RU_UTILITY_LINEAR && kind != RU_UTILITY_LOG)
    return fail(RU_ERR_INVALID_ARGUMENT, "unknown utility kind");
  UtilitySpec& u = (side == RU_SIDE_PROPOSER) ? game->spec.utility_proposer
                                              : game->spec.utility_responder;
  u.kind = (kind == RU_UTILITY_LOG) ? UtilityKind::Logarithmic : UtilityKind::Linear;
  u.gamma = gamma;
  return guarded([] { return RU_OK; });
}

ru_status ru_game_total(const ru_game* game, double* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_game_total: null pointer");
  *out = game->spec.total;
  return guarded([] { return RU_OK; });
}

ru_status ru_game_offer_count(const ru_game* game, size_t* out) {
  if (bad(game) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_game_offer_count: null pointer");
  *out = game->spec.offers.size();
  return guarded([] { return RU_OK; });
}

ru_status ru_game_offers(const ru_game* game, double* buf, size_t cap) {
  if (bad(game) || bad(buf)) return fail(RU_ERR_NULL_ARGUMENT, "ru_game_offers: null pointer");
  if (cap < game->spec.offers.size())
    return fail(RU_ERR_BUFFER_TOO_SMALL, "ru_game_offers: buffer too small");
  std::memcpy(buf, game->spec.offers.data(), game->spec.offers.size() * sizeof(double));
  return guarded([] { return RU_OK; });
}

ru_status ru_game_validate(const ru_game* game, char* buf, size_t cap) {
  if (bad(game)) return fail(RU_ERR_NULL_ARGUMENT, "ru_game_validate: null game");
  const ValidationReport rep = validate_game(game->spec);
  if (rep.ok()) {
    if (buf && cap) buf[0] = '\0';
    t_last_error.clear();
    return RU_OK;
  }
  const std::string joined = rep.joined();
  if (buf && cap) {
    const size_t n = std::min(cap - 1, joined.size());
    std::memcpy(buf, joined.data(), n);
    buf[n] = '\0';
  }
  return fail(RU_ERR_VALIDATION, joined.c_str());
}

ru_status ru_game_from_json(const char* text, ru_game** out) {
  if (bad(text) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_game_from_json: null pointer");
  try {
    GameSpec spec = game_from_json(text);
    *out = new ru_game{std::move(spec)};
    t_last_error.clear();
    return RU_OK;
  } catch (const std::exception& e) {
    return fail(RU_ERR_PARSE, e.what());
  }
}

ru_status ru_game_to_json(const ru_game* game, char* buf, size_t cap, size_t* needed) {
  if (bad(game) || bad(needed))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_game_to_json: null pointer");
  return guarded([&] {
    const std::string text = game_to_json(game->spec);
    *needed = text.size() + 1;
    if (bad(buf) || cap < *needed)
      return fail(RU_ERR_BUFFER_TOO_SMALL, "ru_game_to_json: buffer too small");
    std::memcpy(buf, text.c_str(), *needed);
    return RU_OK;
  });
}

ru_status ru_utility_eval(const ru_game* game, ru_side side, double x, double* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_utility_eval: null pointer");
  return guarded([&] {
    const UtilitySpec& u = (side == RU_SIDE_RESPONDER) ? game->spec.utility_responder
                                                       : game->spec.utility_proposer;
    *out = eval_utility(u, x);
    return RU_OK;
  });
}

ru_status ru_regret_eval(const ru_game* game, double x, ru_real* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_regret_eval: null pointer");
  return guarded([&] {
    *out = to_ru(eval_regret(game->spec.regret, x));
    return RU_OK;
  });
}

ru_status ru_regret_responder(const ru_game* game, const double* pi, const double* p,
                              ru_real* out) {
  if (bad(game) || bad(pi) || bad(p) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_regret_responder: null pointer");
  return guarded([&] {
    *out = to_ru(regret_diff_responder(game->spec, make_pi(game, pi), make_p(game, p)));
    return RU_OK;
  });
}

ru_status ru_regret_proposer(const ru_game* game, const double* pi, const double* p,
                             ru_real* out) {
  if (bad(game) || bad(pi) || bad(p) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_regret_proposer: null pointer");
  return guarded([&] {
    *out = to_ru(regret_diff_proposer(game->spec, make_pi(game, pi), make_p(game, p)));
    return RU_OK;
  });
}

ru_status ru_delta_r(const ru_game* game, const double* pi, const double* p,
                     ru_report* out) {
  if (bad(game) || bad(pi) || bad(p) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_delta_r: null pointer");
  return guarded([&] {
    *out = to_ru(delta_regret(game->spec, make_pi(game, pi), make_p(game, p)));
    return RU_OK;
  });
}

ru_status ru_conditional_regret_responder(const ru_game* game, const double* pi,
                                          long realized, ru_real* out) {
  if (bad(game) || bad(pi) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_conditional_regret_responder: null pointer");
  return guarded([&] {
    std::optional<std::size_t> idx;
    if (realized != RU_REALIZED_REJECT) {
      if (realized < 0)
        return fail(RU_ERR_INVALID_ARGUMENT, "realized index must be >= 0 or RU_REALIZED_REJECT");
      idx = static_cast<std::size_t>(realized);
    }
    *out = to_ru(regret_conditional_responder(game->spec, make_pi(game, pi), idx));
    return RU_OK;
  });
}

ru_status ru_max_delta_r(const ru_game* game, const double* pi, ru_report* at_argmax,
                         size_t* argmax_k, int* proposer_wins) {
  if (bad(game) || bad(pi))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_max_delta_r: null pointer");
  return guarded([&] {
    const MaxDeltaResult res = max_delta_regret(game->spec, make_pi(game, pi));
    if (at_argmax) *at_argmax = to_ru(res.at_argmax);
    if (argmax_k) *argmax_k = res.argmax.k;
    if (proposer_wins) *proposer_wins = res.proposer_wins ? 1 : 0;
    return RU_OK;
  });
}

ru_status ru_kappa(const ru_game* game, ru_real* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_kappa: null pointer");
  return guarded([&] {
    *out = to_ru(kappa(game->spec));
    return RU_OK;
  });
}

ru_status ru_classify_two_offer(const ru_game* game, ru_two_offer_verdict* out) {
  if (bad(game) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_classify_two_offer: null pointer");
  return guarded([&] {
    const TwoOfferVerdict v = classify_two_offer(game->spec);
    out->winner = winner_int(v.winner);
    out->pi_c = v.pi_c;
    out->has_p0_bound = v.p0_bound.has_value() ? 1 : 0;
    out->p0_bound = v.p0_bound.value_or(0.0);
    out->kappa = to_ru(v.kappa);
    return RU_OK;
  });
}

ru_status ru_responder_p0_bound(const ru_game* game, double* out) {
  if (bad(game) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_responder_p0_bound: null pointer");
  return guarded([&] {
    *out = responder_p0_bound(game->spec);
    return RU_OK;
  });
}

ru_status ru_eu_two_offer_winner(const ru_game* game, int* winner, int* degenerate) {
  if (bad(game) || bad(winner))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_eu_two_offer_winner: null pointer");
  return guarded([&] {
    const EUTwoOfferResult r = eu_two_offer_winner(game->spec);
    *winner = winner_int(r.winner);
    if (degenerate) *degenerate = r.degenerate ? 1 : 0;
    return RU_OK;
  });
}

ru_status ru_hetero_thresholds(const ru_game* game, double* responder_wins_above,
                               double* proposer_immune_below) {
  if (bad(game) || bad(responder_wins_above) || bad(proposer_immune_below))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_hetero_thresholds: null pointer");
  return guarded([&] {
    const HeteroThresholds t = hetero_thresholds(game->spec);
    *responder_wins_above = t.responder_wins_above;
    *proposer_immune_below = t.proposer_immune_below;
    return RU_OK;
  });
}

ru_status ru_superfair_pi_c(const ru_game* game, double* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_superfair_pi_c: null pointer");
  return guarded([&] {
    *out = superfair_pi_c(game->spec);
    return RU_OK;
  });
}

ru_status ru_optimize_two_offer(const ru_game* game, double a1, int utility_weighted,
                                ru_two_offer_optimum* out) {
  if (bad(game) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_optimize_two_offer: null pointer");
  return guarded([&] {
    const TwoOfferOptimum opt =
        optimize_proposer_two(game->spec, a1, utility_weighted != 0);
    out->value = opt.value;
    out->a0 = opt.a0;
    out->pi_c = opt.pi_c;
    out->open_boundary = opt.open_boundary ? 1 : 0;
    return RU_OK;
  });
}

ru_status ru_winning_domain(const ru_game* game, double grid_step, ru_domain** out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_winning_domain: null pointer");
  return guarded([&] {
    WinningDomain dom = winning_domain(game->spec, grid_step);
    *out = new ru_domain{std::move(dom)};
    return RU_OK;
  });
}

void ru_domain_free(ru_domain* domain) { delete domain; }

ru_status ru_domain_arms(const ru_domain* domain, size_t* out) {
  if (bad(domain) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_arms: null pointer");
  *out = domain->dom.arms();
  return guarded([] { return RU_OK; });
}

ru_status ru_domain_resolution(const ru_domain* domain, size_t* out) {
  if (bad(domain) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_resolution: null pointer");
  *out = domain->dom.resolution();
  return guarded([] { return RU_OK; });
}

ru_status ru_domain_grid_points(const ru_domain* domain, size_t* out) {
  if (bad(domain) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_grid_points: null pointer");
  *out = domain->dom.grid_points();
  return guarded([] { return RU_OK; });
}

ru_status ru_domain_size(const ru_domain* domain, size_t* out) {
  if (bad(domain) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_size: null pointer");
  *out = domain->dom.size();
  return guarded([] { return RU_OK; });
}

ru_status ru_domain_member(const ru_domain* domain, size_t index, double* weights,
                           size_t cap) {
  if (bad(domain) || bad(weights))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_member: null pointer");
  if (index >= domain->dom.size())
    return fail(RU_ERR_INVALID_ARGUMENT, "ru_domain_member: index out of range");
  if (cap < domain->dom.arms())
    return fail(RU_ERR_BUFFER_TOO_SMALL, "ru_domain_member: buffer too small");
  const std::vector<double> w = domain->dom.weights(index);
  std::memcpy(weights, w.data(), w.size() * sizeof(double));
  return guarded([] { return RU_OK; });
}

ru_status ru_domain_contains(const ru_domain* domain, const double* weights, int* out) {
  if (bad(domain) || bad(weights) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_contains: null pointer");
  return guarded([&] {
    const std::size_t arms = domain->dom.arms();
    const auto res = static_cast<double>(domain->dom.resolution());
    std::vector<std::uint16_t> counts(arms);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < arms; ++i) {
      const double scaled = weights[i] * res;
      const double snapped = std::round(scaled);
      if (std::abs(scaled - snapped) > 1e-6 * res || snapped < 0.0)
        return fail(RU_ERR_INVALID_ARGUMENT, "weights do not sit on the domain grid");
      counts[i] = static_cast<std::uint16_t>(snapped);
      sum += counts[i];
    }
    if (sum != domain->dom.resolution())
      return fail(RU_ERR_INVALID_ARGUMENT, "weights do not sum to 1 on the grid");
    *out = domain->dom.contains(counts.data()) ? 1 : 0;
    return RU_OK;
  });
}

ru_status ru_domain_max_mean(const ru_game* game, const ru_domain* domain, int* feasible,
                             double* value, double* weights, size_t cap) {
  if (bad(game) || bad(domain) || bad(feasible))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_domain_max_mean: null pointer");
  return guarded([&] {
    const DomainOptimum opt = max_mean_kept(game->spec, domain->dom);
    *feasible = opt.feasible ? 1 : 0;
    if (!opt.feasible) return RU_OK;
    if (value) *value = opt.value;
    if (weights) {
      if (cap < opt.weights.size())
        return fail(RU_ERR_BUFFER_TOO_SMALL, "ru_domain_max_mean: buffer too small");
      std::memcpy(weights, opt.weights.data(), opt.weights.size() * sizeof(double));
    }
    return RU_OK;
  });
}

ru_status ru_optimize_u1(const ru_game* game, double a_last, double grid_step,
                         double offer_step, ru_proposer_optimum* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_optimize_u1: null pointer");
  return guarded([&] {
    fill_optimum(optimize_u1(game->spec, a_last, grid_step, offer_step), out);
    return RU_OK;
  });
}

ru_status ru_optimize_u2(const ru_game* game, double a_last, int mode, double a0,
                         double grid_step, double offer_step, ru_proposer_optimum* out) {
  if (bad(game) || bad(out)) return fail(RU_ERR_NULL_ARGUMENT, "ru_optimize_u2: null pointer");
  if (mode != 0 && mode != 1)
    return fail(RU_ERR_INVALID_ARGUMENT, "ru_optimize_u2: mode must be 0 (full) or 1 (fixed top)");
  return guarded([&] {
    const TripleMode m = (mode == 1) ? TripleMode::FixedTop : TripleMode::Full;
    const std::optional<double> top =
        (mode == 1) ? std::optional<double>(a0) : std::nullopt;
    fill_optimum(optimize_u2(game->spec, a_last, m, top, grid_step, offer_step), out);
    return RU_OK;
  });
}

ru_status ru_eu_gap(const ru_game* game, const double* pi, const double* p, double* out) {
  if (bad(game) || bad(pi) || bad(p) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_eu_gap: null pointer");
  return guarded([&] {
    *out = eu_regret_gap(game->spec, make_pi(game, pi), make_p(game, p));
    return RU_OK;
  });
}

ru_status ru_eu_best_response(const ru_game* game, double* p, size_t cap, int* degenerate) {
  if (bad(game) || bad(p)) return fail(RU_ERR_NULL_ARGUMENT, "ru_eu_best_response: null pointer");
  return guarded([&] {
    const EUBestResponse r = eu_best_response(game->spec);
    if (cap < r.p.size())
      return fail(RU_ERR_BUFFER_TOO_SMALL, "ru_eu_best_response: buffer too small");
    std::memcpy(p, r.p.probs().data(), r.p.size() * sizeof(double));
    if (degenerate) *degenerate = r.degenerate_tie ? 1 : 0;
    return RU_OK;
  });
}

ru_status ru_eu_winning(const ru_game* game, const double* pi, int* out) {
  if (bad(game) || bad(pi) || bad(out))
    return fail(RU_ERR_NULL_ARGUMENT, "ru_eu_winning: null pointer");
  return guarded([&] {
    *out = eu_winning_condition(game->spec, make_pi(game, pi)) ? 1 : 0;
    return RU_OK;
  });
}

ru_status ru_eu_optimal_three(const ru_game* game, double* value, double* pi_c,
                              int* regime) {
  if (bad(game)) return fail(RU_ERR_NULL_ARGUMENT, "ru_eu_optimal_three: null game");
  return guarded([&] {
    const EUOptimum opt = eu_optimal_three(game->spec);
    if (value) *value = opt.value;
    if (pi_c) *pi_c = opt.pi_c;
    if (regime) {
      switch (opt.regime) {
        case EURegime::TwoOfferReduction: *regime = RU_EU_TWO_OFFER_REDUCTION; break;
        case EURegime::ProbabilisticMixing: *regime = RU_EU_PROBABILISTIC_MIXING; break;
        case EURegime::ResponderWins: *regime = RU_EU_RESPONDER_WINS; break;
      }
    }
    return RU_OK;
  });
}

} /* extern "C" */
