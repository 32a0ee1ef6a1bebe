#include "core/eu_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace regult {

namespace {

void check_len(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + " length does not match offer count");
}

}  // namespace

double eu_regret_gap(const GameSpec& game, const ProposerStrategy& pi,
                     const ResponderStrategy& p) {
  require_valid(game);
  const std::size_t arms = game.offers.size();
  check_len(pi.size(), arms, "proposer strategy");
  check_len(p.size(), arms, "responder strategy");

  const std::size_t n = arms - 1;
  const double u_bottom = eval_utility(game.utility_proposer, game.offers[n]);
  double gap = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double keep = eval_utility(game.utility_proposer, game.offers[l]);
    const double give = eval_utility(game.utility_responder, game.total - game.offers[l]);
    gap += pi[l] * (p[l] * keep + (1.0 - p[l]) * give - u_bottom);
  }
  return gap;
}

EUBestResponse eu_best_response(const GameSpec& game) {
  require_valid(game);
  const std::size_t arms = game.offers.size();
  std::vector<double> p(arms, 1.0);
  bool tie = false;
  for (std::size_t l = 0; l + 1 < arms; ++l) {
    const double keep = eval_utility(game.utility_proposer, game.offers[l]);
    const double give = eval_utility(game.utility_responder, game.total - game.offers[l]);
    if (keep > give)
      p[l] = 0.0;
    else if (keep == give)
      tie = true;  // indifferent; acceptance kept, flagged
  }
  return {ResponderStrategy(p), tie};
}

bool eu_winning_condition(const GameSpec& game, const ProposerStrategy& pi) {
  const EUBestResponse best = eu_best_response(game);
  check_len(pi.size(), game.offers.size(), "proposer strategy");
  return eu_regret_gap(game, pi, best.p) > 0.0;
}

EUOptimum eu_optimal_three(const GameSpec& game) {
  require_valid(game);
  if (game.offers.size() != 3)
    throw std::invalid_argument("three-offer closed form needs exactly three offers");
  if (game.regret.kind != RegretKind::Linear)
    throw std::invalid_argument("three-offer closed form applies to linear regret");
  const double half = game.total / 2.0;
  if (!(game.offers[0] > half && game.offers[1] < half))
    throw std::invalid_argument("three-offer closed form needs a_0 > A/2 > a_1");

  const double u0 = eval_utility(game.utility_proposer, game.offers[0]);
  const double u1 = eval_utility(game.utility_proposer, game.offers[1]);
  const double u2 = eval_utility(game.utility_proposer, game.offers[2]);
  const double spurned = eval_utility(game.utility_responder, game.total - game.offers[0]);

  const double num = u2 - spurned;
  const double den = u1 - spurned;

  EUOptimum out;
  if (den > 0.0 && num > 0.0) {
    out.pi_c = 1.0 - num / den;
    out.regime = EURegime::ProbabilisticMixing;
  } else if (den == 0.0 && num >= 0.0) {
    throw degenerate_error("three-offer closed form: zero denominator");
  } else {
    out.pi_c = 1.0;
    out.regime = EURegime::TwoOfferReduction;
  }
  out.value = out.pi_c * (u0 - u2) + (1.0 - out.pi_c) * (u1 - u2) + u2;
  return out;
}

}  // namespace regult
