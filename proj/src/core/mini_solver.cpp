#include "core/mini_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace regult {

namespace {

constexpr double kGoldenTol = 1e-7;
constexpr double kEdgeGap = 1e-9;  // open right end of the a_0 range

void require_two_offers(const GameSpec& game) {
  require_valid(game);
  if (game.offers.size() != 2)
    throw validation_error("two-offer analysis needs exactly two offers");
}

// All candidate-independent pieces of the closed forms.
struct TwoOfferTerms {
  double u_prop_low;   // u_I(a_1)
  double u_resp_low;   // u_II(A - a_0)
  double u_resp_high;  // u_II(A - a_1)
  SignedLog g_prop_low;
  SignedLog g_prop_gap;  // g[u_I(a_0) - u_I(a_1)]
};

TwoOfferTerms make_terms(const GameSpec& game) {
  TwoOfferTerms t;
  t.u_prop_low = eval_utility(game.utility_proposer, game.offers[1]);
  t.u_resp_low = eval_utility(game.utility_responder, game.total - game.offers[0]);
  t.u_resp_high = eval_utility(game.utility_responder, game.total - game.offers[1]);
  t.g_prop_low = eval_regret(game.regret, t.u_prop_low);
  const double u_prop_high = eval_utility(game.utility_proposer, game.offers[0]);
  t.g_prop_gap = eval_regret(game.regret, u_prop_high - t.u_prop_low);
  return t;
}

SignedLog kappa_product(const RegretSpec& regret, double u_low, double u_high) {
  if (regret.kind == RegretKind::Linear) return SignedLog::zero();
  const double half_beta = 2.0 * regret.beta;
  SignedLog k = SignedLog::from_ln(1, std::log(4.0));
  k *= slog_sinh((u_high - u_low) / half_beta);
  k *= slog_sinh(u_low / half_beta);
  k *= slog_sinh(u_high / half_beta);
  return k;
}

SignedLog kappa_additive(const RegretSpec& regret, double u_low, double u_high) {
  SignedLog k = -eval_regret(regret, u_low);
  k += eval_regret(regret, u_high);
  k -= eval_regret(regret, u_high - u_low);
  return k;
}

struct ClassifyCore {
  SignedLog margin;  // positive iff the responder forces a win
  SignedLog kap;
  SignedLog excess;  // g[u_II(A-a_0)] - g[u_I(a_1)]
  SignedLog pi_c;    // 1 + excess / kap; +-inf in the linear limit
};

ClassifyCore classify_core(const RegretSpec& regret, const TwoOfferTerms& t) {
  ClassifyCore c;
  const SignedLog g_resp_low = eval_regret(regret, t.u_resp_low);
  const SignedLog g_resp_high = eval_regret(regret, t.u_resp_high);
  const SignedLog g_resp_gap = eval_regret(regret, t.u_resp_high - t.u_resp_low);
  c.margin = t.g_prop_low - g_resp_high + g_resp_gap;
  c.kap = kappa_product(regret, t.u_resp_low, t.u_resp_high);
  c.excess = g_resp_low - t.g_prop_low;
  c.pi_c = SignedLog::from_double(1.0) + c.excess / c.kap;
  return c;
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

const char* to_string(TwoOfferWinner w) {
  switch (w) {
    case TwoOfferWinner::ResponderWins: return "ResponderWins";
    case TwoOfferWinner::ProposerWinsWithBound: return "ProposerWinsWithBound";
    case TwoOfferWinner::ProposerAlwaysWins: return "ProposerAlwaysWins";
  }
  return "?";
}

SignedLog kappa(const GameSpec& game) {
  if (game.offers.size() != 2)
    throw validation_error("two-offer analysis needs exactly two offers");
  // a_0 = a_1 is admitted here -- kappa extends continuously to 0 at the
  // collapsed pair; every other constraint still applies.
  GameSpec probe = game;
  if (probe.offers[0] == probe.offers[1]) probe.offers[1] *= 0.5;
  require_valid(probe);
  const TwoOfferTerms t = make_terms(game);
  const SignedLog prod = kappa_product(game.regret, t.u_resp_low, t.u_resp_high);
  const SignedLog add = kappa_additive(game.regret, t.u_resp_low, t.u_resp_high);
  // The additive route cancels to noise once kappa is small next to its
  // largest term; only compare where it still carries information.
  if (!prod.is_zero()) {
    const double biggest = eval_regret(game.regret, t.u_resp_high).log_abs();
    const double lost = biggest - prod.log_abs();
    const double rel = std::max(1e-9, 64.0 * std::numeric_limits<double>::epsilon() *
                                          std::exp(std::min(700.0, lost)));
    if (rel < 1.0 && !slog_close(prod, add, rel))
      throw degenerate_error("curvature terms disagree between evaluation routes");
  }
  return prod;
}

TwoOfferVerdict classify_two_offer(const GameSpec& game) {
  require_two_offers(game);
  const TwoOfferTerms t = make_terms(game);
  const ClassifyCore c = classify_core(game.regret, t);

  TwoOfferVerdict v;
  v.kappa = c.kap;
  v.pi_c = c.pi_c.to_double();
  if (c.margin.sign() > 0) {
    v.winner = TwoOfferWinner::ResponderWins;
    const SignedLog denom = c.margin + t.g_prop_gap;
    v.p0_bound = (c.margin / denom).to_double();
  } else if (v.pi_c >= 1.0) {
    v.winner = TwoOfferWinner::ProposerAlwaysWins;
  } else {
    v.winner = TwoOfferWinner::ProposerWinsWithBound;
  }
  return v;
}

double responder_p0_bound(const GameSpec& game) {
  const TwoOfferVerdict v = classify_two_offer(game);
  if (v.winner != TwoOfferWinner::ResponderWins)
    throw infeasible_error("acceptance bound exists only when the responder wins");
  return *v.p0_bound;
}

EUTwoOfferResult eu_two_offer_winner(const GameSpec& game) {
  require_two_offers(game);
  const double keep_low = eval_utility(game.utility_proposer, game.offers[1]);
  const double give_top = eval_utility(game.utility_responder, game.total - game.offers[0]);
  EUTwoOfferResult r;
  if (keep_low > give_top) {
    r.winner = TwoOfferWinner::ResponderWins;
  } else {
    // At equality pi_c sits exactly at 1, the closed edge of the always-wins
    // branch.
    r.winner = TwoOfferWinner::ProposerAlwaysWins;
    r.degenerate = (keep_low == give_top);
  }
  return r;
}

HeteroThresholds hetero_thresholds(const GameSpec& game) {
  require_two_offers(game);
  if (game.utility_proposer.kind != UtilityKind::Logarithmic ||
      game.utility_responder.kind != UtilityKind::Logarithmic)
    throw validation_error("thresholds need logarithmic utilities on both sides");
  const double ratio = game.utility_responder.gamma / game.utility_proposer.gamma;
  HeteroThresholds h;
  h.responder_wins_above = game.total / (1.0 + ratio);
  h.proposer_immune_below = (game.total - game.offers[0]) / ratio;
  return h;
}

double superfair_pi_c(const GameSpec& game) {
  require_two_offers(game);
  if (game.utility_proposer.kind != UtilityKind::Logarithmic ||
      game.utility_responder.kind != UtilityKind::Logarithmic)
    throw validation_error("superfair analysis needs logarithmic utilities");
  if (game.regret.kind != RegretKind::Sinh)
    throw validation_error("superfair analysis needs the curved regret");
  if (game.utility_responder.gamma < game.utility_proposer.gamma * (1.0 - 1e-12))
    throw validation_error("superfair analysis needs gamma_II >= gamma_I");
  const double a0 = game.offers[0];
  const double a1 = game.offers[1];
  if (std::abs(a1 - (game.total - a0)) > 1e-9 * game.total)
    throw validation_error("superfair analysis needs complementary offers a_1 = A - a_0");
  if (a0 < game.total / 2.0)
    throw validation_error("superfair analysis needs a_0 >= A/2");
  const TwoOfferTerms t = make_terms(game);
  return classify_core(game.regret, t).pi_c.to_double();
}

TwoOfferOptimum optimize_proposer_two(const GameSpec& base, double a1,
                                      bool utility_weighted) {
  const double total = base.total;
  if (!std::isfinite(a1) || a1 <= 0.0 || a1 >= total / 2.0)
    throw validation_error("fallback offer must sit in (0, A/2)");

  GameSpec probe = base;
  probe.offers = {total - a1, a1};
  require_valid(probe);

  const double u_prop_low = eval_utility(base.utility_proposer, a1);
  const double u_resp_high = eval_utility(base.utility_responder, total - a1);
  const SignedLog g_prop_low = eval_regret(base.regret, u_prop_low);

  const auto eval_point = [&](double a0) {
    const double u_resp_low = eval_utility(base.utility_responder, total - a0);
    const SignedLog g_resp_low = eval_regret(base.regret, u_resp_low);
    const SignedLog kap = kappa_product(base.regret, u_resp_low, u_resp_high);
    const SignedLog excess = g_resp_low - g_prop_low;
    const SignedLog pi_c = SignedLog::from_double(1.0) + excess / kap;
    const double weight = clamp01(pi_c.to_double());
    const double gain = utility_weighted
                            ? eval_utility(base.utility_proposer, a0) - u_prop_low
                            : a0 - a1;
    const double floor_term = utility_weighted ? u_prop_low : a1;
    return std::pair<double, double>(weight * gain + floor_term, pi_c.to_double());
  };

  const double lo = total - a1;
  const double hi = total - kEdgeGap;
  if (!(hi > lo)) throw validation_error("offer range collapsed; total too small");

  constexpr int kScan = 400;
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / (kScan - 1);
  for (int i = 0; i < kScan; ++i) {
    const double x = (i == kScan - 1) ? hi : lo + step * i;
    const double val = eval_point(x).first;
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }

  double a = (best == 0) ? lo : lo + step * (best - 1);
  double b = (best == kScan - 1) ? hi : lo + step * (best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval_point(c).first;
  double fd = eval_point(d).first;
  for (int it = 0; it < 200 && (b - a) > kGoldenTol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval_point(c).first;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval_point(d).first;
    }
  }

  TwoOfferOptimum out;
  out.a0 = 0.5 * (a + b);
  const auto [val, pic] = eval_point(out.a0);
  out.value = val;
  out.pi_c = pic;
  out.open_boundary = (hi - out.a0) <= 1e-6 * (hi - lo);
  return out;
}

}  // namespace regult
