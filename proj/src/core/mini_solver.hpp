#pragma once

// Closed forms for the two-offer game: winner classification, the critical
// top-offer weight pi_c, the responder's acceptance bound, heterogeneous-
// utility thresholds, and the proposer's continuous offer optimization.

#include <optional>

#include "core/game_model.hpp"

namespace regult {

enum class TwoOfferWinner { ResponderWins, ProposerWinsWithBound, ProposerAlwaysWins };

const char* to_string(TwoOfferWinner w);

struct TwoOfferVerdict {
  TwoOfferWinner winner = TwoOfferWinner::ResponderWins;
  double pi_c = 0.0;                 // critical top-offer weight; +-inf at the linear limit
  std::optional<double> p0_bound;    // ResponderWins only
  SignedLog kappa;
};

// Curvature gap of the responder's regret terms; nonnegative, zero only in
// the linear limit.  Computed in product form, the additive route is kept as
// an internal cross-check.
SignedLog kappa(const GameSpec& game);

TwoOfferVerdict classify_two_offer(const GameSpec& game);

// Strict acceptance threshold: responder forcing works for p_0 below it.
double responder_p0_bound(const GameSpec& game);

struct EUTwoOfferResult {
  TwoOfferWinner winner = TwoOfferWinner::ResponderWins;
  bool degenerate = false;  // shares match exactly; boundary of both regimes
};

// Expected-utility limit of the two-offer classification.
EUTwoOfferResult eu_two_offer_winner(const GameSpec& game);

struct HeteroThresholds {
  double responder_wins_above;    // a_1 above this => responder side
  double proposer_immune_below;   // a_1 at or below this => pi_c >= 1
};

// Large-stakes thresholds for logarithmic utilities on both sides.
HeteroThresholds hetero_thresholds(const GameSpec& game);

// pi_c for the superfair split a_1 = A - a_0 <= A/2 under log utilities with
// gamma_II >= gamma_I; stays below 1 when the inequality is strict.
double superfair_pi_c(const GameSpec& game);

struct TwoOfferOptimum {
  double value = 0.0;
  double a0 = 0.0;
  double pi_c = 0.0;
  bool open_boundary = false;  // supremum chased toward a_0 -> A
};

// max over a_0 in [A - a_1, A) of clamp(pi_c) * (a_0 - a_1) + a_1, via a
// 400-point prescan and golden-section refinement to 1e-7 in a_0.  With
// utility_weighted the money gaps are replaced by proposer-utility gaps.
TwoOfferOptimum optimize_proposer_two(const GameSpec& base, double a1,
                                      bool utility_weighted = false);

}  // namespace regult
