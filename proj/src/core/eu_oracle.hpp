#pragma once

// Expected-utility limit of the regret comparison (linear g).  Serves as an
// independent oracle for the engine and provides the closed-form three-offer
// optimum in the a_0 > A/2 > a_1 > a_2 regime.

#include "core/engine.hpp"
#include "core/game_model.hpp"

namespace regult {

// rho_II - rho_I in the linear-regret limit:
//   sum_{l<n} pi_l [ p_l uI(a_l) + (1-p_l) uII(A-a_l) - uI(a_n) ].
double eu_regret_gap(const GameSpec& game, const ProposerStrategy& pi,
                     const ResponderStrategy& p);

struct EUBestResponse {
  ResponderStrategy p;
  bool degenerate_tie = false;  // some offer sits exactly at the accept/reject border
};

// Gap-minimizing responder reply: reject offers whose kept share beats the
// returned share in utility, accept the rest; the bottom offer stays accepted.
EUBestResponse eu_best_response(const GameSpec& game);

// True when the proposer's mix keeps a positive gap against the best response.
bool eu_winning_condition(const GameSpec& game, const ProposerStrategy& pi);

enum class EURegime { TwoOfferReduction, ProbabilisticMixing, ResponderWins };

struct EUOptimum {
  double value = 0.0;  // proposer mean utility at the optimum
  double pi_c = 0.0;   // optimal mass on the top offer (rest on the middle one)
  EURegime regime = EURegime::TwoOfferReduction;
};

// Closed-form optimum for three offers with a_0 > A/2 > a_1 > a_2.
EUOptimum eu_optimal_three(const GameSpec& game);

}  // namespace regult
