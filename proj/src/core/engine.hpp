#pragma once

// Pairwise regret functionals for proposer and responder, endpoint reduction,
// and the strict winning test.  All values are carried in signed log-magnitude
// form so sinh blowups stay representable; a cached double path covers the
// common scale range for grid scans.

#include <cstddef>
#include <optional>
#include <vector>

#include "core/game_model.hpp"

namespace regult {

struct RegretReport {
  SignedLog rho_responder;  // regret of accepting vs rejecting, for II
  SignedLog rho_proposer;   // regret of the safe bottom offer vs the mix, for I
  SignedLog delta;          // rho_proposer - rho_responder
};

// Responder reply that rejects the top k offers and accepts the rest.
struct EndpointStrategy {
  std::size_t k = 1;  // in [1, n]
  ResponderStrategy expand(std::size_t arm_count) const;
};

struct MaxDeltaResult {
  RegretReport at_argmax;
  EndpointStrategy argmax;
  bool proposer_wins = false;  // delta < 0 strictly, beyond ties, at every endpoint
};

class GameEvaluator {
 public:
  explicit GameEvaluator(const GameSpec& game);

  std::size_t arms() const { return arms_; }  // n + 1
  const GameSpec& game() const { return game_; }

  SignedLog rho_responder(const double* pi, const double* p) const;
  SignedLog rho_proposer(const double* pi, const double* p) const;
  RegretReport report(const double* pi, const double* p) const;
  RegretReport report_endpoint(const double* pi, std::size_t k) const;
  MaxDeltaResult max_delta(const double* pi) const;

  // |delta| within 1e-12 of the larger regret magnitude counts as a tie.
  static bool strictly_winning(const RegretReport& r);

  // Double-precision scan path, valid when every cached term fits the range.
  bool fast_ok() const { return fast_ok_; }
  double fast_delta_endpoint(const double* pi, std::size_t k) const;
  double fast_tie_eps() const { return fast_tie_eps_; }
  bool fast_winning(const double* pi) const;

  bool winning(const double* pi) const;  // fast path when possible, else exact

 private:
  GameSpec game_;
  std::size_t arms_;
  std::vector<double> u_resp_;        // u_II(A - a_k)
  std::vector<double> u_prop_;        // u_I(a_k)
  std::vector<SignedLog> g_resp_;     // g[u_II(A - a_k)]
  std::vector<SignedLog> g_pair_;     // g[uII_i - uII_j], i < j, row-major
  std::vector<SignedLog> g_prop_;     // g[uI_n - uI_i]
  SignedLog g_prop_last_;             // g[uI_n]

  bool fast_ok_ = false;
  double fast_tie_eps_ = 0.0;
  std::vector<double> f_resp_, f_pair_, f_prop_;
  double f_prop_last_ = 0.0;

  const SignedLog& pair(std::size_t i, std::size_t j) const {
    return g_pair_[i * arms_ + j];
  }
};

// Realized regret of the accept plan given the reject lottery resolved to
// outcome `realized` (an offer index, or nullopt for no deal).  Pure-regret
// split: only favorable gaps count, f[x] = g[x] for x > 0 and 0 otherwise.
SignedLog regret_conditional_responder(const GameSpec& game, const ProposerStrategy& pi,
                                       std::optional<std::size_t> realized);

SignedLog regret_diff_responder(const GameSpec& game, const ProposerStrategy& pi,
                                const ResponderStrategy& p);
SignedLog regret_diff_proposer(const GameSpec& game, const ProposerStrategy& pi,
                               const ResponderStrategy& p);
RegretReport delta_regret(const GameSpec& game, const ProposerStrategy& pi,
                          const ResponderStrategy& p);

// Max of delta over the monotone responder replies; by linearity in each p_k
// only the n step endpoints matter, and the all-accept reply is never positive.
MaxDeltaResult max_delta_regret(const GameSpec& game, const ProposerStrategy& pi);

}  // namespace regult
