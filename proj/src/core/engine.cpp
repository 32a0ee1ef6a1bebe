#include "core/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace regult {

namespace {

constexpr double kTieRel = 1e-12;
constexpr double kLnTieRel = -27.631021115928547;  // ln(1e-12)
// Fast path requires every cached g below exp(600); sums of <= ~50 such terms
// stay clear of double overflow.
constexpr double kFastLnLimit = 600.0;

void check_len(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + " length does not match offer count");
}

}  // namespace

ResponderStrategy EndpointStrategy::expand(std::size_t arm_count) const {
  std::vector<double> p(arm_count, 1.0);
  for (std::size_t i = 0; i < k && i < arm_count; ++i) p[i] = 0.0;
  return ResponderStrategy(p);
}

GameEvaluator::GameEvaluator(const GameSpec& game) : game_(game) {
  require_valid(game_);
  arms_ = game_.offers.size();
  const std::size_t n = arms_ - 1;

  u_resp_.resize(arms_);
  u_prop_.resize(arms_);
  for (std::size_t k = 0; k < arms_; ++k) {
    u_resp_[k] = eval_utility(game_.utility_responder, game_.total - game_.offers[k]);
    u_prop_[k] = eval_utility(game_.utility_proposer, game_.offers[k]);
  }

  g_resp_.resize(arms_);
  g_pair_.assign(arms_ * arms_, SignedLog::zero());
  g_prop_.resize(arms_);
  for (std::size_t k = 0; k < arms_; ++k) {
    g_resp_[k] = eval_regret(game_.regret, u_resp_[k]);
    g_prop_[k] = eval_regret(game_.regret, u_prop_[n] - u_prop_[k]);
    for (std::size_t j = k + 1; j < arms_; ++j)
      g_pair_[k * arms_ + j] = eval_regret(game_.regret, u_resp_[k] - u_resp_[j]);
  }
  g_prop_last_ = eval_regret(game_.regret, u_prop_[n]);

  fast_ok_ = true;
  double bound = 0.0;
  auto take = [&](const SignedLog& v, double& dst) {
    if (v.log_abs() > kFastLnLimit) fast_ok_ = false;
    dst = v.to_double();
    bound += std::fabs(dst);
  };
  f_resp_.resize(arms_);
  f_pair_.assign(arms_ * arms_, 0.0);
  f_prop_.resize(arms_);
  for (std::size_t k = 0; k < arms_; ++k) {
    take(g_resp_[k], f_resp_[k]);
    take(g_prop_[k], f_prop_[k]);
    for (std::size_t j = k + 1; j < arms_; ++j)
      take(g_pair_[k * arms_ + j], f_pair_[k * arms_ + j]);
  }
  take(g_prop_last_, f_prop_last_);
  // Scanner tie margin: 4x the per-point rule applied to a scale upper bound,
  // so the exact route never rejects a point the scan admitted.
  fast_tie_eps_ = 4.0 * kTieRel * bound;
}

SignedLog GameEvaluator::rho_responder(const double* pi, const double* p) const {
  double accept_mass = 0.0;
  for (std::size_t i = 0; i < arms_; ++i) accept_mass += p[i] * pi[i];
  const double rej = 1.0 - accept_mass;

  SignedLog mean_g;
  for (std::size_t i = 0; i < arms_; ++i) mean_g += g_resp_[i].scaled(pi[i]);
  SignedLog out = mean_g.scaled(rej);
  for (std::size_t i = 0; i < arms_; ++i) {
    if (pi[i] == 0.0) continue;
    for (std::size_t j = i + 1; j < arms_; ++j)
      out += pair(i, j).scaled((p[j] - p[i]) * pi[i] * pi[j]);
  }
  return out;
}

SignedLog GameEvaluator::rho_proposer(const double* pi, const double* p) const {
  double accept_mass = 0.0;
  SignedLog out;
  for (std::size_t i = 0; i < arms_; ++i) {
    accept_mass += p[i] * pi[i];
    out += g_prop_[i].scaled(p[i] * pi[i]);
  }
  out += g_prop_last_.scaled(1.0 - accept_mass);
  return out;
}

RegretReport GameEvaluator::report(const double* pi, const double* p) const {
  RegretReport r;
  r.rho_responder = rho_responder(pi, p);
  r.rho_proposer = rho_proposer(pi, p);
  r.delta = r.rho_proposer - r.rho_responder;
  return r;
}

RegretReport GameEvaluator::report_endpoint(const double* pi, std::size_t k) const {
  double tail = 0.0;  // accept mass of the step reply
  for (std::size_t i = k; i < arms_; ++i) tail += pi[i];
  const double rej = 1.0 - tail;

  RegretReport r;
  SignedLog mean_g;
  for (std::size_t i = 0; i < arms_; ++i) mean_g += g_resp_[i].scaled(pi[i]);
  SignedLog rho2 = mean_g.scaled(rej);
  for (std::size_t i = 0; i < k; ++i) {
    if (pi[i] == 0.0) continue;
    for (std::size_t j = k; j < arms_; ++j) rho2 += pair(i, j).scaled(pi[i] * pi[j]);
  }
  r.rho_responder = rho2;

  SignedLog rho1;
  for (std::size_t i = k; i < arms_; ++i) rho1 += g_prop_[i].scaled(pi[i]);
  rho1 += g_prop_last_.scaled(rej);
  r.rho_proposer = rho1;

  r.delta = r.rho_proposer - r.rho_responder;
  return r;
}

bool GameEvaluator::strictly_winning(const RegretReport& r) {
  if (r.delta.sign() >= 0) return false;
  const double scale = std::max(r.rho_responder.log_abs(), r.rho_proposer.log_abs());
  return r.delta.log_abs() > scale + kLnTieRel;
}

MaxDeltaResult GameEvaluator::max_delta(const double* pi) const {
  MaxDeltaResult res;
  res.proposer_wins = true;
  bool first = true;
  for (std::size_t k = 1; k < arms_; ++k) {
    RegretReport r = report_endpoint(pi, k);
    if (!strictly_winning(r)) res.proposer_wins = false;
    if (first || r.delta > res.at_argmax.delta) {
      res.at_argmax = r;
      res.argmax.k = k;
      first = false;
    }
  }
  return res;
}

double GameEvaluator::fast_delta_endpoint(const double* pi, std::size_t k) const {
  double tail = 0.0;
  for (std::size_t i = k; i < arms_; ++i) tail += pi[i];
  const double rej = 1.0 - tail;

  double mean_g = 0.0;
  for (std::size_t i = 0; i < arms_; ++i) mean_g += f_resp_[i] * pi[i];
  double rho2 = rej * mean_g;
  for (std::size_t i = 0; i < k; ++i) {
    if (pi[i] == 0.0) continue;
    double acc = 0.0;
    for (std::size_t j = k; j < arms_; ++j) acc += f_pair_[i * arms_ + j] * pi[j];
    rho2 += pi[i] * acc;
  }

  double rho1 = rej * f_prop_last_;
  for (std::size_t i = k; i < arms_; ++i) rho1 += f_prop_[i] * pi[i];
  return rho1 - rho2;
}

bool GameEvaluator::fast_winning(const double* pi) const {
  for (std::size_t k = 1; k < arms_; ++k)
    if (!(fast_delta_endpoint(pi, k) < -fast_tie_eps_)) return false;
  return true;
}

bool GameEvaluator::winning(const double* pi) const {
  if (fast_ok_) return fast_winning(pi);
  return max_delta(pi).proposer_wins;
}

SignedLog regret_conditional_responder(const GameSpec& game, const ProposerStrategy& pi,
                                       std::optional<std::size_t> realized) {
  require_valid(game);
  check_len(pi.size(), game.offers.size(), "proposer strategy");
  if (realized && *realized >= game.offers.size())
    throw std::invalid_argument("realized offer index out of range");

  const double u_have =
      realized ? eval_utility(game.utility_responder, game.total - game.offers[*realized]) : 0.0;
  SignedLog out;
  for (std::size_t l = 0; l < pi.size(); ++l) {
    const double gap =
        eval_utility(game.utility_responder, game.total - game.offers[l]) - u_have;
    if (gap > 0.0) out += eval_regret(game.regret, gap).scaled(pi[l]);
  }
  return out;
}

SignedLog regret_diff_responder(const GameSpec& game, const ProposerStrategy& pi,
                                const ResponderStrategy& p) {
  GameEvaluator ev(game);
  check_len(pi.size(), ev.arms(), "proposer strategy");
  check_len(p.size(), ev.arms(), "responder strategy");
  return ev.rho_responder(pi.probs().data(), p.probs().data());
}

SignedLog regret_diff_proposer(const GameSpec& game, const ProposerStrategy& pi,
                               const ResponderStrategy& p) {
  GameEvaluator ev(game);
  check_len(pi.size(), ev.arms(), "proposer strategy");
  check_len(p.size(), ev.arms(), "responder strategy");
  return ev.rho_proposer(pi.probs().data(), p.probs().data());
}

RegretReport delta_regret(const GameSpec& game, const ProposerStrategy& pi,
                          const ResponderStrategy& p) {
  GameEvaluator ev(game);
  check_len(pi.size(), ev.arms(), "proposer strategy");
  check_len(p.size(), ev.arms(), "responder strategy");
  return ev.report(pi.probs().data(), p.probs().data());
}

MaxDeltaResult max_delta_regret(const GameSpec& game, const ProposerStrategy& pi) {
  GameEvaluator ev(game);
  check_len(pi.size(), ev.arms(), "proposer strategy");
  return ev.max_delta(pi.probs().data());
}

}  // namespace regult
