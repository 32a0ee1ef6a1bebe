#include "core/game_model.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace regult {

double eval_utility(const UtilitySpec& spec, double x) {
  if (!(x >= 0.0)) throw std::domain_error("utility argument must be >= 0");
  switch (spec.kind) {
    case UtilityKind::Linear:
      return x;
    case UtilityKind::Logarithmic:
      if (!(spec.gamma > 0.0)) throw std::domain_error("log utility needs gamma > 0");
      return std::log1p(x / spec.gamma);
  }
  throw std::logic_error("unknown utility kind");
}

SignedLog eval_regret(const RegretSpec& spec, double x) {
  switch (spec.kind) {
    case RegretKind::Linear:
      return SignedLog::from_double(x);
    case RegretKind::Sinh:
      if (!(spec.beta > 0.0)) throw std::domain_error("sinh regret needs beta > 0");
      return slog_sinh(x / spec.beta);
  }
  throw std::logic_error("unknown regret kind");
}

std::string ValidationReport::joined() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

ValidationReport validate_game(const GameSpec& game) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& m) { rep.violations.push_back(m); };

  if (!(game.total > 0.0) || !std::isfinite(game.total)) fail("total must be finite and > 0");
  if (game.offers.size() < 2) fail("need at least two offers");
  for (std::size_t i = 0; i < game.offers.size(); ++i) {
    const double a = game.offers[i];
    if (!std::isfinite(a)) {
      fail("offer " + std::to_string(i) + " is not finite");
      continue;
    }
    if (!(a > 0.0)) fail("offer " + std::to_string(i) + " must be > 0");
    if (!(a < game.total)) fail("offer " + std::to_string(i) + " must be < total");
    if (i > 0 && !(game.offers[i - 1] > a))
      fail("offers must be strictly decreasing (violated at index " + std::to_string(i) + ")");
  }
  for (const auto* u : {&game.utility_proposer, &game.utility_responder}) {
    if (u->kind == UtilityKind::Logarithmic && !(u->gamma > 0.0))
      fail("log utility needs gamma > 0");
  }
  if (game.regret.kind == RegretKind::Sinh && !(game.regret.beta > 0.0))
    fail("sinh regret needs beta > 0");
  return rep;
}

void require_valid(const GameSpec& game) {
  const ValidationReport rep = validate_game(game);
  if (!rep.ok()) throw validation_error(rep.joined());
}

ProposerStrategy::ProposerStrategy(std::vector<double> pi) : pi_(std::move(pi)) {
  if (pi_.empty()) throw std::invalid_argument("empty proposer strategy");
  double sum = 0.0;
  for (double v : pi_) {
    if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12)
      throw std::invalid_argument("proposer strategy entries must lie in [0, 1]");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > kProbSumTolerance)
    throw std::invalid_argument("proposer strategy must sum to 1");
  for (double& v : pi_) v = std::min(1.0, std::max(0.0, v / sum));
}

ResponderStrategy::ResponderStrategy(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("empty responder strategy");
  double prev = 0.0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12)
      throw std::invalid_argument("responder strategy entries must lie in [0, 1]");
    if (v < prev - 1e-12)
      throw std::invalid_argument("responder strategy must be nondecreasing");
    prev = v;
  }
  if (std::fabs(p_.back() - 1.0) > kProbSumTolerance)
    throw std::invalid_argument("responder strategy must accept the last offer (p_n = 1)");
  for (double& v : p_) v = std::min(1.0, std::max(0.0, v));
  p_.back() = 1.0;
}

}  // namespace regult
