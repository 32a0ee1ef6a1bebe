#pragma once

// Ultimatum game description: total at stake, kept amounts a_0 > ... > a_n,
// per-player utility curves and the regret transform applied to utility gaps.

#include <cstddef>
#include <string>
#include <vector>

#include "core/signed_log.hpp"

namespace regult {

enum class UtilityKind { Linear, Logarithmic };

struct UtilitySpec {
  UtilityKind kind = UtilityKind::Linear;
  double gamma = 1.0;  // saturation scale, Logarithmic only
};

enum class RegretKind { Linear, Sinh };

struct RegretSpec {
  RegretKind kind = RegretKind::Sinh;
  double beta = 1.0;  // regret temperature, Sinh only
};

struct GameSpec {
  double total = 0.0;           // A
  std::vector<double> offers;   // amounts the proposer keeps, strictly decreasing
  UtilitySpec utility_proposer;
  UtilitySpec utility_responder;
  RegretSpec regret;

  std::size_t top() const { return offers.empty() ? 0 : offers.size() - 1; }  // n
};

// u(x) for x >= 0; u(0) = 0, strictly increasing.
double eval_utility(const UtilitySpec& spec, double x);

// g[x]: odd, nondecreasing map applied to utility differences.  Returned in
// signed log-magnitude form; to_double() saturates to +-inf past range.
SignedLog eval_regret(const RegretSpec& spec, double x);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

// Structural check, never throws: A > a_0 > ... > a_n > 0, n >= 1,
// gamma > 0 for Logarithmic, beta > 0 for Sinh.
ValidationReport validate_game(const GameSpec& game);

// Throwing wrapper used by operations that require a valid game.
void require_valid(const GameSpec& game);

// Probability vector over offers.  Entries in [0,1]; sums within 1e-9 of 1
// are renormalized, anything further off is rejected.
class ProposerStrategy {
 public:
  ProposerStrategy() = default;
  explicit ProposerStrategy(std::vector<double> pi);

  const std::vector<double>& probs() const { return pi_; }
  double operator[](std::size_t i) const { return pi_[i]; }
  std::size_t size() const { return pi_.size(); }

 private:
  std::vector<double> pi_;
};

// Acceptance probabilities p_0 <= ... <= p_n with p_n pinned to 1.
class ResponderStrategy {
 public:
  ResponderStrategy() = default;
  explicit ResponderStrategy(std::vector<double> p);

  const std::vector<double>& probs() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }
  std::size_t size() const { return p_.size(); }

 private:
  std::vector<double> p_;
};

inline constexpr double kProbSumTolerance = 1e-9;

}  // namespace regult
