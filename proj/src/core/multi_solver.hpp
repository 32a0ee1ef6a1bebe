#pragma once

// Exhaustive search over the mixed-strategy grid: the winning domain, its
// best mean payoff, and offer-vector optimization for two and three offers.

#include <cstdint>
#include <optional>
#include <vector>

#include "core/game_model.hpp"

namespace regult {

// Winning proposer mixes with weights on {0, 1/M, ..., 1}.  Members are
// stored as integer counts (multiples of 1/M) in enumeration order: first
// weight ascending, then the second, and so on; that order is lexicographic,
// so membership is a binary search.
class WinningDomain {
 public:
  WinningDomain(std::size_t arms, std::size_t resolution)
      : arms_(arms), resolution_(resolution) {}

  std::size_t arms() const { return arms_; }
  std::size_t resolution() const { return resolution_; }    // M
  std::size_t grid_points() const { return grid_points_; }  // full grid size
  std::size_t size() const { return arms_ ? counts_.size() / arms_ : 0; }
  bool empty() const { return counts_.empty(); }

  const std::uint16_t* counts(std::size_t member) const {
    return counts_.data() + member * arms_;
  }
  std::vector<double> weights(std::size_t member) const;
  bool contains(const std::uint16_t* counts) const;

  void append(const std::uint16_t* counts);
  void append(const WinningDomain& tail);
  void set_grid_points(std::size_t g) { grid_points_ = g; }

 private:
  std::size_t arms_;
  std::size_t resolution_;
  std::size_t grid_points_ = 0;
  std::vector<std::uint16_t> counts_;
};

// Number of weight vectors with denominator M over `arms` slots; saturates
// at SIZE_MAX on overflow.
std::size_t composition_count(std::size_t arms, std::size_t resolution);

inline constexpr std::size_t kMaxGridPoints = 4'000'000;

// Enumerates every grid mix with denominator M = round(1/h) and keeps the
// winning ones.  h must divide 1 to within 1e-9; the full grid must stay
// under kMaxGridPoints.
WinningDomain winning_domain(const GameSpec& game, double h);

struct DomainOptimum {
  bool feasible = false;
  double value = 0.0;           // best mean kept amount
  std::vector<double> weights;  // argmax mix; empty when infeasible
};

// Maximizes sum_k pi_k a_k over the stored members.
DomainOptimum max_mean_kept(const GameSpec& game, const WinningDomain& domain);

struct ProposerOptimum {
  double value = 0.0;
  std::vector<double> offers;   // chosen kept amounts, high to low
  std::vector<double> weights;  // winning mix attaining value
};

// Two offers (x, a_last): x scans multiples of offer_step inside
// (a_last, A); per x the best winning grid weight on the top offer.
// Throws infeasible_error when no candidate wins anywhere.
ProposerOptimum optimize_u1(const GameSpec& base, double a_last, double h = 0.01,
                            double offer_step = 1.0);

enum class TripleMode { Full, FixedTop };

// Three offers (x0, x1, a_last), mean kept amount maximized over winning
// grid mixes.  Full scans both free offers; FixedTop pins x0 to `a0` and
// scans only the middle offer.  Throws infeasible_error when nothing wins.
ProposerOptimum optimize_u2(const GameSpec& base, double a_last, TripleMode mode,
                            std::optional<double> a0 = std::nullopt, double h = 0.01,
                            double offer_step = 1.0);

}  // namespace regult
