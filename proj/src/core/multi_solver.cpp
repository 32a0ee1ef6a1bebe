#include "core/multi_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace regult {

namespace {

std::size_t resolution_from_h(double h) {
  if (!(h > 0.0) || h > 1.0)
    throw validation_error("grid step must lie in (0, 1]");
  const auto res = static_cast<std::size_t>(std::llround(1.0 / h));
  if (res < 1 || std::abs(static_cast<double>(res) * h - 1.0) > 1e-9)
    throw validation_error("grid step must divide 1");
  if (res > 65535) throw validation_error("grid resolution above 65535");
  return res;
}

// All splits of `rem` over slots [slot, arms), each coordinate ascending;
// calls visit() on every completed vector.
template <class Visit>
void enumerate_tail(std::uint16_t* counts, std::size_t arms, std::size_t slot,
                    std::size_t rem, Visit&& visit) {
  if (slot + 1 == arms) {
    counts[slot] = static_cast<std::uint16_t>(rem);
    visit();
    return;
  }
  for (std::size_t m = 0; m <= rem; ++m) {
    counts[slot] = static_cast<std::uint16_t>(m);
    enumerate_tail(counts, arms, slot + 1, rem - m, visit);
  }
}

// Multiples of `step` strictly inside (lo, hi), ascending.
std::vector<double> step_candidates(double lo, double hi, double step) {
  std::vector<double> xs;
  for (long k = static_cast<long>(std::floor(lo / step)) + 1;; ++k) {
    const double x = static_cast<double>(k) * step;
    if (x >= hi) break;
    if (x > lo) xs.push_back(x);
  }
  return xs;
}

void check_scan_params(const GameSpec& base, double a_last, double offer_step) {
  if (!std::isfinite(base.total) || base.total <= 0.0)
    throw validation_error("total at stake must be positive");
  if (!std::isfinite(a_last) || a_last <= 0.0 || a_last >= base.total)
    throw validation_error("fallback offer must sit in (0, A)");
  if (!std::isfinite(offer_step) || offer_step <= 0.0)
    throw validation_error("offer step must be positive");
}

}  // namespace

std::vector<double> WinningDomain::weights(std::size_t member) const {
  std::vector<double> w(arms_);
  const std::uint16_t* c = counts(member);
  for (std::size_t i = 0; i < arms_; ++i)
    w[i] = static_cast<double>(c[i]) / static_cast<double>(resolution_);
  return w;
}

bool WinningDomain::contains(const std::uint16_t* c) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::uint16_t* row = counts(mid);
    int cmp = 0;
    for (std::size_t i = 0; i < arms_; ++i) {
      if (row[i] != c[i]) {
        cmp = row[i] < c[i] ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return true;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

void WinningDomain::append(const std::uint16_t* counts) {
  counts_.insert(counts_.end(), counts, counts + arms_);
}

void WinningDomain::append(const WinningDomain& tail) {
  counts_.insert(counts_.end(), tail.counts_.begin(), tail.counts_.end());
}

std::size_t composition_count(std::size_t arms, std::size_t resolution) {
  if (arms == 0) return 0;
  long double r = 1.0L;
  for (std::size_t i = 1; i < arms; ++i) {
    r *= static_cast<long double>(resolution + i);
    r /= static_cast<long double>(i);
    if (r > 1e18L) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r + 0.5L);
}

WinningDomain winning_domain(const GameSpec& game, double h) {
  const GameEvaluator ev(game);
  const std::size_t arms = ev.arms();
  const std::size_t res = resolution_from_h(h);
  const std::size_t grid = composition_count(arms, res);
  if (grid > kMaxGridPoints)
    throw validation_error("strategy grid exceeds the point cap");

  // Chunked over the first weight; each chunk's block is already in
  // enumeration order, so ordered concatenation keeps the whole domain sorted.
  const std::size_t outer = res + 1;
  std::vector<WinningDomain> parts(
      std::min<std::size_t>(worker_count(), outer), WinningDomain(arms, res));
  parallel_chunks(outer, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    WinningDomain& local = parts[chunk];
    std::vector<std::uint16_t> counts(arms);
    std::vector<double> pi(arms);
    for (std::size_t m0 = begin; m0 < end; ++m0) {
      counts[0] = static_cast<std::uint16_t>(m0);
      enumerate_tail(counts.data(), arms, 1, res - m0, [&] {
        for (std::size_t i = 0; i < arms; ++i)
          pi[i] = static_cast<double>(counts[i]) / static_cast<double>(res);
        if (ev.winning(pi.data())) local.append(counts.data());
      });
    }
  });

  WinningDomain out(arms, res);
  out.set_grid_points(grid);
  for (const WinningDomain& p : parts) out.append(p);
  return out;
}

DomainOptimum max_mean_kept(const GameSpec& game, const WinningDomain& domain) {
  require_valid(game);
  if (game.offers.size() != domain.arms())
    throw validation_error("domain arm count does not match the game");
  DomainOptimum out;
  std::size_t arg = 0;
  const auto res = static_cast<double>(domain.resolution());
  for (std::size_t m = 0; m < domain.size(); ++m) {
    const std::uint16_t* c = domain.counts(m);
    double mean = 0.0;
    for (std::size_t i = 0; i < domain.arms(); ++i)
      mean += static_cast<double>(c[i]) * game.offers[i];
    mean /= res;
    if (!out.feasible || mean > out.value) {
      out.feasible = true;
      out.value = mean;
      arg = m;
    }
  }
  if (out.feasible) out.weights = domain.weights(arg);
  return out;
}

ProposerOptimum optimize_u1(const GameSpec& base, double a_last, double h,
                            double offer_step) {
  check_scan_params(base, a_last, offer_step);
  const std::size_t res = resolution_from_h(h);
  const std::vector<double> xs = step_candidates(a_last, base.total, offer_step);

  struct Best {
    bool feasible = false;
    double value = 0.0;
    double x = 0.0;
    std::size_t top_count = 0;
  };
  std::vector<Best> parts(std::max<std::size_t>(
      std::min<std::size_t>(worker_count(), xs.size()), 1));
  parallel_chunks(xs.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Best& best = parts[chunk];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const double x = xs[idx];
      GameSpec g = base;
      g.offers = {x, a_last};
      const GameEvaluator ev(g);
      for (std::size_t j = res; j >= 1; --j) {
        const double w = static_cast<double>(j) / static_cast<double>(res);
        const double pi[2] = {w, 1.0 - w};
        if (!ev.winning(pi)) continue;
        const double val =
            (x * static_cast<double>(j) + a_last * static_cast<double>(res - j)) /
            static_cast<double>(res);
        if (!best.feasible || val > best.value) best = {true, val, x, j};
        break;  // mean grows with the top weight; the first win is the best
      }
    }
  });

  Best merged;
  for (const Best& b : parts)
    if (b.feasible && (!merged.feasible || b.value > merged.value)) merged = b;
  if (!merged.feasible)
    throw infeasible_error("no winning mix for any top offer on the scan grid");

  ProposerOptimum out;
  const double w = static_cast<double>(merged.top_count) / static_cast<double>(res);
  out.value = merged.value;
  out.offers = {merged.x, a_last};
  out.weights = {w, 1.0 - w};
  return out;
}

ProposerOptimum optimize_u2(const GameSpec& base, double a_last, TripleMode mode,
                            std::optional<double> a0, double h, double offer_step) {
  check_scan_params(base, a_last, offer_step);
  const std::size_t res = resolution_from_h(h);

  std::vector<std::pair<double, double>> pairs;
  if (mode == TripleMode::FixedTop) {
    if (!a0 || !std::isfinite(*a0) || *a0 <= a_last || *a0 >= base.total)
      throw validation_error("pinned top offer must sit in (a_last, A)");
    for (double mid : step_candidates(a_last, *a0, offer_step))
      pairs.emplace_back(*a0, mid);
  } else {
    for (double top : step_candidates(a_last, base.total, offer_step))
      for (double mid : step_candidates(a_last, top, offer_step))
        pairs.emplace_back(top, mid);
  }

  struct Best {
    bool feasible = false;
    double value = 0.0;
    double x0 = 0.0, x1 = 0.0;
    std::uint16_t c[3] = {0, 0, 0};
  };
  std::vector<Best> parts(std::max<std::size_t>(
      std::min<std::size_t>(worker_count(), pairs.size()), 1));
  parallel_chunks(pairs.size(), [&](std::size_t chunk, std::size_t begin,
                                    std::size_t end) {
    Best& best = parts[chunk];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto [x0, x1] = pairs[idx];
      GameSpec g = base;
      g.offers = {x0, x1, a_last};
      const GameEvaluator ev(g);
      const auto fres = static_cast<double>(res);
      for (std::size_t m0 = 0; m0 <= res; ++m0) {
        for (std::size_t m1 = 0; m1 + m0 <= res; ++m1) {
          const std::size_t m2 = res - m0 - m1;
          const double mean = (static_cast<double>(m0) * x0 +
                               static_cast<double>(m1) * x1 +
                               static_cast<double>(m2) * a_last) /
                              fres;
          if (best.feasible && mean <= best.value) continue;
          const double pi[3] = {static_cast<double>(m0) / fres,
                                static_cast<double>(m1) / fres,
                                static_cast<double>(m2) / fres};
          if (!ev.winning(pi)) continue;
          best.feasible = true;
          best.value = mean;
          best.x0 = x0;
          best.x1 = x1;
          best.c[0] = static_cast<std::uint16_t>(m0);
          best.c[1] = static_cast<std::uint16_t>(m1);
          best.c[2] = static_cast<std::uint16_t>(m2);
        }
      }
    }
  });

  Best merged;
  for (const Best& b : parts)
    if (b.feasible && (!merged.feasible || b.value > merged.value)) merged = b;
  if (!merged.feasible)
    throw infeasible_error("no winning mix for any offer pair on the scan grid");

  ProposerOptimum out;
  out.value = merged.value;
  out.offers = {merged.x0, merged.x1, a_last};
  const auto fres = static_cast<double>(res);
  out.weights = {merged.c[0] / fres, merged.c[1] / fres, merged.c[2] / fres};
  return out;
}

}  // namespace regult
