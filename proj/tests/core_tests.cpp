#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/eu_oracle.hpp"
#include "core/game_model.hpp"
#include "core/json_io.hpp"
#include "core/signed_log.hpp"
#include "test_support.hpp"

using namespace regult;
using testutil::make_game;
using testutil::make_linear_game;

// ---------------------------------------------------------------------------
// Signed log-magnitude scalars.

TEST_CASE("signed log: construction and round trips") {
  CHECK(SignedLog::zero().is_zero());
  CHECK(SignedLog::zero().to_double() == 0.0);
  CHECK(SignedLog::from_double(0.0).is_zero());

  for (double v : {1.0, -1.0, 3.5e-12, -2.75e14, 123.456}) {
    const SignedLog s = SignedLog::from_double(v);
    CHECK(s.to_double() == doctest::Approx(v).epsilon(1e-15));
    CHECK(s.sign() == (v > 0 ? 1 : -1));
  }

  // Magnitudes past double range stay finite on the log scale.
  const SignedLog big = SignedLog::from_ln(1, 800.0);
  CHECK(big.log_abs() == 800.0);
  CHECK(std::isinf(big.to_double()));
  CHECK(SignedLog::from_ln(-1, 900.0).to_double() < 0.0);
}

TEST_CASE("signed log: field arithmetic") {
  const SignedLog a = SignedLog::from_double(3.0);
  const SignedLog b = SignedLog::from_double(-7.5);
  CHECK((a + b).to_double() == doctest::Approx(-4.5).epsilon(1e-15));
  CHECK((a - b).to_double() == doctest::Approx(10.5).epsilon(1e-15));
  CHECK((a * b).to_double() == doctest::Approx(-22.5).epsilon(1e-15));
  CHECK((a / b).to_double() == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK(a.scaled(2.0).to_double() == doctest::Approx(6.0));
  CHECK(a.scaled(0.0).is_zero());
  CHECK((-a).to_double() == doctest::Approx(-3.0));
  CHECK(a.abs().to_double() == doctest::Approx(3.0));

  // Exact cancellation collapses to the zero element.
  CHECK((a - a).is_zero());
  CHECK((a + (-a)).is_zero());

  // Division by zero saturates; 0/0 is defined as 0.
  const SignedLog z = SignedLog::zero();
  CHECK((a / z).log_abs() == std::numeric_limits<double>::infinity());
  CHECK(((-a) / z).sign() == -1);
  CHECK((z / z).is_zero());
  CHECK((z / a).is_zero());
  CHECK((z * a).is_zero());

  SignedLog acc = a;
  acc += b;
  acc -= b;
  acc *= b;
  acc /= b;
  CHECK(acc.to_double() == doctest::Approx(3.0).epsilon(1e-12));

  // Adding magnitudes far beyond double range works on the log scale.
  const SignedLog huge1 = SignedLog::from_ln(1, 800.0);
  const SignedLog huge2 = SignedLog::from_ln(1, 801.0);
  const SignedLog sum = huge1 + huge2;
  CHECK(sum.log_abs() == doctest::Approx(801.0 + std::log1p(std::exp(-1.0))));
  CHECK((huge2 - huge1).sign() == 1);
  CHECK((huge1 - huge2).sign() == -1);
}

TEST_CASE("signed log: ordering") {
  const SignedLog a = SignedLog::from_double(-2.0);
  const SignedLog b = SignedLog::from_double(0.5);
  const SignedLog c = SignedLog::from_double(4.0);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c > a);
  CHECK(a <= a);
  CHECK(c >= b);
  CHECK(SignedLog::zero() < b);
  CHECK(a < SignedLog::zero());
}

TEST_CASE("ln_sinh: branch agreement and slog_sinh oddness") {
  // The implementation switches formulas near 0.5; both must agree there.
  for (double z : {1e-8, 0.1, 0.499, 0.5, 0.501, 1.0, 30.0, 700.0, 5000.0}) {
    const double reference =
        z < 30 ? std::log(std::sinh(z)) : z - std::log(2.0) + std::log1p(-std::exp(-2 * z));
    CHECK(ln_sinh(z) == doctest::Approx(reference).epsilon(1e-13));
  }
  for (double x : {-3.0, -0.2, 0.0, 0.2, 3.0, 900.0}) {
    const SignedLog pos = slog_sinh(x);
    const SignedLog neg = slog_sinh(-x);
    CHECK(pos.sign() == -neg.sign());
    if (!pos.is_zero()) CHECK(pos.log_abs() == neg.log_abs());
  }
  CHECK(slog_sinh(0.0).is_zero());
}

// ---------------------------------------------------------------------------
// Game model: utilities, regret function, validation, strategies.

TEST_CASE("utility evaluation") {
  UtilitySpec lin;  // defaults to linear
  CHECK(eval_utility(lin, 7.25) == 7.25);
  CHECK(eval_utility(lin, 0.0) == 0.0);

  UtilitySpec lg{UtilityKind::Logarithmic, 2.0};
  CHECK(eval_utility(lg, 2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  UtilitySpec lg1{UtilityKind::Logarithmic, 1.0};
  CHECK(eval_utility(lg1, std::exp(1.0) - 1.0) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(eval_utility(lin, -0.5), std::domain_error);
  UtilitySpec bad{UtilityKind::Logarithmic, 0.0};
  CHECK_THROWS_AS(eval_utility(bad, 1.0), std::domain_error);
}

TEST_CASE("regret function evaluation") {
  RegretSpec sinh1{RegretKind::Sinh, 1.0};
  CHECK(eval_regret(sinh1, 1.0).to_double() ==
        doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
  RegretSpec lin{RegretKind::Linear, 0.0};
  CHECK(eval_regret(lin, -3.25).to_double() == doctest::Approx(-3.25));
  CHECK(eval_regret(lin, 0.0).is_zero());

  // Odd in x for both kinds.
  for (double x : {0.3, 2.0, 40.0}) {
    CHECK(eval_regret(sinh1, -x).to_double() ==
          doctest::Approx(-eval_regret(sinh1, x).to_double()));
    CHECK(eval_regret(lin, -x).to_double() == -eval_regret(lin, x).to_double());
  }

  // Blowup range: sinh(2000) overflows double but stays finite on log scale.
  RegretSpec tight{RegretKind::Sinh, 0.01};
  const SignedLog g = eval_regret(tight, 20.0);
  CHECK(g.sign() == 1);
  CHECK(g.log_abs() == doctest::Approx(2000.0 - std::log(2.0)).epsilon(1e-12));

  RegretSpec bad{RegretKind::Sinh, 0.0};
  CHECK_THROWS_AS(eval_regret(bad, 1.0), std::domain_error);
}

TEST_CASE("sinh regret scale limit matches linear") {
  // beta * g(x) -> x as beta grows: the expected-utility limit.
  RegretSpec wide{RegretKind::Sinh, 1e6};
  for (double x : {-5.0, -0.01, 0.5, 5.0}) {
    CHECK(std::abs(1e6 * eval_regret(wide, x).to_double() - x) < 1e-6 * std::abs(x));
  }
}

TEST_CASE("game validation") {
  GameSpec good = make_game(100.0, {70.0, 40.0}, 10.0);
  CHECK(validate_game(good).ok());
  CHECK_NOTHROW(require_valid(good));

  GameSpec unordered = make_game(100.0, {40.0, 70.0}, 10.0);
  const ValidationReport rep = validate_game(unordered);
  CHECK_FALSE(rep.ok());
  CHECK(rep.joined().find("decreasing") != std::string::npos);
  CHECK_THROWS_AS(require_valid(unordered), validation_error);

  CHECK_FALSE(validate_game(make_game(100.0, {100.0, 40.0}, 10.0)).ok());  // a_0 = A
  CHECK_FALSE(validate_game(make_game(100.0, {70.0, 0.0}, 10.0)).ok());    // a_n = 0
  CHECK_FALSE(validate_game(make_game(100.0, {70.0}, 10.0)).ok());         // single offer
  CHECK_FALSE(validate_game(make_game(100.0, {70.0, 40.0}, 0.0)).ok());    // beta = 0
  CHECK_FALSE(validate_game(make_game(0.0, {70.0, 40.0}, 1.0)).ok());      // A = 0

  GameSpec bad_gamma = make_game(100.0, {70.0, 40.0}, 10.0);
  bad_gamma.utility_responder = {UtilityKind::Logarithmic, -1.0};
  CHECK_FALSE(validate_game(bad_gamma).ok());

  // Multiple violations are all reported.
  GameSpec awful = make_game(-1.0, {40.0, 70.0}, -2.0);
  CHECK(validate_game(awful).violations.size() >= 3);
}

TEST_CASE("proposer strategy normalization") {
  ProposerStrategy ok({0.25, 0.75});
  CHECK(ok[0] == doctest::Approx(0.25));

  // A sum within 1e-9 of 1 is renormalized to exactly 1.
  ProposerStrategy near({0.5, 0.5 + 4e-10});
  double sum = 0.0;
  for (double w : near.probs()) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(ProposerStrategy({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(ProposerStrategy({1.2, -0.2}), std::invalid_argument);
  CHECK_THROWS_AS(ProposerStrategy(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("responder strategy constraints") {
  CHECK_NOTHROW(ResponderStrategy({0.0, 0.5, 1.0}));
  CHECK_NOTHROW(ResponderStrategy({1.0, 1.0}));
  CHECK_THROWS_AS(ResponderStrategy({0.5, 0.2, 1.0}), std::invalid_argument);  // decreasing
  CHECK_THROWS_AS(ResponderStrategy({0.0, 0.5}), std::invalid_argument);       // p_n != 1
  CHECK_THROWS_AS(ResponderStrategy({-0.1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ResponderStrategy(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
  GameSpec g = make_game(100.0, {96.0, 60.0, 43.0}, 10.0);
  g.utility_proposer = {UtilityKind::Logarithmic, 2.0};
  const std::string text = game_to_json(g);
  const GameSpec back = game_from_json(text);
  CHECK(back.total == g.total);
  CHECK(back.offers == g.offers);
  CHECK(back.regret.kind == RegretKind::Sinh);
  CHECK(back.regret.beta == 10.0);
  CHECK(back.utility_proposer.kind == UtilityKind::Logarithmic);
  CHECK(back.utility_proposer.gamma == 2.0);
  CHECK(back.utility_responder.kind == UtilityKind::Linear);
  // Serialization is canonical: a second pass is byte-identical.
  CHECK(game_to_json(back) == text);

  const GameSpec lin = game_from_json(game_to_json(make_linear_game(1.0, {0.6, 0.4})));
  CHECK(lin.regret.kind == RegretKind::Linear);
}

TEST_CASE("JSON parse errors and laxness") {
  CHECK_THROWS_AS(game_from_json("{nope"), validation_error);
  CHECK_THROWS_WITH_AS(game_from_json("[1,2]"), "game JSON must be an object",
                       validation_error);
  CHECK_THROWS_AS(game_from_json(R"({"offers":[70,40],"beta":10})"), validation_error);
  CHECK_THROWS_AS(game_from_json(R"({"A":100,"beta":10})"), validation_error);
  CHECK_THROWS_AS(game_from_json(R"({"A":100,"offers":[70,40]})"), validation_error);
  CHECK_THROWS_AS(
      game_from_json(R"({"A":100,"offers":[70,40],"beta":10,"regret":"linear"})"),
      validation_error);
  CHECK_THROWS_AS(game_from_json(R"({"A":100,"offers":[70,40],"regret":"cubic"})"),
                  validation_error);
  CHECK_THROWS_AS(
      game_from_json(R"({"A":100,"offers":[70,40],"beta":10,"u_proposer":{"kind":"log"}})"),
      validation_error);

  // Parsing is structural only; semantic checks live in validate_game.
  const GameSpec unordered = game_from_json(R"({"A":100,"offers":[40,70],"beta":10})");
  CHECK_FALSE(validate_game(unordered).ok());
}

// ---------------------------------------------------------------------------
// Regret engine.

TEST_CASE("conditional responder regret") {
  // Comparing the realized outcome against itself gives zero regret.
  GameSpec g3 = make_game(100.0, {90.0, 60.0, 40.0}, 10.0);
  CHECK(regret_conditional_responder(g3, ProposerStrategy({0.0, 0.0, 1.0}), 2).is_zero());

  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  CHECK(regret_conditional_responder(g, ProposerStrategy({1.0, 0.0}), 0).is_zero());
  CHECK(regret_conditional_responder(g, ProposerStrategy({0.5, 0.5}), std::nullopt)
            .to_double() == doctest::Approx(45.0).epsilon(1e-12));

  CHECK_THROWS_AS(regret_conditional_responder(g, ProposerStrategy({0.5, 0.5}), 2),
                  std::invalid_argument);
}

TEST_CASE("responder regret functional") {
  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  const ProposerStrategy pi({0.5, 0.5});
  CHECK(regret_diff_responder(g, pi, ResponderStrategy({1.0, 1.0})).is_zero());
  CHECK(regret_diff_responder(g, pi, ResponderStrategy({0.0, 1.0})).to_double() ==
        doctest::Approx(15.0).epsilon(1e-12));
  // Cross-check through expected utilities: EU(acc) - EU(rej) = 45 - 30.
  const double eu_acc = 0.5 * 1.0 * 30.0 + 0.5 * 1.0 * 60.0;
  const double eu_rej = 0.5 * 0.0 * 30.0 + 0.5 * 1.0 * 60.0;
  CHECK(eu_acc - eu_rej == doctest::Approx(15.0));

  CHECK_THROWS_AS(regret_diff_responder(g, ProposerStrategy({1.0}), ResponderStrategy({0.0, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("proposer regret functional") {
  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  CHECK(regret_diff_proposer(g, ProposerStrategy({0.0, 1.0}), ResponderStrategy({1.0, 1.0}))
            .is_zero());
  CHECK(regret_diff_proposer(g, ProposerStrategy({0.5, 0.5}), ResponderStrategy({0.0, 1.0}))
            .to_double() == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("delta report composition and all-accept sign") {
  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  const RegretReport rep =
      delta_regret(g, ProposerStrategy({0.5, 0.5}), ResponderStrategy({0.0, 1.0}));
  CHECK(rep.delta.to_double() == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(rep.rho_proposer.to_double() == doctest::Approx(20.0));
  CHECK(rep.rho_responder.to_double() == doctest::Approx(15.0));

  // Against all-accept the responder has zero regret and the proposer at most
  // zero, for any mix and either regret kind.
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    const std::size_t arms = 2 + it % 3;
    GameSpec game = make_game(10.0, testutil::rand_offers(rng, arms, 10.0, 0.3),
                              0.5 + 0.1 * it);
    if (it % 2) game.regret = {RegretKind::Linear, 0.0};
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const ResponderStrategy ones(std::vector<double>(arms, 1.0));
    const RegretReport r = delta_regret(game, pi, ones);
    // 1 - sum(p_i pi_i) carries rounding residue for random mixes, so the
    // responder regret is only zero up to the regret scale.
    double gscale = 1.0;
    for (double a : game.offers) {
      const double u = eval_utility(game.utility_responder, game.total - a);
      gscale = std::max(gscale, std::abs(eval_regret(game.regret, u).to_double()));
    }
    CHECK(std::abs(r.rho_responder.to_double()) <= 1e-12 * gscale);
    CHECK(r.delta.sign() <= 0);
  }
}

TEST_CASE("two-offer linear game: responder wins for any greedy mass") {
  // a_0 + a_1 > A makes the best reply beat every mix with pi_0 > 0; the
  // advantage grows linearly with the greedy mass.
  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  for (double pi0 : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const double pi[2] = {pi0, 1.0 - pi0};
    const MaxDeltaResult res = max_delta_regret(g, ProposerStrategy({pi[0], pi[1]}));
    CHECK(res.at_argmax.delta.to_double() == doctest::Approx(10.0 * pi0).epsilon(1e-12));
    CHECK_FALSE(res.proposer_wins);
  }
}

TEST_CASE("endpoint maximization basics") {
  GameSpec g = make_game(100.0, {70.0, 40.0}, 10.0);
  const MaxDeltaResult res = max_delta_regret(g, ProposerStrategy({0.3, 0.7}));
  CHECK(res.argmax.k == 1);  // n = 1: single candidate endpoint

  // All mass on the bottom offer: zero delta everywhere, a tie, not a win.
  GameSpec g3 = make_game(100.0, {90.0, 60.0, 40.0}, 10.0);
  const MaxDeltaResult safe = max_delta_regret(g3, ProposerStrategy({0.0, 0.0, 1.0}));
  CHECK(safe.at_argmax.delta.sign() <= 0);
  CHECK_FALSE(safe.proposer_wins);
}

TEST_CASE("endpoint strategy expansion") {
  const EndpointStrategy e{2};
  const ResponderStrategy p = e.expand(4);
  CHECK(p.probs() == std::vector<double>{0.0, 0.0, 1.0, 1.0});
}

TEST_CASE("endpoint max equals monotone p-grid max") {
  // Delta is affine in each acceptance probability, so the maximum over the
  // monotone p-polytope sits at an endpoint.  200 random games, grid 0.05.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> beta_d(0.5, 20.0);
  std::uniform_int_distribution<int> arms_d(2, 5);
  for (int it = 0; it < 200; ++it) {
    const std::size_t arms = arms_d(rng);
    GameSpec g = make_game(10.0, testutil::rand_offers(rng, arms, 10.0, 0.3), beta_d(rng));
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const MaxDeltaResult res = max_delta_regret(g, pi);
    // Polytope vertices are the step replies k = 0..n; the reduction skips the
    // never-positive all-accept vertex (k = 0), so fold it back in here.
    const std::vector<double> ones(arms, 1.0);
    const double endpoint_max =
        std::max(res.at_argmax.delta.to_double(),
                 GameEvaluator(g).report(pi.probs().data(), ones.data()).delta.to_double());

    GameEvaluator ev(g);
    double grid_max = -std::numeric_limits<double>::infinity();
    std::vector<double> p(arms, 1.0);
    // Enumerate nondecreasing vectors on the 0.05 grid with p_n = 1.
    const int steps = 20;
    auto sweep = [&](auto&& self, std::size_t slot, int floor) -> void {
      if (slot + 1 == arms) {
        grid_max = std::max(grid_max,
                            ev.report(pi.probs().data(), p.data()).delta.to_double());
        return;
      }
      for (int lvl = floor; lvl <= steps; ++lvl) {
        p[slot] = lvl / double(steps);
        self(self, slot + 1, lvl);
      }
    };
    sweep(sweep, 0, 0);
    const double slack = 1e-9 * std::max(1.0, std::abs(endpoint_max));
    CHECK(grid_max <= endpoint_max + slack);
    CHECK(grid_max >= endpoint_max - slack);  // endpoints are grid members
  }
}

TEST_CASE("delta is affine in each acceptance probability") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> beta_d(0.5, 10.0);
  for (int it = 0; it < 60; ++it) {
    const std::size_t arms = 2 + it % 3;
    GameSpec g = make_game(10.0, testutil::rand_offers(rng, arms, 10.0, 0.3), beta_d(rng));
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const std::size_t k = it % (arms - 1);
    std::vector<double> p = testutil::rand_monotone_p(rng, arms, false);
    const double lo = (k == 0) ? 0.0 : p[k - 1];
    const double hi = p[k + 1];
    GameEvaluator ev(g);
    auto delta_at = [&](double t) {
      p[k] = t;
      return ev.report(pi.probs().data(), p.data()).delta.to_double();
    };
    const double d0 = delta_at(lo), d1 = delta_at(0.5 * (lo + hi)), d2 = delta_at(hi);
    CHECK(d1 == doctest::Approx(0.5 * (d0 + d2))
                    .epsilon(1e-9)
                    .scale(std::max(1.0, std::abs(d0) + std::abs(d2))));
  }
}

TEST_CASE("linear-regret engine equals expected-utility differences") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 80; ++it) {
    const std::size_t arms = 2 + it % 3;
    GameSpec g = make_linear_game(10.0, testutil::rand_offers(rng, arms, 10.0, 0.2));
    if (it % 3 == 0) g.utility_responder = {UtilityKind::Logarithmic, 1.5};
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const ResponderStrategy p(testutil::rand_monotone_p(rng, arms, false));
    const double delta = delta_regret(g, pi, p).delta.to_double();
    const double gap = eu_regret_gap(g, pi, p);
    CHECK(std::abs(delta + gap) < 1e-9);
  }
}

TEST_CASE("large-beta sign agreement with the linear limit") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 60; ++it) {
    const std::size_t arms = 2 + it % 3;
    const double total = 10.0;
    auto offers = testutil::rand_offers(rng, arms, total, 0.3);
    GameSpec lin = make_linear_game(total, offers);
    GameSpec wide = make_game(total, offers, 1e6 * total);
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const ResponderStrategy p(testutil::rand_monotone_p(rng, arms, false));
    const double dlin = delta_regret(lin, pi, p).delta.to_double();
    if (std::abs(dlin) <= 1e-6) continue;
    CHECK(delta_regret(wide, pi, p).delta.sign() == (dlin > 0 ? 1 : -1));
  }
}

TEST_CASE("responder regret is positive under stochastic dominance") {
  // Rejection is dominated whenever anything worse than full acceptance has
  // mass: spot check here, full 500-instance suite in the acceptance runner.
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> beta_d(0.5, 20.0);
  for (int it = 0; it < 60; ++it) {
    const std::size_t arms = 2 + it % 3;
    GameSpec g = make_game(10.0, testutil::rand_offers(rng, arms, 10.0, 0.3), beta_d(rng));
    if (it % 2) g.regret = {RegretKind::Linear, 0.0};
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const ResponderStrategy p(testutil::rand_monotone_p(rng, arms, true));
    if (p[0] >= 1.0) continue;
    CHECK(regret_diff_responder(g, pi, p).sign() == 1);
  }
}

TEST_CASE("fast scan path agrees with the exact route") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> beta_d(1.0, 30.0);
  for (int it = 0; it < 50; ++it) {
    const std::size_t arms = 2 + it % 2;
    GameSpec g = make_game(100.0, testutil::rand_offers(rng, arms, 100.0, 2.0), beta_d(rng));
    GameEvaluator ev(g);
    if (!ev.fast_ok()) continue;
    const auto pi = testutil::rand_full_support_pi(rng, arms);
    bool exact_win = true;
    for (std::size_t k = 1; k < arms; ++k) {
      const RegretReport r = ev.report_endpoint(pi.data(), k);
      exact_win = exact_win && GameEvaluator::strictly_winning(r);
      CHECK(ev.fast_delta_endpoint(pi.data(), k) ==
            doctest::Approx(r.delta.to_double())
                .epsilon(1e-9)
                .scale(std::max(1.0, std::abs(r.delta.to_double()))));
    }
    CHECK(ev.winning(pi.data()) == exact_win);
  }
}

// ---------------------------------------------------------------------------
// Expected-utility oracle.

TEST_CASE("eu gap hand values") {
  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  CHECK(eu_regret_gap(g, ProposerStrategy({0.5, 0.5}), ResponderStrategy({0.0, 1.0})) ==
        doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(eu_regret_gap(g, ProposerStrategy({0.5, 0.5}), ResponderStrategy({1.0, 1.0})) ==
        doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("eu best response") {
  GameSpec g = make_linear_game(100.0, {70.0, 40.0});
  const EUBestResponse r = eu_best_response(g);
  CHECK(r.p.probs() == std::vector<double>{0.0, 1.0});
  CHECK_FALSE(r.degenerate_tie);

  GameSpec g3 = make_linear_game(100.0, {96.0, 60.0, 43.0});
  CHECK(eu_best_response(g3).p.probs() == std::vector<double>{0.0, 0.0, 1.0});

  // An offer keeping exactly A/2 is a matter of indifference; we keep it
  // accepted and flag the tie.
  GameSpec tie = make_linear_game(100.0, {60.0, 50.0, 40.0});
  const EUBestResponse rt = eu_best_response(tie);
  CHECK(rt.degenerate_tie);
  CHECK(rt.p.probs() == std::vector<double>{0.0, 1.0, 1.0});
}

TEST_CASE("eu best response minimizes the gap") {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 50; ++it) {
    const std::size_t arms = 2 + it % 3;
    GameSpec g = make_linear_game(10.0, testutil::rand_offers(rng, arms, 10.0, 0.2));
    const ProposerStrategy pi(testutil::rand_full_support_pi(rng, arms));
    const double best = eu_regret_gap(g, pi, eu_best_response(g).p);
    // Endpoints plus a 0.05 grid over a single varying component.
    for (std::size_t k = 1; k <= arms - 1; ++k) {
      const ResponderStrategy endpoint = EndpointStrategy{k}.expand(arms);
      CHECK(best <= eu_regret_gap(g, pi, endpoint) + 1e-12);
    }
    std::vector<double> p = testutil::rand_monotone_p(rng, arms, false);
    CHECK(best <= eu_regret_gap(g, pi, ResponderStrategy(p)) + 1e-12);
  }
}

TEST_CASE("eu winning condition") {
  GameSpec lose = make_linear_game(100.0, {70.0, 40.0});
  CHECK_FALSE(eu_winning_condition(lose, ProposerStrategy({0.3, 0.7})));
  CHECK_FALSE(eu_winning_condition(lose, ProposerStrategy({0.0, 1.0})));  // gap = 0 tie

  GameSpec win = make_linear_game(100.0, {55.0, 40.0});
  CHECK(eu_winning_condition(win, ProposerStrategy({1.0, 0.0})));
  CHECK_FALSE(eu_winning_condition(win, ProposerStrategy({0.0, 1.0})));
}

TEST_CASE("three-offer closed form") {
  GameSpec g = make_linear_game(100.0, {96.0, 49.0, 43.0});
  const EUOptimum opt = eu_optimal_three(g);
  CHECK(opt.regime == EURegime::ProbabilisticMixing);
  CHECK(opt.pi_c == doctest::Approx(1.0 - 39.0 / 45.0).epsilon(1e-12));
  CHECK(opt.value ==
        doctest::Approx((2.0 / 15.0) * 53.0 + (13.0 / 15.0) * 6.0 + 43.0).epsilon(1e-12));
  CHECK(opt.pi_c >= 0.0);
  CHECK(opt.pi_c <= 1.0);

  // a_0 + a_2 <= A: the middle offer adds nothing, mass goes to the top.
  GameSpec red = make_linear_game(100.0, {55.0, 48.0, 43.0});
  const EUOptimum r = eu_optimal_three(red);
  CHECK(r.regime == EURegime::TwoOfferReduction);
  CHECK(r.pi_c == 1.0);
  CHECK(r.value == doctest::Approx(55.0));

  CHECK_THROWS_AS(eu_optimal_three(make_linear_game(100.0, {70.0, 40.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(eu_optimal_three(make_game(100.0, {96.0, 49.0, 43.0}, 10.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(eu_optimal_three(make_linear_game(100.0, {49.0, 45.0, 43.0})),
                  std::invalid_argument);
}
