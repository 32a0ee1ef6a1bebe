/* C interface for the regret-theoretic ultimatum-game solver.
 *
 * Conventions: every function returns ru_status; results go to out
 * parameters.  On any failure the thread-local message from
 * ru_last_error() describes what went wrong.  Games are built with
 * ru_game_create plus setters and validated by the operations that
 * need validity (or explicitly via ru_game_validate).
 *
 * Magnitudes that can overflow a double (sinh regret at small beta)
 * are reported as ru_real: sign and natural-log magnitude are always
 * exact; value saturates to +-HUGE_VAL past double range.
 */

#ifndef REGRET_ULT_H
#define REGRET_ULT_H

#include <stddef.h>

#if defined(_WIN32)
#define RU_API __declspec(dllexport)
#else
#define RU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ru_status {
  RU_OK = 0,
  RU_ERR_NULL_ARGUMENT = 1,
  RU_ERR_INVALID_ARGUMENT = 2, /* bad strategy vector, index, or parameter */
  RU_ERR_VALIDATION = 3,       /* game violates its structural invariants */
  RU_ERR_INFEASIBLE = 4,       /* requested optimum/bound does not exist */
  RU_ERR_DEGENERATE = 5,       /* instance on a boundary where the quantity is undefined */
  RU_ERR_PARSE = 6,            /* malformed game JSON */
  RU_ERR_BUFFER_TOO_SMALL = 7,
  RU_ERR_INTERNAL = 8
} ru_status;

typedef enum ru_side { RU_SIDE_PROPOSER = 0, RU_SIDE_RESPONDER = 1 } ru_side;
typedef enum ru_utility_kind { RU_UTILITY_LINEAR = 0, RU_UTILITY_LOG = 1 } ru_utility_kind;
typedef enum ru_regret_kind { RU_REGRET_LINEAR = 0, RU_REGRET_SINH = 1 } ru_regret_kind;

typedef enum ru_two_offer_winner {
  RU_RESPONDER_WINS = 0,
  RU_PROPOSER_WINS_WITH_BOUND = 1,
  RU_PROPOSER_ALWAYS_WINS = 2
} ru_two_offer_winner;

typedef enum ru_eu_regime {
  RU_EU_TWO_OFFER_REDUCTION = 0,
  RU_EU_PROBABILISTIC_MIXING = 1,
  RU_EU_RESPONDER_WINS = 2
} ru_eu_regime;

/* Signed log-magnitude real: x = sign * exp(log_abs); sign is -1/0/+1,
 * log_abs is -HUGE_VAL when sign is 0.  value is the saturating double. */
typedef struct ru_real {
  double value;
  int sign;
  double log_abs;
} ru_real;

typedef struct ru_report {
  ru_real rho_responder; /* responder's regret of accepting vs rejecting */
  ru_real rho_proposer;  /* proposer's regret of the safe bottom offer vs the mix */
  ru_real delta;         /* rho_proposer - rho_responder */
} ru_report;

typedef struct ru_two_offer_verdict {
  int winner;       /* ru_two_offer_winner */
  double pi_c;      /* critical top-offer weight; +-inf in the linear-regret limit */
  int has_p0_bound; /* 1 only when winner == RU_RESPONDER_WINS */
  double p0_bound;
  ru_real kappa;
} ru_two_offer_verdict;

typedef struct ru_two_offer_optimum {
  double value;
  double a0;
  double pi_c;
  int open_boundary; /* supremum chased toward a0 -> A */
} ru_two_offer_optimum;

typedef struct ru_proposer_optimum {
  double value;
  size_t arm_count; /* 2 or 3 */
  double offers[4];
  double weights[4];
} ru_proposer_optimum;

typedef struct ru_game ru_game;
typedef struct ru_domain ru_domain;

/* Realized-outcome marker for ru_conditional_regret_responder. */
#define RU_REALIZED_REJECT (-1L)

RU_API const char* ru_status_str(ru_status s);
/* Message for the most recent failure on this thread; empty if none. */
RU_API const char* ru_last_error(void);

/* --- game lifecycle ----------------------------------------------------- */

/* Creates a game with sinh regret (beta = 1) and linear utilities; adjust
 * with the setters.  Offers are the proposer's kept amounts, descending. */
RU_API ru_status ru_game_create(double total, const double* offers, size_t n_offers,
                                ru_game** out);
RU_API ru_status ru_game_clone(const ru_game* game, ru_game** out);
RU_API void ru_game_free(ru_game* game);

RU_API ru_status ru_game_set_regret(ru_game* game, ru_regret_kind kind, double beta);
RU_API ru_status ru_game_set_utility(ru_game* game, ru_side side, ru_utility_kind kind,
                                     double gamma);

RU_API ru_status ru_game_total(const ru_game* game, double* out);
RU_API ru_status ru_game_offer_count(const ru_game* game, size_t* out);
RU_API ru_status ru_game_offers(const ru_game* game, double* buf, size_t cap);

/* RU_OK when the game passes validation; RU_ERR_VALIDATION otherwise with
 * the violation list in ru_last_error() (and in buf when given). */
RU_API ru_status ru_game_validate(const ru_game* game, char* buf, size_t cap);

RU_API ru_status ru_game_from_json(const char* text, ru_game** out);
/* Writes the JSON form.  *needed receives the full size including NUL;
 * RU_ERR_BUFFER_TOO_SMALL when cap is insufficient. */
RU_API ru_status ru_game_to_json(const ru_game* game, char* buf, size_t cap,
                                 size_t* needed);

/* --- evaluation --------------------------------------------------------- */

RU_API ru_status ru_utility_eval(const ru_game* game, ru_side side, double x, double* out);
RU_API ru_status ru_regret_eval(const ru_game* game, double x, ru_real* out);

/* pi and p are arrays of length ru_game_offer_count; pi sums to 1, p is
 * nondecreasing with p[n] = 1. */
RU_API ru_status ru_regret_responder(const ru_game* game, const double* pi,
                                     const double* p, ru_real* out);
RU_API ru_status ru_regret_proposer(const ru_game* game, const double* pi,
                                    const double* p, ru_real* out);
RU_API ru_status ru_delta_r(const ru_game* game, const double* pi, const double* p,
                            ru_report* out);

/* Regret of the accept plan given the reject lottery resolved to offer
 * `realized` (index), or RU_REALIZED_REJECT for no deal. */
RU_API ru_status ru_conditional_regret_responder(const ru_game* game, const double* pi,
                                                 long realized, ru_real* out);

/* Maximum of delta over the responder's step endpoints k = 1..n.
 * proposer_wins is 1 when delta is strictly negative (beyond ties) at
 * every endpoint. */
RU_API ru_status ru_max_delta_r(const ru_game* game, const double* pi,
                                ru_report* at_argmax, size_t* argmax_k,
                                int* proposer_wins);

/* --- two-offer closed forms --------------------------------------------- */

RU_API ru_status ru_kappa(const ru_game* game, ru_real* out);
RU_API ru_status ru_classify_two_offer(const ru_game* game, ru_two_offer_verdict* out);
RU_API ru_status ru_responder_p0_bound(const ru_game* game, double* out);
RU_API ru_status ru_eu_two_offer_winner(const ru_game* game, int* winner,
                                        int* degenerate);
/* Thresholds for logarithmic utilities on both sides: the responder wins
 * when the low offer exceeds the first value; pi_c >= 1 when it is at or
 * below the second. */
RU_API ru_status ru_hetero_thresholds(const ru_game* game, double* responder_wins_above,
                                      double* proposer_immune_below);
RU_API ru_status ru_superfair_pi_c(const ru_game* game, double* out);

/* Maximizes clamp(pi_c)*(a0 - a1) + a1 over a0 in [A - a1, A); the game's
 * offers are ignored, its utilities and regret are used.  With
 * utility_weighted != 0 money gaps become proposer-utility gaps. */
RU_API ru_status ru_optimize_two_offer(const ru_game* game, double a1,
                                       int utility_weighted, ru_two_offer_optimum* out);

/* --- winning domain and offer scans ------------------------------------- */

RU_API ru_status ru_winning_domain(const ru_game* game, double grid_step,
                                   ru_domain** out);
RU_API void ru_domain_free(ru_domain* domain);
RU_API ru_status ru_domain_arms(const ru_domain* domain, size_t* out);
RU_API ru_status ru_domain_resolution(const ru_domain* domain, size_t* out);
RU_API ru_status ru_domain_grid_points(const ru_domain* domain, size_t* out);
RU_API ru_status ru_domain_size(const ru_domain* domain, size_t* out);
RU_API ru_status ru_domain_member(const ru_domain* domain, size_t index, double* weights,
                                  size_t cap);
/* weights must sit on the domain grid (multiples of 1/resolution). */
RU_API ru_status ru_domain_contains(const ru_domain* domain, const double* weights,
                                    int* out);

/* Best mean kept amount over the domain members.  An empty domain is not an
 * error: *feasible is set to 0 and value/weights are left untouched. */
RU_API ru_status ru_domain_max_mean(const ru_game* game, const ru_domain* domain,
                                    int* feasible, double* value, double* weights,
                                    size_t cap);

/* Two-offer scan: top offer over multiples of offer_step in (a_last, A),
 * weight on the grid with step grid_step.  RU_ERR_INFEASIBLE when no
 * candidate wins anywhere. */
RU_API ru_status ru_optimize_u1(const ru_game* game, double a_last, double grid_step,
                                double offer_step, ru_proposer_optimum* out);

/* Three-offer scan; mode 0 scans both free offers, mode 1 pins the top
 * offer to a0 and scans the middle one. */
RU_API ru_status ru_optimize_u2(const ru_game* game, double a_last, int mode, double a0,
                                double grid_step, double offer_step,
                                ru_proposer_optimum* out);

/* --- expected-utility oracle -------------------------------------------- */

RU_API ru_status ru_eu_gap(const ru_game* game, const double* pi, const double* p,
                           double* out);
RU_API ru_status ru_eu_best_response(const ru_game* game, double* p, size_t cap,
                                     int* degenerate);
RU_API ru_status ru_eu_winning(const ru_game* game, const double* pi, int* out);
RU_API ru_status ru_eu_optimal_three(const ru_game* game, double* value, double* pi_c,
                                     int* regime);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REGRET_ULT_H */
