/* C interface to the q-multiple-gamma library.
 *
 * All functions are thread safe; an evaluator handle is immutable after
 * creation and may be shared freely across threads.  Functions report
 * failure through qmg_status; a human-readable message for the most recent
 * failure on the calling thread is available from qmg_last_error_message().
 */
#ifndef QMG_QMG_H
#define QMG_QMG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmg_status {
  QMG_OK = 0,
  QMG_ERROR_ARGUMENT = 1,     /* invalid argument / configuration */
  QMG_ERROR_DOMAIN = 2,       /* input outside the operation's domain */
  QMG_ERROR_POLE = 3,         /* evaluation hit a pole of the function */
  QMG_ERROR_BUDGET = 4,       /* term or continuation budget exhausted */
  QMG_ERROR_CHECK_FAILED = 5  /* self-check found a violated invariant */
} qmg_status;

typedef enum qmg_method {
  QMG_METHOD_AUTO = 0,
  QMG_METHOD_PRODUCT = 1,     /* defining infinite product */
  QMG_METHOD_GAUSS = 2,       /* Gauss-type limit form */
  QMG_METHOD_EULER = 3,       /* Euler-type product form */
  QMG_METHOD_RECURRENCE = 4,  /* functional-equation continuation */
  QMG_METHOD_CLOSED = 5       /* exact finite product (integer argument) */
} qmg_method;

/* Opaque handle: base q plus precision budget. */
typedef struct qmg_evaluator qmg_evaluator;

typedef struct qmg_result {
  double value_re, value_im;
  double log_re, log_im;   /* factorwise-log branch; exp(log) == value */
  double tail_bound;       /* certified bound on the omitted log tail */
  long terms_used;
  int continuation_steps;
  int method;              /* qmg_method actually used */
} qmg_result;

/* q in (0, 1 - 1e-6], tol > 0, max_terms >= 1, max_continuation_steps >= 1.
 * On success *out owns a new evaluator; release with qmg_evaluator_destroy. */
qmg_status qmg_evaluator_create(double q, double tol, long max_terms,
                                int max_continuation_steps,
                                qmg_evaluator **out);
void qmg_evaluator_destroy(qmg_evaluator *ev);

/* G_r(z+1;q) for r >= 0.  QMG_METHOD_AUTO picks the exact closed form at
 * positive integer z+1, the defining product for Re z > 0, and recurrence
 * continuation otherwise. */
qmg_status qmg_evaluate(const qmg_evaluator *ev, int r, double z_re,
                        double z_im, qmg_method method, qmg_result *out);

/* Gamma(z+1;q). */
qmg_status qmg_qgamma(const qmg_evaluator *ev, double z_re, double z_im,
                      qmg_result *out);

/* [z] = (1 - q^z)/(1 - q). */
qmg_status qmg_qnumber(const qmg_evaluator *ev, double z_re, double z_im,
                       double *out_re, double *out_im);

/* d^{r+1}/dz^{r+1} log G_r(z+1;q) for real z >= 0, r >= 1. */
qmg_status qmg_log_deriv(const qmg_evaluator *ev, int r, double z,
                         double *out);

/* Runs the built-in invariant suite; emits one report line per invariant
 * family through fn (may be NULL).  Returns QMG_OK if every family passed,
 * QMG_ERROR_CHECK_FAILED otherwise (or an error status if an evaluation
 * itself failed). */
typedef void (*qmg_report_fn)(const char *line, void *user);
qmg_status qmg_self_check(const qmg_evaluator *ev, unsigned long long seed,
                          qmg_report_fn fn, void *user);

const char *qmg_status_name(qmg_status s);
const char *qmg_method_name(qmg_method m);

/* Message for the most recent failure on this thread ("" if none). */
const char *qmg_last_error_message(void);

#ifdef __cplusplus
}
#endif

#endif /* QMG_QMG_H */
