#include "qmg/qmg.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "altforms.hpp"
#include "qcore.hpp"
#include "qmultigamma.hpp"
#include "selfcheck.hpp"

struct qmg_evaluator {
  qmg::QParam qp;
  qmg::Precision prec;
};

namespace {

thread_local std::string t_last_error;

qmg_status fail(qmg_status s, const std::string& msg) {
  t_last_error = msg;
  return s;
}

int method_code(qmg::Method m) {
  switch (m) {
    case qmg::Method::product: return QMG_METHOD_PRODUCT;
    case qmg::Method::gauss: return QMG_METHOD_GAUSS;
    case qmg::Method::euler: return QMG_METHOD_EULER;
    case qmg::Method::recurrence: return QMG_METHOD_RECURRENCE;
    case qmg::Method::closed: return QMG_METHOD_CLOSED;
  }
  return QMG_METHOD_AUTO;
}

void fill(qmg_result* out, const qmg::EvalResult& r) {
  out->value_re = r.value.real();
  out->value_im = r.value.imag();
  out->log_re = r.log_value.real();
  out->log_im = r.log_value.imag();
  out->tail_bound = r.tail_bound;
  out->terms_used = r.terms_used;
  out->continuation_steps = r.continuation_steps;
  out->method = method_code(r.method);
}

template <typename Fn>
qmg_status guarded(Fn&& fn) {
  try {
    fn();
    return QMG_OK;
  } catch (const qmg::PoleError& e) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s (near z = %.17g%+.17gi)", e.what(),
                  e.location.real(), e.location.imag());
    return fail(QMG_ERROR_POLE, buf);
  } catch (const qmg::BudgetError& e) {
    return fail(QMG_ERROR_BUDGET, e.what());
  } catch (const qmg::DomainError& e) {
    return fail(QMG_ERROR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(QMG_ERROR_ARGUMENT, e.what());
  }
}

bool is_positive_integer(qmg::Complex z) {
  return z.imag() == 0.0 && z.real() >= 1.0 &&
         z.real() == std::floor(z.real());
}

// G_r(z+1;q) by the requested route.
qmg::EvalResult dispatch(const qmg_evaluator& ev, int r, qmg::Complex z,
                         qmg_method method) {
  if (r < 0) throw qmg::DomainError("r must be >= 0");
  if (method == QMG_METHOD_AUTO && r >= 1 && is_positive_integer(z + 1.0))
    method = QMG_METHOD_CLOSED;  // otherwise qmg() picks product/recurrence
  switch (method) {
    case QMG_METHOD_CLOSED: {
      if (r == 0) break;  // [z+1] is already closed form; use qmg()
      if (!is_positive_integer(z + 1.0))
        throw qmg::DomainError("closed form needs z+1 a positive integer");
      qmg::EvalResult res;
      double lg =
          qmg::log_qmg_integer_closed(r, std::lround(z.real()), ev.qp);
      res.log_value = qmg::Complex(lg, 0.0);
      res.value = std::exp(res.log_value);
      res.terms_used = std::lround(z.real());
      res.method = qmg::Method::closed;
      return res;
    }
    case QMG_METHOD_PRODUCT: {
      if (r == 0) break;
      qmg::LogProduct lp = qmg::log_qmg_product(r, z, ev.qp, ev.prec);
      qmg::EvalResult res;
      res.log_value = lp.log_sum;
      res.value = std::exp(lp.log_sum);
      res.terms_used = lp.terms_used;
      res.tail_bound = lp.tail_bound;
      res.method = qmg::Method::product;
      return res;
    }
    case QMG_METHOD_GAUSS: {
      if (r == 0) break;
      long n =
          qmg::truncation_length(r, z, ev.qp, ev.prec.tol, ev.prec.max_terms)
              .first;
      qmg::GaussPartial gp = qmg::qmg_gauss(r, z, ev.qp, n, ev.prec);
      qmg::EvalResult res;
      res.log_value = gp.log_value;
      res.value = gp.value;
      res.terms_used = gp.N;
      res.method = qmg::Method::gauss;
      return res;
    }
    case QMG_METHOD_EULER:
      if (r == 0) break;
      return qmg::qmg_euler(r, z, ev.qp, ev.prec);
    default:
      break;
  }
  return qmg::qmg(r, z + 1.0, ev.qp, ev.prec);
}

}  // namespace

extern "C" {

qmg_status qmg_evaluator_create(double q, double tol, long max_terms,
                                int max_continuation_steps,
                                qmg_evaluator** out) {
  if (!out) return fail(QMG_ERROR_ARGUMENT, "out must not be null");
  *out = nullptr;
  try {
    qmg::Precision prec{tol, max_terms, max_continuation_steps};
    prec.validate();
    *out = new qmg_evaluator{qmg::QParam(q), prec};
    return QMG_OK;
  } catch (const qmg::DomainError& e) {
    return fail(QMG_ERROR_ARGUMENT, e.what());
  }
}

void qmg_evaluator_destroy(qmg_evaluator* ev) { delete ev; }

qmg_status qmg_evaluate(const qmg_evaluator* ev, int r, double z_re,
                        double z_im, qmg_method method, qmg_result* out) {
  if (!ev || !out) return fail(QMG_ERROR_ARGUMENT, "null handle or output");
  return guarded([&] {
    fill(out, dispatch(*ev, r, qmg::Complex(z_re, z_im), method));
  });
}

qmg_status qmg_qgamma(const qmg_evaluator* ev, double z_re, double z_im,
                      qmg_result* out) {
  if (!ev || !out) return fail(QMG_ERROR_ARGUMENT, "null handle or output");
  return guarded([&] {
    fill(out, qmg::q_gamma(ev->qp, qmg::Complex(z_re, z_im), ev->prec));
  });
}

qmg_status qmg_qnumber(const qmg_evaluator* ev, double z_re, double z_im,
                       double* out_re, double* out_im) {
  if (!ev || !out_re || !out_im)
    return fail(QMG_ERROR_ARGUMENT, "null handle or output");
  qmg::Complex v = qmg::q_number(ev->qp, qmg::Complex(z_re, z_im));
  *out_re = v.real();
  *out_im = v.imag();
  return QMG_OK;
}

qmg_status qmg_log_deriv(const qmg_evaluator* ev, int r, double z,
                         double* out) {
  if (!ev || !out) return fail(QMG_ERROR_ARGUMENT, "null handle or output");
  return guarded([&] { *out = qmg::log_qmg_deriv(r, z, ev->qp, ev->prec); });
}

qmg_status qmg_self_check(const qmg_evaluator* ev, unsigned long long seed,
                          qmg_report_fn fn, void* user) {
  if (!ev) return fail(QMG_ERROR_ARGUMENT, "null handle");
  bool all_pass = true;
  qmg_status status = guarded([&] {
    for (const qmg::CheckResult& c : qmg::run_all_checks(seed, ev->prec)) {
      if (fn) {
        char buf[192];
        std::snprintf(buf, sizeof buf, "%-34s %s  residual %.3e  (limit %.0e)",
                      c.name.c_str(), c.pass ? "pass" : "FAIL",
                      c.max_residual, c.threshold);
        fn(buf, user);
      }
      all_pass = all_pass && c.pass;
    }
  });
  if (status != QMG_OK) return status;
  if (!all_pass)
    return fail(QMG_ERROR_CHECK_FAILED, "one or more invariants failed");
  return QMG_OK;
}

const char* qmg_status_name(qmg_status s) {
  switch (s) {
    case QMG_OK: return "ok";
    case QMG_ERROR_ARGUMENT: return "argument";
    case QMG_ERROR_DOMAIN: return "domain";
    case QMG_ERROR_POLE: return "pole";
    case QMG_ERROR_BUDGET: return "budget";
    case QMG_ERROR_CHECK_FAILED: return "check-failed";
  }
  return "?";
}

const char* qmg_method_name(qmg_method m) {
  switch (m) {
    case QMG_METHOD_AUTO: return "auto";
    case QMG_METHOD_PRODUCT: return "product";
    case QMG_METHOD_GAUSS: return "gauss";
    case QMG_METHOD_EULER: return "euler";
    case QMG_METHOD_RECURRENCE: return "recurrence";
    case QMG_METHOD_CLOSED: return "closed";
  }
  return "?";
}

const char* qmg_last_error_message(void) { return t_last_error.c_str(); }

}  // extern "C"
