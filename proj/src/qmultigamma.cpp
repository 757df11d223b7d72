#include "qmultigamma.hpp"

#include <cmath>
#include <limits>

#include "combinatorics.hpp"

namespace qmg {

namespace {

// Sum_{n>N} binom(n+a, b) q^n <= binom(N+1+a, b) q^{N+1} / (1 - R q) where
// R = (N+2+a)/(N+2+a-b) bounds every successive term ratio.  +inf while
// R q >= 1 (N still too small for the geometric closure).
double binom_geom_tail(int a, int b, long N, double q) {
  double top = static_cast<double>(N + 1 + a);
  if (top < 0.0) return 0.0;
  double ratio = b == 0 ? 1.0
                        : (top + 1.0) / (top + 1.0 - static_cast<double>(b));
  if (ratio * q >= 1.0) return std::numeric_limits<double>::infinity();
  return gen_binom(top, b) * std::pow(q, static_cast<double>(N + 1)) /
         (1.0 - ratio * q);
}

Complex log_one_minus_qpow(const QParam& qp, Complex w) {
  Complex u = q_pow(qp, w);
  Complex f = 1.0 - u;
  if (std::abs(f) < kPoleThreshold)
    throw PoleError("factor 1 - q^w vanishes", w);
  return std::log(f);
}

}  // namespace

double product_tail_bound(int r, Complex z, const QParam& qp, long N) {
  // |log(1-q^{z+n})| + |log(1-q^n)| <= 2 q^n / (1-q) for Re z >= 0, so the
  // ratio factor of the Definition contributes 2 binom(n+r-2, r-1) q^n;
  // |g_r(z,n)| <= sum_m |binom(z,r-m)| binom(n+m-2, m-1).
  double total = 2.0 * binom_geom_tail(r - 2, r - 1, N, qp.q);
  for (int m = 1; m <= r - 1; ++m)
    total += std::abs(gen_binom(z, r - m)) *
             binom_geom_tail(m - 2, m - 1, N, qp.q);
  return total / (1.0 - qp.q);
}

std::pair<long, double> truncation_length(int r, Complex z, const QParam& qp,
                                          double tol, long max_terms) {
  if (!(tol > 0.0)) throw DomainError("truncation_length: tol must be > 0");
  long hi = 16;
  while (product_tail_bound(r, z, qp, hi) > tol) {
    if (hi >= max_terms)
      throw BudgetError("truncation_length: no N <= max_terms reaches tol");
    hi = std::min(hi * 2, max_terms);
  }
  // Refine to the smallest certified N within the bracket.
  long lo = 1;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (product_tail_bound(r, z, qp, mid) <= tol)
      hi = mid;
    else
      lo = mid + 1;
  }
  return {hi, product_tail_bound(r, z, qp, hi)};
}

LogProduct log_qmg_product_at(int r, Complex z, const QParam& qp, long N) {
  if (r < 1) throw DomainError("log_qmg_product: r must be >= 1");
  double sign = (r % 2 == 0) ? 1.0 : -1.0;
  Complex log_sum = -gen_binom(z, r) * std::log(1.0 - qp.q);
  for (long n = 1; n <= N; ++n) {
    double c = sign * gen_binom(static_cast<double>(n + r - 2), r - 1);
    Complex lg_n =
        log_one_minus_qpow(qp, Complex(static_cast<double>(n), 0.0));
    Complex lg_zn = log_one_minus_qpow(qp, z + static_cast<double>(n));
    log_sum += c * (lg_zn - lg_n) +
               g_exponent(r, z, static_cast<int>(n)) * lg_n;
  }
  return {log_sum, N, product_tail_bound(r, z, qp, N)};
}

LogProduct log_qmg_product(int r, Complex z, const QParam& qp,
                           const Precision& prec) {
  if (z.real() < 0.0)
    throw DomainError("log_qmg_product: Re z must be >= 0");
  auto [n, bound] = truncation_length(r, z, qp, prec.tol, prec.max_terms);
  LogProduct lp = log_qmg_product_at(r, z, qp, n);
  lp.tail_bound = bound;
  return lp;
}

namespace {

// log G_r(z;q) with continuation bookkeeping; terms/steps/tail accumulate
// over every product evaluation performed.
Complex qmg_log(int r, Complex z, const QParam& qp, const Precision& prec,
                long& terms, int& steps, double& tail) {
  if (r == 0) {
    Complex v = q_number(qp, z);
    if (std::abs(v) < kPoleThreshold)
      throw PoleError("G_0(z;q) = [z] vanishes", z);
    return principal_log(v);
  }
  if (z.real() >= 1.0) {
    LogProduct lp = log_qmg_product(r, z - 1.0, qp, prec);
    terms += lp.terms_used;
    tail += lp.tail_bound;
    return lp.log_sum;
  }
  int k = static_cast<int>(std::ceil(1.0 - z.real()));
  steps += k;
  if (steps > prec.max_continuation_steps)
    throw BudgetError("qmg: continuation step budget exhausted");
  Complex log_val =
      qmg_log(r, z + static_cast<double>(k), qp, prec, terms, steps, tail);
  for (int j = 0; j < k; ++j) {
    Complex log_div =
        qmg_log(r - 1, z + static_cast<double>(j), qp, prec, terms, steps,
                tail);
    if (std::exp(log_div.real()) < kPoleThreshold)
      throw PoleError("qmg: divisor G_{r-1} vanishes (pole of G_r)",
                      z + static_cast<double>(j));
    log_val -= log_div;
  }
  return log_val;
}

}  // namespace

EvalResult qmg(int r, Complex z, const QParam& qp, const Precision& prec) {
  prec.validate();
  if (r < 0) throw DomainError("qmg: r must be >= 0");
  EvalResult res;
  if (r == 0) {
    res.value = q_number(qp, z);
    res.log_value = principal_log(res.value);
    res.method = Method::closed;
    return res;
  }
  long terms = 0;
  int steps = 0;
  double tail = 0.0;
  res.log_value = qmg_log(r, z, qp, prec, terms, steps, tail);
  res.value = std::exp(res.log_value);
  res.terms_used = terms;
  res.tail_bound = tail;
  res.continuation_steps = steps;
  res.method = steps == 0 ? Method::product : Method::recurrence;
  return res;
}

double log_qmg_integer_closed(int r, long N, const QParam& qp) {
  if (r < 1) throw DomainError("qmg_integer_closed: r must be >= 1");
  if (N < 0) throw DomainError("qmg_integer_closed: N must be >= 0");
  double log_val = -binom_nonneg(N, r) * std::log(1.0 - qp.q);
  for (long n = 1; n <= N; ++n)
    log_val += binom_nonneg(N - n, r - 1) *
               std::log1p(-std::exp(static_cast<double>(n) * qp.log_q));
  return log_val;
}

double qmg_integer_closed(int r, long N, const QParam& qp) {
  return std::exp(log_qmg_integer_closed(r, N, qp));
}

double log_qmg_deriv(int r, double z, const QParam& qp,
                     const Precision& prec) {
  prec.validate();
  if (r < 1) throw DomainError("log_qmg_deriv: r must be >= 1");
  if (z < 0.0) throw DomainError("log_qmg_deriv: z must be >= 0");
  const double a = -qp.log_q;
  const double scale = std::pow(a, r + 1);
  double r_fact = 1.0;
  for (int j = 2; j <= r; ++j) r_fact *= j;
  // sum_k k^r x^k <= r! x / (1-x)^{r+1}, so the tail beyond outer index N
  // is closed by the same polynomial-geometric machinery as the product.
  const double outer_c =
      r_fact * std::pow(qp.q, z) / std::pow(1.0 - qp.q, r + 1);

  double acc = 0.0;
  long budget = prec.max_terms;
  for (long n = 1;; ++n) {
    double x = std::exp((z + static_cast<double>(n)) * qp.log_q);
    double inner = 0.0;
    for (long k = 1;; ++k) {
      double term = std::pow(static_cast<double>(k), r) *
                    std::pow(x, static_cast<double>(k));
      inner += term;
      if (--budget <= 0)
        throw BudgetError("log_qmg_deriv: term budget exhausted");
      double ratio = x * std::pow((k + 1.0) / k, r);
      if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-17 * (1.0 + inner))
        break;
    }
    acc += gen_binom(static_cast<double>(n + r - 2), r - 1) * inner;
    double outer_tail = outer_c * binom_geom_tail(r - 2, r - 1, n, qp.q);
    if (outer_tail <= prec.tol * std::max(acc, 1e-300)) break;
    if (--budget <= 0)
      throw BudgetError("log_qmg_deriv: term budget exhausted");
  }
  return scale * acc;
}

}  // namespace qmg
