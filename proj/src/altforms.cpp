#include "altforms.hpp"

#include <cmath>

#include "combinatorics.hpp"

namespace qmg {

namespace {

// log G_s(k;q) for integer k >= 1 via the closed form (s >= 1) or log [k]
// (s = 0).
double log_g_integer(int s, long k, const QParam& qp) {
  if (s == 0)
    return std::log(q_number(qp, Complex(static_cast<double>(k), 0.0)).real());
  return log_qmg_integer_closed(s, k - 1, qp);
}

// Tail of the Gauss correction beyond level N, from the polynomial-weighted
// geometric estimate in the convergence proof:
//   q^N sum_{m=1}^{r} |binom(z,m)| q / (1-q)^{r-m+2}.
double gauss_tail_coeff(int r, Complex z, const QParam& qp) {
  double c = 0.0;
  for (int m = 1; m <= r; ++m)
    c += std::abs(gen_binom(z, m)) * qp.q /
         std::pow(1.0 - qp.q, r - m + 2);
  return c;
}

}  // namespace

GaussPartial qmg_gauss(int r, Complex z, const QParam& qp, long N,
                       const Precision& prec) {
  if (r < 1) throw DomainError("qmg_gauss: r must be >= 1");
  if (N < 1) throw DomainError("qmg_gauss: N must be >= 1");
  Complex log_val(0.0, 0.0);
  for (long k = 1; k <= N; ++k) {
    log_val += log_g_integer(r - 1, k, qp);
    log_val -= qmg(r - 1, z + static_cast<double>(k), qp, prec).log_value;
  }
  for (int m = 1; m <= r; ++m)
    log_val += gen_binom(z, m) * log_g_integer(r - m, N + 1, qp);
  GaussPartial gp;
  gp.N = N;
  gp.log_value = log_val;
  gp.value = std::exp(log_val);
  return gp;
}

EvalResult qmg_euler(int r, Complex z, const QParam& qp,
                     const Precision& prec) {
  prec.validate();
  if (r < 1) throw DomainError("qmg_euler: r must be >= 1");
  if (z.real() < 0.0) throw DomainError("qmg_euler: Re z must be >= 0");

  double c = gauss_tail_coeff(r, z, qp);
  long n_terms = 1;
  if (c > 0.0) {
    double n_real = std::log(prec.tol / c) / qp.log_q;
    if (n_real > 1.0) n_terms = static_cast<long>(std::ceil(n_real));
    if (n_terms > prec.max_terms)
      throw BudgetError("qmg_euler: no N <= max_terms certifies tol");
  }

  Complex log_val(0.0, 0.0);
  for (long n = 1; n <= n_terms; ++n) {
    Complex factor = Complex(log_g_integer(r - 1, n, qp), 0.0) -
                     qmg(r - 1, z + static_cast<double>(n), qp, prec).log_value;
    for (int m = 1; m <= r; ++m)
      factor += gen_binom(z, m) * (log_g_integer(r - m, n + 1, qp) -
                                   log_g_integer(r - m, n, qp));
    log_val += factor;
  }

  EvalResult res;
  res.log_value = log_val;
  res.value = std::exp(log_val);
  res.terms_used = n_terms;
  res.tail_bound = c * std::pow(qp.q, static_cast<double>(n_terms));
  res.method = Method::euler;
  return res;
}

}  // namespace qmg
