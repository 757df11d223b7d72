#include "qcore.hpp"

#include <cmath>

namespace qmg {

const char* method_name(Method m) {
  switch (m) {
    case Method::product: return "product";
    case Method::gauss: return "gauss";
    case Method::euler: return "euler";
    case Method::recurrence: return "recurrence";
    case Method::closed: return "closed";
  }
  return "?";
}

Complex q_pow(const QParam& qp, Complex z) {
  return std::exp(z * qp.log_q);
}

Complex q_number(const QParam& qp, Complex z) {
  return (1.0 - q_pow(qp, z)) / (1.0 - qp.q);
}

Complex principal_log(Complex v) {
  if (v == Complex(0.0, 0.0))
    throw DomainError("principal_log of zero");
  return std::log(v);
}

namespace {

// log(1 - q^w) with w in the right half plane, |q^w| < 1 so the argument
// stays in the disk around 1 and the principal branch is continuous.
Complex log_one_minus_qpow(const QParam& qp, Complex w) {
  Complex u = q_pow(qp, w);
  if (std::abs(1.0 - u) < kPoleThreshold)
    throw PoleError("factor 1 - q^w vanishes", w);
  return std::log(1.0 - u);
}

// Smallest N with (q^{Re z} + 1) q^{N+1} / (1-q)^2 <= tol; this majorizes
// the omitted |log factor| tail of the section-3 product.
long qgamma_trunc_n(const QParam& qp, double re_z, double tol, long max_terms,
                    double* bound_out) {
  double c = (std::pow(qp.q, re_z) + 1.0) / ((1.0 - qp.q) * (1.0 - qp.q));
  double n_real = std::log(tol / c) / qp.log_q - 1.0;
  long n = n_real <= 1.0 ? 1 : static_cast<long>(std::ceil(n_real));
  if (n > max_terms)
    throw BudgetError("q_gamma: no N <= max_terms certifies tol");
  *bound_out = c * std::pow(qp.q, static_cast<double>(n + 1));
  return n;
}

// log Gamma(z+1;q) for Re z > -1 by direct factorwise summation.
EvalResult qgamma_product(const QParam& qp, Complex z, const Precision& prec) {
  EvalResult res;
  double bound = 0.0;
  long n_terms = qgamma_trunc_n(qp, z.real(), prec.tol, prec.max_terms, &bound);
  Complex log_sum = -z * std::log(1.0 - qp.q);
  for (long n = 1; n <= n_terms; ++n) {
    log_sum -= log_one_minus_qpow(qp, z + static_cast<double>(n)) -
               log_one_minus_qpow(qp, Complex(static_cast<double>(n), 0.0));
  }
  res.log_value = log_sum;
  res.value = std::exp(log_sum);
  res.terms_used = n_terms;
  res.tail_bound = bound;
  res.method = Method::product;
  return res;
}

}  // namespace

EvalResult q_gamma(const QParam& qp, Complex z, const Precision& prec) {
  prec.validate();
  if (z.real() > 0.0 || z == Complex(0.0, 0.0))
    return qgamma_product(qp, z, prec);

  // Gamma(z+1;q) = Gamma(z+k+1;q) / ([z+1][z+2]...[z+k]), k minimal with
  // Re z + k > 0.
  int k = static_cast<int>(std::floor(-z.real())) + 1;
  if (k > prec.max_continuation_steps)
    throw BudgetError("q_gamma: continuation step budget exhausted");
  EvalResult res = qgamma_product(qp, z + static_cast<double>(k), prec);
  for (int j = 1; j <= k; ++j) {
    Complex d = q_number(qp, z + static_cast<double>(j));
    if (std::abs(d) < kPoleThreshold)
      throw PoleError("q_gamma: pole of the continued function",
                      z + static_cast<double>(j));
    res.log_value -= principal_log(d);
  }
  res.value = std::exp(res.log_value);
  res.method = Method::recurrence;
  res.continuation_steps = k;
  return res;
}

}  // namespace qmg
