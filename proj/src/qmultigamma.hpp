#ifndef QMG_QMULTIGAMMA_HPP
#define QMG_QMULTIGAMMA_HPP

#include <utility>

#include "qcore.hpp"

namespace qmg {

// Accumulated principal-branch log of a truncated product.  tail_bound is a
// rigorous upper bound on the absolute value of the sum of omitted
// log-factors.
struct LogProduct {
  Complex log_sum;
  long terms_used = 0;
  double tail_bound = 0.0;
};

// Upper bound on the tail of the defining product of G_r(z+1;q) beyond
// term N: each omitted |log-factor| is majorized by a polynomial-weighted
// geometric term, and the sum is closed by a ratio bound.  Valid for
// Re z >= 0.
double product_tail_bound(int r, Complex z, const QParam& qp, long N);

// Smallest N (doubling search from 16, then refined) whose tail bound is
// <= tol.  Returns {N, bound at N}.  BudgetError if no N <= max_terms works.
std::pair<long, double> truncation_length(int r, Complex z, const QParam& qp,
                                          double tol, long max_terms);

// log G_r(z+1;q) by the defining product, truncated at a fixed N.
LogProduct log_qmg_product_at(int r, Complex z, const QParam& qp, long N);

// Same, with N chosen by truncation_length for prec.tol.  Requires
// Re z >= 0 and r >= 1.
LogProduct log_qmg_product(int r, Complex z, const QParam& qp,
                           const Precision& prec);

// G_r(z;q).  Direct product for Re z >= 1; analytic continuation by
// G_r(z;q) = G_r(z+k;q) / prod_j G_{r-1}(z+j;q) otherwise; G_0(z;q) = [z].
EvalResult qmg(int r, Complex z, const QParam& qp, const Precision& prec);

// Exact finite product G_r(N+1;q) for integer N >= 0, r >= 1.
double qmg_integer_closed(int r, long N, const QParam& qp);
double log_qmg_integer_closed(int r, long N, const QParam& qp);

// d^{r+1}/dz^{r+1} log G_r(z+1;q) for real z >= 0, via the double series
// (-log q)^{r+1} sum_{n,k} binom(n+r-2,r-1) k^r q^{(z+n)k}.  Strictly
// positive.
double log_qmg_deriv(int r, double z, const QParam& qp, const Precision& prec);

}  // namespace qmg

#endif
