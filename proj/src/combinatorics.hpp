#ifndef QMG_COMBINATORICS_HPP
#define QMG_COMBINATORICS_HPP

#include "qcore.hpp"

namespace qmg {

// binom(z, k) for complex upper argument: z(z-1)...(z-k+1) / k!.
// For integer z >= 0 this is the combinatorial value (0 when 0 <= z < k);
// for negative integer z it equals (-1)^k binom(-z+k-1, k).
Complex gen_binom(Complex z, int k);

// Real-argument convenience overload.
double gen_binom(double z, int k);

// Combinatorial binomial over the integers: 0 whenever upper < 0 or
// upper < lower.  Used where a sum's natural range must exclude the
// falling-factorial value at negative upper arguments.
double binom_nonneg(long upper, int lower);

// g_r(z, n): zero for r = 1, otherwise
//   sum_{m=1}^{r-1} (-1)^{m-1} binom(z, r-m) binom(n+m-2, m-1).
Complex g_exponent(int r, Complex z, int n);

}  // namespace qmg

#endif
