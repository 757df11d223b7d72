#ifndef QMG_ALTFORMS_HPP
#define QMG_ALTFORMS_HPP

#include "qcore.hpp"
#include "qmultigamma.hpp"

namespace qmg {

struct GaussPartial {
  long N = 0;
  Complex value;
  Complex log_value;
};

// Gauss-type partial at level N:
//   [prod_{k=1}^{N} G_{r-1}(k;q)/G_{r-1}(z+k;q)]
//     * prod_{m=1}^{r} G_{r-m}(N+1;q)^{binom(z,m)}
// converging to G_r(z+1;q).  Integer-argument values come from the exact
// closed form; G_{r-1}(z+k;q) from qmg.
GaussPartial qmg_gauss(int r, Complex z, const QParam& qp, long N,
                       const Precision& prec);

// Euler-type product for G_r(z+1;q), truncated once the correction-tail
// majorant q^N sum_m |binom(z,m)| q/(1-q)^{r-m+2} certifies tol.
EvalResult qmg_euler(int r, Complex z, const QParam& qp,
                     const Precision& prec);

}  // namespace qmg

#endif
