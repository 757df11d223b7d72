#include "combinatorics.hpp"

namespace qmg {

Complex gen_binom(Complex z, int k) {
  if (k < 0) throw DomainError("gen_binom: k must be >= 0");
  Complex prod(1.0, 0.0);
  double fact = 1.0;
  for (int j = 0; j < k; ++j) {
    prod *= z - static_cast<double>(j);
    fact *= static_cast<double>(j + 1);
  }
  return prod / fact;
}

double gen_binom(double z, int k) {
  return gen_binom(Complex(z, 0.0), k).real();
}

double binom_nonneg(long upper, int lower) {
  if (lower < 0 || upper < 0 || upper < lower) return 0.0;
  return gen_binom(static_cast<double>(upper), lower);
}

Complex g_exponent(int r, Complex z, int n) {
  if (r < 1) throw DomainError("g_exponent: r must be >= 1");
  if (n < 1) throw DomainError("g_exponent: n must be >= 1");
  if (r == 1) return Complex(0.0, 0.0);
  Complex sum(0.0, 0.0);
  double sign = 1.0;
  for (int m = 1; m <= r - 1; ++m) {
    sum += sign * gen_binom(z, r - m) *
           gen_binom(static_cast<double>(n + m - 2), m - 1);
    sign = -sign;
  }
  return sum;
}

}  // namespace qmg
