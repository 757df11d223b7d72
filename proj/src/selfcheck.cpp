#include "selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "altforms.hpp"
#include "combinatorics.hpp"
#include "qmultigamma.hpp"

namespace qmg {

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  Complex z(double re_lo, double re_hi, double im_lo, double im_hi) {
    double re = uniform(re_lo, re_hi);
    double im = uniform(im_lo, im_hi);
    return {re, im};
  }
};

const double kQSet[] = {0.2, 0.5, 0.9};

CheckResult make(const std::string& name, double residual, double threshold) {
  return {name, residual, threshold, residual < threshold};
}

// --- qcore ---------------------------------------------------------------

CheckResult check_qgamma_functional_equation(std::uint64_t seed,
                                             const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int i = 0; i < 200; ++i) {
      Complex z = s.z(0.1, 5.0, -3.0, 3.0);
      Complex lhs = q_gamma(qp, z, prec).value;
      Complex rhs = q_number(qp, z) * q_gamma(qp, z - 1.0, prec).value;
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  return make("qgamma functional equation", worst, 1e-10);
}

CheckResult check_qgamma_integer_factorial(const Precision& prec) {
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int n = 1; n <= 30; ++n) {
      Complex direct(1.0, 0.0);
      for (int k = 1; k <= n; ++k)
        direct *= q_number(qp, Complex(static_cast<double>(k), 0.0));
      Complex via =
          q_gamma(qp, Complex(static_cast<double>(n), 0.0), prec).value;
      worst = std::max(worst, std::abs(via - direct) / std::abs(direct));
    }
  }
  return make("qgamma integer factorial", worst, 1e-12);
}

CheckResult check_qgamma_three_forms(std::uint64_t seed,
                                     const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int i = 0; i < 10; ++i) {
      Complex z = s.z(0.2, 3.0, -1.5, 1.5);
      Complex direct = q_gamma(qp, z, prec).value;
      long n = truncation_length(1, z, qp, prec.tol, prec.max_terms).first;
      Complex gauss = qmg_gauss(1, z, qp, n, prec).value;
      Complex euler = qmg_euler(1, z, qp, prec).value;
      double scale = std::abs(direct);
      worst = std::max({worst, std::abs(direct - gauss) / scale,
                        std::abs(direct - euler) / scale,
                        std::abs(gauss - euler) / scale});
    }
  }
  return make("qgamma gauss/euler agreement", worst, 1e-9);
}

CheckResult check_qnumber_recurrence(std::uint64_t seed) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int i = 0; i < 100; ++i) {
      Complex z = s.z(-5.0, 5.0, -5.0, 5.0);
      Complex lhs = q_number(qp, z + 1.0) - qp.q * q_number(qp, z);
      double scale = std::max(1.0, std::abs(q_number(qp, z)));
      worst = std::max(worst, std::abs(lhs - 1.0) / scale);
    }
  }
  return make("q-number recurrence", worst, 1e-14);
}

// --- combinatorics -------------------------------------------------------

CheckResult check_g_difference_identity(std::uint64_t seed) {
  Sampler s(seed);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Complex z = s.z(-4.0, 4.0, -4.0, 4.0);
    for (int r = 2; r <= 5; ++r) {
      double sign = (r % 2 == 0) ? 1.0 : -1.0;  // (-1)^r
      for (int n = 1; n <= 20; ++n) {
        Complex lhs = g_exponent(r, z, n) - g_exponent(r, z - 1.0, n);
        Complex rhs = g_exponent(r - 1, z - 1.0, n) +
                      sign * gen_binom(static_cast<double>(n + r - 3), r - 2);
        double scale = std::max(1.0, std::abs(g_exponent(r, z, n)));
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
      }
    }
  }
  return make("g-exponent difference identity", worst, 1e-12);
}

CheckResult check_binom_sum_identity(std::uint64_t seed) {
  Sampler s(seed);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    Complex z = s.z(-3.0, 3.0, -3.0, 3.0);
    for (int r = 2; r <= 5; ++r) {
      for (int N = 1; N <= 15; ++N) {
        Complex lhs(0.0, 0.0);
        for (int m = 1; m <= r - 1; ++m)
          lhs += gen_binom(z, m) * gen_binom(static_cast<double>(N), r - m);
        Complex rhs(0.0, 0.0);
        for (int n = 1; n <= N; ++n)
          rhs += gen_binom(z + static_cast<double>(n - 1), r - 1) -
                 gen_binom(static_cast<double>(n - 1), r - 1);
        double scale = std::max(1.0, std::abs(lhs));
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
      }
    }
  }
  return make("binomial sum identity", worst, 1e-12);
}

CheckResult check_g_telescoping_identity(std::uint64_t seed) {
  Sampler s(seed);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    Complex z = s.z(-3.0, 3.0, -3.0, 3.0);
    for (int r = 2; r <= 4; ++r) {
      for (int N = 1; N <= 10; ++N) {
        for (int n = 1; n <= 10; ++n) {
          Complex lhs(0.0, 0.0);
          for (int m = 1; m <= r + 1; ++m) {
            if (r - m < 0) continue;  // binom(., -1) = 0
            lhs += gen_binom(Complex(static_cast<double>(N - n), 0.0), r - m) *
                   gen_binom(z, m);
          }
          for (int k = 1; k <= N; ++k)
            lhs -= g_exponent(r, z + static_cast<double>(k - 1), n) -
                   g_exponent(r, Complex(static_cast<double>(k - 1), 0.0), n);
          worst = std::max(worst, std::abs(lhs - g_exponent(r + 1, z, n)));
        }
      }
    }
  }
  return make("g-exponent telescoping identity", worst, 1e-12);
}

CheckResult check_pascal_rule(std::uint64_t seed) {
  Sampler s(seed);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Complex z = s.z(-6.0, 6.0, -6.0, 6.0);
    for (int k = 1; k <= 8; ++k) {
      Complex lhs = gen_binom(z, k);
      Complex rhs = gen_binom(z - 1.0, k) + gen_binom(z - 1.0, k - 1);
      worst = std::max(worst, std::abs(lhs - rhs) /
                                  std::max(1.0, std::abs(lhs)));
    }
  }
  return make("pascal rule", worst, 1e-12);
}

// --- qmultigamma ---------------------------------------------------------

CheckResult check_qmg_functional_equation(std::uint64_t seed,
                                          const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int r = 1; r <= 4; ++r) {
      for (int i = 0; i < 100; ++i) {
        Complex z = s.z(0.1, 5.0, -3.0, 3.0);
        Complex lhs = qmg(r, z + 1.0, qp, prec).value;
        Complex rhs =
            qmg(r - 1, z, qp, prec).value * qmg(r, z, qp, prec).value;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
      }
    }
  }
  return make("G_r functional equation", worst, 1e-10);
}

CheckResult check_qmg_normalization(const Precision& prec) {
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int r = 0; r <= 5; ++r)
      worst = std::max(
          worst, std::abs(qmg(r, Complex(1.0, 0.0), qp, prec).log_value));
  }
  return make("G_r(1;q) normalization", worst, 1e-12);
}

CheckResult check_closed_form_agreement(const Precision& prec) {
  double worst = 0.0;
  for (double q : {0.1, 0.5, 0.9}) {
    QParam qp(q);
    for (int r = 1; r <= 4; ++r) {
      for (long n = 1; n <= 20; ++n) {
        double closed = qmg_integer_closed(r, n, qp);
        Complex via =
            qmg(r, Complex(static_cast<double>(n + 1), 0.0), qp, prec).value;
        worst = std::max(worst, std::abs(via - closed) / closed);
      }
    }
  }
  return make("integer closed form agreement", worst, 1e-11);
}

CheckResult check_truncation_soundness(std::uint64_t seed,
                                       const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;  // ratio |delta| / tail_bound, must stay below 1
  for (double q : kQSet) {
    QParam qp(q);
    for (int r = 1; r <= 4; ++r) {
      for (int i = 0; i < 10; ++i) {
        Complex z = s.z(0.1, 4.0, -2.0, 2.0);
        LogProduct lp = log_qmg_product(r, z, qp, prec);
        LogProduct lp2 = log_qmg_product_at(r, z, qp, 2 * lp.terms_used);
        double delta = std::abs(lp2.log_sum - lp.log_sum);
        worst = std::max(worst, delta / lp.tail_bound);
      }
    }
  }
  return make("truncation tail soundness", worst, 1.0);
}

CheckResult check_deriv_positivity(const Precision& prec) {
  double least = std::numeric_limits<double>::infinity();
  for (double q : kQSet) {
    QParam qp(q);
    for (int r = 1; r <= 4; ++r)
      for (double z = 0.0; z <= 10.0; z += 0.5)
        least = std::min(least, log_qmg_deriv(r, z, qp, prec));
  }
  CheckResult res;
  res.name = "log-derivative positivity";
  res.max_residual = least;  // smallest observed series value
  res.threshold = 0.0;
  res.pass = least > 0.0;
  return res;
}

CheckResult check_reduction(std::uint64_t seed, const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int i = 0; i < 50; ++i) {
      Complex z = s.z(0.1, 5.0, -3.0, 3.0);
      Complex g1 = qmg(1, z, qp, prec).value;
      Complex qg = q_gamma(qp, z - 1.0, prec).value;
      worst = std::max(worst, std::abs(g1 - qg) / std::abs(qg));
      Complex g0 = qmg(0, z, qp, prec).value;
      Complex qn = q_number(qp, z);
      worst = std::max(worst, std::abs(g0 - qn) / std::abs(qn));
    }
  }
  return make("reduction to q-gamma / q-number", worst, 1e-12);
}

CheckResult check_continuation_consistency(std::uint64_t seed,
                                           const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : kQSet) {
    QParam qp(q);
    for (int r = 1; r <= 4; ++r) {
      for (int i = 0; i < 20; ++i) {
        Complex z = s.z(1.1, 4.0, -2.0, 2.0);
        Complex direct = qmg(r, z, qp, prec).value;
        // One deliberate functional-equation step from z+1.
        Complex stepped = qmg(r, z + 1.0, qp, prec).value /
                          qmg(r - 1, z, qp, prec).value;
        worst = std::max(worst, std::abs(direct - stepped) / std::abs(direct));
      }
    }
  }
  return make("continuation consistency", worst, 1e-10);
}

// --- altforms ------------------------------------------------------------

CheckResult check_three_way_agreement(std::uint64_t seed,
                                      const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;
  for (double q : {0.3, 0.7}) {
    QParam qp(q);
    for (int r = 1; r <= 3; ++r) {
      for (int i = 0; i < 30; ++i) {
        Complex z = s.z(0.1, 4.0, -2.0, 2.0);
        Complex direct = std::exp(log_qmg_product(r, z, qp, prec).log_sum);
        long n = truncation_length(r, z, qp, prec.tol, prec.max_terms).first;
        Complex gauss = qmg_gauss(r, z, qp, n, prec).value;
        Complex euler = qmg_euler(r, z, qp, prec).value;
        double scale = std::abs(direct);
        worst = std::max({worst, std::abs(direct - gauss) / scale,
                          std::abs(direct - euler) / scale,
                          std::abs(gauss - euler) / scale});
      }
    }
  }
  return make("three-expression agreement", worst, 1e-8);
}

CheckResult check_gauss_convergence(std::uint64_t seed,
                                    const Precision& prec) {
  Sampler s(seed);
  double worst = 0.0;  // defect(2N) / defect(N), must be < 1
  for (double q : {0.3, 0.7}) {
    QParam qp(q);
    for (int r = 1; r <= 3; ++r) {
      for (int i = 0; i < 5; ++i) {
        Complex z = s.z(0.3, 2.5, -1.0, 1.0);
        Complex exact = std::exp(log_qmg_product(r, z, qp, prec).log_sum);
        long n = 12;
        double d1 = std::abs(qmg_gauss(r, z, qp, n, prec).value - exact);
        double d2 = std::abs(qmg_gauss(r, z, qp, 2 * n, prec).value - exact);
        if (d1 < 1e-14) continue;  // already at roundoff, ratio meaningless
        worst = std::max(worst, d2 / d1);
      }
    }
  }
  return make("gauss geometric convergence", worst, 1.0);
}

CheckResult check_product_telescoping(std::uint64_t seed) {
  Sampler s(seed);
  QParam qp(0.5);
  double worst = 0.0;
  for (int r = 2; r <= 3; ++r) {
    for (int i = 0; i < 3; ++i) {
      Complex z = s.z(0.3, 2.0, -1.0, 1.0);
      const int big = 400, KM = 120;
      Complex rhs(0.0, 0.0);
      for (int n = 1; n <= big; ++n) {
        double c = gen_binom(static_cast<double>(n + r - 2), r - 1);
        rhs += c * (std::log(1.0 - q_pow(qp, z + static_cast<double>(n))) -
                    std::log(1.0 - q_pow(qp, Complex(n, 0.0))));
      }
      Complex lhs(0.0, 0.0);
      for (int k = 0; k <= KM; ++k) {
        double c = binom_nonneg(k + r - 3, r - 2);
        if (c == 0.0) continue;
        for (int n = 1; n <= KM; ++n) {
          double j = static_cast<double>(n + k - 1);
          lhs += c * (std::log(1.0 - q_pow(qp, z + j)) -
                      std::log(1.0 - q_pow(qp, Complex(j, 0.0))));
        }
      }
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return make("double-product telescoping", worst, 1e-8);
}

}  // namespace

std::vector<CheckResult> run_all_checks(std::uint64_t seed,
                                        const Precision& prec) {
  prec.validate();
  std::vector<CheckResult> out;
  out.push_back(check_qgamma_functional_equation(seed ^ 0x01, prec));
  out.push_back(check_qgamma_integer_factorial(prec));
  out.push_back(check_qgamma_three_forms(seed ^ 0x02, prec));
  out.push_back(check_qnumber_recurrence(seed ^ 0x03));
  out.push_back(check_g_difference_identity(seed ^ 0x04));
  out.push_back(check_binom_sum_identity(seed ^ 0x05));
  out.push_back(check_g_telescoping_identity(seed ^ 0x06));
  out.push_back(check_pascal_rule(seed ^ 0x07));
  out.push_back(check_qmg_functional_equation(seed ^ 0x08, prec));
  out.push_back(check_qmg_normalization(prec));
  out.push_back(check_closed_form_agreement(prec));
  out.push_back(check_truncation_soundness(seed ^ 0x09, prec));
  out.push_back(check_deriv_positivity(prec));
  out.push_back(check_reduction(seed ^ 0x0a, prec));
  out.push_back(check_continuation_consistency(seed ^ 0x0b, prec));
  out.push_back(check_three_way_agreement(seed ^ 0x0c, prec));
  out.push_back(check_gauss_convergence(seed ^ 0x0d, prec));
  out.push_back(check_product_telescoping(seed ^ 0x0e));
  return out;
}

}  // namespace qmg
