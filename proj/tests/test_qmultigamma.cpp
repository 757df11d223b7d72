#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "combinatorics.hpp"
#include "doctest.h"
#include "qmultigamma.hpp"

using namespace qmg;

namespace {

// Brute-force tail of the defining product beyond N: the sum of all omitted
// |log-factor| magnitudes, independent of the bound machinery.
double brute_tail(int r, Complex z, const QParam& qp, long N, long extra) {
  double sign = (r % 2 == 0) ? 1.0 : -1.0;
  double total = 0.0;
  for (long n = N + 1; n <= N + extra; ++n) {
    double c = sign * gen_binom(static_cast<double>(n + r - 2), r - 1);
    Complex lg_n = std::log(1.0 - q_pow(qp, Complex(n, 0.0)));
    Complex lg_zn = std::log(1.0 - q_pow(qp, z + static_cast<double>(n)));
    total += std::abs(c * (lg_zn - lg_n) +
                      g_exponent(r, z, static_cast<int>(n)) * lg_n);
  }
  return total;
}

}  // namespace

TEST_CASE("truncation_length certifies the real tail") {
  QParam qp(0.5);
  Complex z(1.0, 0.0);
  auto [n, bound] = truncation_length(1, z, qp, 1e-12, 200000);
  CHECK(n >= 30);
  CHECK(n <= 64);
  CHECK(bound <= 1e-12);
  CHECK(brute_tail(1, z, qp, n, 3000) <= bound);

  // weaker tolerance never needs more terms
  auto [n_loose, bound_loose] = truncation_length(1, z, qp, 1.0, 200000);
  CHECK(n_loose <= n);
  CHECK(bound_loose <= 1.0);

  auto [n3, bound3] = truncation_length(3, Complex(2.0, 1.0), QParam(0.9),
                                        1e-10, 200000);
  CHECK(bound3 <= 1e-10);
  LogProduct a = log_qmg_product_at(3, Complex(2.0, 1.0), QParam(0.9), n3);
  LogProduct b =
      log_qmg_product_at(3, Complex(2.0, 1.0), QParam(0.9), 2 * n3);
  CHECK(std::abs(a.log_sum - b.log_sum) <= 1e-10);
}

TEST_CASE("truncation_length budget error") {
  QParam qp(0.9);
  CHECK_THROWS_AS(truncation_length(1, Complex(1.0, 0.0), qp, 1e-12, 10),
                  BudgetError);
}

TEST_CASE("log_qmg_product special points") {
  QParam qp(0.5);
  Precision prec;
  // G_2(1;q) = 1: exactly zero log
  CHECK(std::abs(log_qmg_product(2, {0.0, 0.0}, qp, prec).log_sum) == 0.0);
  // G_2(3;q) = 1 at any q: closed form (1-q)^{-1} (1-q)^{1}
  CHECK(std::abs(std::exp(log_qmg_product(2, {2.0, 0.0}, qp, prec).log_sum) -
                 1.0) <= 1e-12);
  // r = 1 is the q-gamma product
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> re(0.1, 4.0), im(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    Complex z(re(rng), im(rng));
    Complex lhs = log_qmg_product(1, z, qp, prec).log_sum;
    Complex rhs = q_gamma(qp, z, prec).log_value;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("log_qmg_product reference values") {
  Precision prec;
  // Independent 60-digit evaluations of the defining product.
  LogProduct lp = log_qmg_product(2, {1.5, 0.0}, QParam(0.5), prec);
  CHECK(lp.log_sum.real() ==
        doctest::Approx(-0.0349804559595750662237508).epsilon(1e-12));
  CHECK(lp.log_sum.imag() == doctest::Approx(0.0));

  lp = log_qmg_product(2, {1.3, 0.4}, QParam(0.5), prec);
  CHECK(lp.log_sum.real() ==
        doctest::Approx(-0.04425082946042700819921611).epsilon(1e-12));
  CHECK(lp.log_sum.imag() ==
        doctest::Approx(-0.03017472146533017042894377).epsilon(1e-12));

  lp = log_qmg_product(3, {2.0, 1.0}, QParam(0.9), prec);
  CHECK(lp.log_sum.real() ==
        doctest::Approx(0.04663463069681844297785166).epsilon(1e-10));
  CHECK(lp.log_sum.imag() ==
        doctest::Approx(-0.1423023423036920052674611).epsilon(1e-11));
}

TEST_CASE("qmg basic values") {
  QParam qp(0.5);
  Precision prec;
  // G_0(z;q) = [z]
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 10; ++i) {
    Complex z(u(rng), u(rng) - 2.0);
    CHECK(std::abs(qmg::qmg(0, z, qp, prec).value - q_number(qp, z)) <= 1e-15);
  }
  // G_r(1;q) = 1 for r = 0..5
  for (int r = 0; r <= 5; ++r)
    CHECK(std::abs(qmg::qmg(r, {1.0, 0.0}, qp, prec).log_value) <= 1e-12);
  // G_2(4;q) = Gamma(3;q) = 1 + q
  CHECK(qmg::qmg(2, {4.0, 0.0}, qp, prec).value.real() ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("qmg functional equation including continuation region") {
  Precision prec;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-3.0, 3.0);
  for (double q : {0.2, 0.9}) {
    QParam qp(q);
    for (int r = 1; r <= 4; ++r) {
      for (int i = 0; i < 25; ++i) {
        Complex z(re(rng), im(rng));
        Complex lhs = qmg::qmg(r, z + 1.0, qp, prec).value;
        Complex rhs = qmg::qmg(r - 1, z, qp, prec).value * qmg::qmg(r, z, qp, prec).value;
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
      }
    }
  }
}

TEST_CASE("qmg records continuation bookkeeping") {
  QParam qp(0.5);
  Precision prec;
  EvalResult direct = qmg::qmg(2, {3.2, 0.0}, qp, prec);
  CHECK(direct.method == Method::product);
  CHECK(direct.continuation_steps == 0);
  EvalResult continued = qmg::qmg(2, {0.4, 0.0}, qp, prec);
  CHECK(continued.method == Method::recurrence);
  CHECK(continued.continuation_steps >= 1);
}

TEST_CASE("qmg pole detection through vanishing divisor") {
  QParam qp(0.5);
  Precision prec;
  // G_1(0;q) = Gamma(0;q) requires dividing by [0] = 0
  CHECK_THROWS_AS(qmg::qmg(1, {0.0, 0.0}, qp, prec), PoleError);
}

TEST_CASE("qmg_integer_closed") {
  QParam qp(0.5);
  // r=1: closed form is the q-factorial [1][2][3] = 2.625
  CHECK(qmg_integer_closed(1, 3, qp) == doctest::Approx(2.625).epsilon(1e-14));
  for (double q : {0.1, 0.5, 0.9}) {
    CHECK(qmg_integer_closed(2, 2, QParam(q)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    for (int r = 1; r <= 4; ++r)
      CHECK(qmg_integer_closed(r, 0, QParam(q)) == 1.0);
  }
  // agreement with the product evaluator
  Precision prec;
  for (double q : {0.1, 0.5, 0.9}) {
    QParam qpx(q);
    for (int r = 1; r <= 4; ++r) {
      for (long n = 1; n <= 20; ++n) {
        // compare in the log domain: the values overflow double for large n
        double closed = log_qmg_integer_closed(r, n, qpx);
        Complex via = qmg::qmg(r, Complex(static_cast<double>(n + 1), 0.0), qpx,
                          prec).log_value;
        CHECK(std::abs(via - closed) <=
              1e-11 * std::max(1.0, std::abs(closed)));
      }
    }
  }
}

TEST_CASE("log_qmg_deriv brute-force value and positivity") {
  QParam qp(0.5);
  Precision prec;
  // r=1, z=0: (ln 2)^2 sum_{n,k} k (1/2)^{nk} = 1.318379352148178841...
  CHECK(log_qmg_deriv(1, 0.0, qp, prec) ==
        doctest::Approx(1.318379352148178841124921).epsilon(1e-12));
  for (double q : {0.2, 0.5, 0.9}) {
    QParam qpx(q);
    for (int r = 1; r <= 4; ++r)
      for (double z = 0.0; z <= 10.0; z += 2.5)
        CHECK(log_qmg_deriv(r, z, qpx, prec) > 0.0);
  }
  CHECK_THROWS_AS(log_qmg_deriv(1, -0.5, qp, prec), DomainError);
}
