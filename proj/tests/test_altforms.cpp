#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "altforms.hpp"
#include "doctest.h"
#include "qmultigamma.hpp"

using namespace qmg;

TEST_CASE("gauss form reduces to the classical q-gamma limit at r=1") {
  QParam qp(0.5);
  Precision prec;
  Complex z(1.4, -0.6);
  long n = truncation_length(1, z, qp, prec.tol, prec.max_terms).first;
  // [1]...[N] / ([z+1]...[z+N]) * [N+1]^z, assembled by hand
  Complex log_manual(0.0, 0.0);
  for (long k = 1; k <= n; ++k) {
    log_manual += std::log(q_number(qp, Complex(k, 0.0)));
    log_manual -= std::log(q_number(qp, z + static_cast<double>(k)));
  }
  log_manual += z * std::log(q_number(qp, Complex(n + 1, 0.0)));
  GaussPartial gp = qmg_gauss(1, z, qp, n, prec);
  CHECK(std::abs(gp.value - std::exp(log_manual)) <=
        1e-12 * std::abs(gp.value));
  // and the partial already sits on top of Gamma(z+1;q)
  CHECK(std::abs(gp.value - q_gamma(qp, z, prec).value) <= 1e-9);
}

TEST_CASE("gauss partial trivial cases") {
  QParam qp(0.5);
  Precision prec;
  for (long n : {1L, 5L, 40L}) {
    for (int r = 1; r <= 3; ++r) {
      GaussPartial gp = qmg_gauss(r, {0.0, 0.0}, qp, n, prec);
      CHECK(std::abs(gp.value - 1.0) <= 1e-11);
    }
  }
  // G_2(2;q) = G_1(1;q) G_2(1;q) = 1
  GaussPartial gp = qmg_gauss(2, {1.0, 0.0}, qp, 64, prec);
  CHECK(std::abs(gp.value - 1.0) <= 1e-8);
}

TEST_CASE("euler form trivial and cross-checked values") {
  QParam qp(0.5);
  Precision prec;
  CHECK(std::abs(qmg_euler(2, {0.0, 0.0}, qp, prec).value - 1.0) <= 1e-12);
  // r=2, z = 1.3+0.4i vs the defining product
  Complex z(1.3, 0.4);
  Complex via_product = std::exp(log_qmg_product(2, z, qp, prec).log_sum);
  EvalResult euler = qmg_euler(2, z, qp, prec);
  CHECK(std::abs(euler.value - via_product) <= 1e-9);
  CHECK(euler.tail_bound <= prec.tol);
}

TEST_CASE("euler form reduces to the classical q-gamma product at r=1") {
  QParam qp(0.5);
  Precision prec;
  Complex z(0.9, 0.3);
  EvalResult euler = qmg_euler(1, z, qp, prec);
  // ([n+1]/[n])^z ([z+n]/[n])^{-1}, assembled by hand at the same depth
  Complex log_manual(0.0, 0.0);
  for (long n = 1; n <= euler.terms_used; ++n) {
    Complex qn = q_number(qp, Complex(n, 0.0));
    log_manual += z * (std::log(q_number(qp, Complex(n + 1, 0.0))) -
                       std::log(qn));
    log_manual -= std::log(q_number(qp, z + static_cast<double>(n))) -
                  std::log(qn);
  }
  CHECK(std::abs(euler.value - std::exp(log_manual)) <=
        1e-12 * std::abs(euler.value));
}

TEST_CASE("three-way agreement on a random sample") {
  Precision prec;
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> re(0.1, 4.0), im(-2.0, 2.0);
  for (double q : {0.3, 0.7}) {
    QParam qp(q);
    for (int r = 1; r <= 3; ++r) {
      for (int i = 0; i < 6; ++i) {
        Complex z(re(rng), im(rng));
        Complex direct = std::exp(log_qmg_product(r, z, qp, prec).log_sum);
        long n = truncation_length(r, z, qp, prec.tol, prec.max_terms).first;
        Complex gauss = qmg_gauss(r, z, qp, n, prec).value;
        Complex euler = qmg_euler(r, z, qp, prec).value;
        double scale = std::abs(direct);
        CHECK(std::abs(direct - gauss) <= 1e-8 * scale);
        CHECK(std::abs(direct - euler) <= 1e-8 * scale);
        CHECK(std::abs(gauss - euler) <= 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("gauss defect shrinks when N doubles") {
  Precision prec;
  QParam qp(0.6);
  Complex z(1.2, 0.5);
  for (int r = 1; r <= 3; ++r) {
    Complex exact = std::exp(log_qmg_product(r, z, qp, prec).log_sum);
    double d1 = std::abs(qmg_gauss(r, z, qp, 10, prec).value - exact);
    double d2 = std::abs(qmg_gauss(r, z, qp, 20, prec).value - exact);
    CHECK(d2 < d1);
  }
}
