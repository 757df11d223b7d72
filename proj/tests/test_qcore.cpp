#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qcore.hpp"

using namespace qmg;

TEST_CASE("QParam validation") {
  CHECK_THROWS_AS(QParam(0.0), DomainError);
  CHECK_THROWS_AS(QParam(1.0), DomainError);
  CHECK_THROWS_AS(QParam(-0.3), DomainError);
  CHECK_THROWS_AS(QParam(1.5), DomainError);
  QParam qp(0.5);
  CHECK(qp.log_q < 0.0);
  CHECK(std::exp(qp.log_q) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("q_pow identities") {
  QParam half(0.5);
  CHECK(q_pow(half, {1.0, 0.0}).real() == doctest::Approx(0.5));
  CHECK(q_pow(half, {0.0, 0.0}) == Complex(1.0, 0.0));
  QParam quarter(0.25);
  CHECK(q_pow(quarter, {0.5, 0.0}).real() == doctest::Approx(0.5));
  // |q^z| = q^{Re z}
  Complex v = q_pow(half, {2.0, 3.0});
  CHECK(std::abs(v) == doctest::Approx(0.25));
}

TEST_CASE("q_number identities") {
  QParam qp(0.37);
  CHECK(q_number(qp, {1.0, 0.0}).real() == doctest::Approx(1.0));
  CHECK(std::abs(q_number(qp, {0.0, 0.0})) == doctest::Approx(0.0));
  QParam half(0.5);
  CHECK(q_number(half, {2.0, 0.0}).real() == doctest::Approx(1.5));
  // [z+1] - q [z] = 1
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    Complex z(u(rng), u(rng));
    CHECK(std::abs(q_number(qp, z + 1.0) - qp.q * q_number(qp, z) - 1.0) <=
          1e-14 * std::max(1.0, std::abs(q_number(qp, z))));
  }
}

TEST_CASE("principal_log branch") {
  CHECK(principal_log({1.0, 0.0}) == Complex(0.0, 0.0));
  Complex mlog = principal_log({-1.0, 0.0});
  CHECK(mlog.real() == doctest::Approx(0.0));
  CHECK(mlog.imag() == doctest::Approx(M_PI));
  CHECK(principal_log({std::exp(1.0), 0.0}).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(principal_log({0.0, 0.0}), DomainError);
}

TEST_CASE("q_gamma small integer values") {
  QParam qp(0.5);
  Precision prec;
  CHECK(std::abs(q_gamma(qp, {0.0, 0.0}, prec).value - 1.0) <= 1e-12);
  CHECK(std::abs(q_gamma(qp, {1.0, 0.0}, prec).value - 1.0) <= 1e-12);
  CHECK(std::abs(q_gamma(qp, {2.0, 0.0}, prec).value - 1.5) <= 1e-12);
  // Gamma(4;q) = [1][2][3] = 2.625 at q = 1/2
  CHECK(q_gamma(qp, {3.0, 0.0}, prec).value.real() ==
        doctest::Approx(2.625).epsilon(1e-12));
}

TEST_CASE("q_gamma reference values") {
  QParam qp(0.5);
  Precision prec;
  // High-precision values from an independent 60-digit evaluation of the
  // defining product.
  CHECK(q_gamma(qp, {0.5, 0.0}, prec).value.real() ==
        doctest::Approx(0.9208754502712837898576274).epsilon(1e-13));
  EvalResult res = q_gamma(qp, {1.5, 0.5}, prec);
  CHECK(res.log_value.real() ==
        doctest::Approx(0.1473209640275974272763134).epsilon(1e-12));
  CHECK(res.log_value.imag() ==
        doctest::Approx(0.2110570440402467915226859).epsilon(1e-12));
  CHECK(std::abs(std::exp(res.log_value) - res.value) <=
        4e-16 * std::abs(res.value));
}

TEST_CASE("q_gamma functional equation across q") {
  Precision prec;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-3.0, 3.0);
  for (double q : {0.2, 0.5, 0.9}) {
    QParam qp(q);
    for (int i = 0; i < 50; ++i) {
      Complex z(re(rng), im(rng));
      Complex lhs = q_gamma(qp, z, prec).value;
      Complex rhs = q_number(qp, z) * q_gamma(qp, z - 1.0, prec).value;
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
  }
}

TEST_CASE("q_gamma continuation to the left half plane") {
  QParam qp(0.5);
  Precision prec;
  EvalResult left = q_gamma(qp, {-0.5, 0.0}, prec);
  CHECK(left.method == Method::recurrence);
  CHECK(left.continuation_steps == 1);
  // Gamma(1.5;q) = [0.5] Gamma(0.5;q)
  Complex expect = q_gamma(qp, {0.5, 0.0}, prec).value /
                   q_number(qp, {0.5, 0.0});
  CHECK(std::abs(left.value - expect) <= 1e-12 * std::abs(expect));
}

TEST_CASE("q_gamma pole detection") {
  QParam qp(0.5);
  Precision prec;
  CHECK_THROWS_AS(q_gamma(qp, {-1.0, 0.0}, prec), PoleError);
  CHECK_THROWS_AS(q_gamma(qp, {-3.0, 0.0}, prec), PoleError);
}

TEST_CASE("q_gamma tail bound honored") {
  Precision prec;
  for (double q : {0.2, 0.9}) {
    QParam qp(q);
    EvalResult res = q_gamma(qp, {1.7, 0.8}, prec);
    CHECK(res.tail_bound <= prec.tol);
    CHECK(res.terms_used >= 1);
  }
}
