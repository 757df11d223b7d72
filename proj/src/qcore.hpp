#ifndef QMG_QCORE_HPP
#define QMG_QCORE_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace qmg {

using Complex = std::complex<double>;

// A factor (or divisor) smaller than this in magnitude is treated as a
// genuine pole/zero rather than roundoff.
inline constexpr double kPoleThreshold = 1e-13;

// Largest admissible q.  Terms of the defining product decay like q^n, so
// bases closer to 1 than this would exhaust any sane term budget.
inline constexpr double kMaxQ = 1.0 - 1e-6;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PoleError : std::runtime_error {
  Complex location;
  PoleError(const std::string& what, Complex where)
      : std::runtime_error(what), location(where) {}
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The base q with its cached logarithm.  Construction enforces
// 0 < q <= 1 - 1e-6.
struct QParam {
  double q;
  double log_q;

  explicit QParam(double q_) : q(q_), log_q(0.0) {
    if (!(q_ > 0.0) || !(q_ <= kMaxQ))
      throw DomainError("q must lie in (0, 1 - 1e-6], got " +
                        std::to_string(q_));
    log_q = std::log(q_);
  }
};

struct Precision {
  double tol = 1e-12;
  long max_terms = 200000;
  int max_continuation_steps = 1024;

  void validate() const {
    if (!(tol > 0.0)) throw DomainError("tol must be positive");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
    if (max_continuation_steps < 1)
      throw DomainError("max_continuation_steps must be >= 1");
  }
};

enum class Method { product, gauss, euler, recurrence, closed };

const char* method_name(Method m);

struct EvalResult {
  Complex value;
  Complex log_value;  // factorwise principal-log branch, exp(log_value)==value
  long terms_used = 0;
  double tail_bound = 0.0;
  Method method = Method::product;
  int continuation_steps = 0;
};

// q^z = exp(z log q).
Complex q_pow(const QParam& qp, Complex z);

// [z] = (1 - q^z) / (1 - q).
Complex q_number(const QParam& qp, Complex z);

// log|v| + i arg(v), arg in (-pi, pi].  DomainError on v == 0.
Complex principal_log(Complex v);

// Gamma(z+1;q) from the defining product, continued leftward through
// Gamma(z+1;q) = [z] Gamma(z;q) when Re z <= 0.
EvalResult q_gamma(const QParam& qp, Complex z, const Precision& prec);

}  // namespace qmg

#endif
