#ifndef QMG_SELFCHECK_HPP
#define QMG_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcore.hpp"

namespace qmg {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// Runs every invariant family of the library under the given seed.
// Deterministic: the same seed reproduces the same residual table.
// Throws BudgetError / PoleError if an evaluation itself fails (e.g. an
// unreachable tolerance).
std::vector<CheckResult> run_all_checks(std::uint64_t seed,
                                        const Precision& prec);

}  // namespace qmg

#endif
