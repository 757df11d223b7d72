// Command-line front end for the q-multiple-gamma shared library.
//
//   qmg eval  --r 2 --q 0.5 --z 3          one JSON record on stdout
//   qmg grid  --r 1 --q 0.5 --z-start 1 --z-end 5 --steps 9   CSV on stdout
//   qmg check --seed 1                      invariant report, exit 0 iff ok
//
// Exit codes: 0 success, 1 invariant failure, 2 bad arguments,
// 3 pole encountered, 4 budget exhausted.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmg/qmg.h"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitPole = 3;
constexpr int kExitBudget = 4;

int exit_code(qmg_status s) {
  switch (s) {
    case QMG_OK: return 0;
    case QMG_ERROR_CHECK_FAILED: return kExitCheckFailed;
    case QMG_ERROR_POLE: return kExitPole;
    case QMG_ERROR_BUDGET: return kExitBudget;
    default: return kExitBadArgs;
  }
}

// Shortest round-trip decimal form, locale independent.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

bool parse_complex(const std::string& text, double* re, double* im) {
  *re = 0.0;
  *im = 0.0;
  auto comma = text.find(',');
  try {
    size_t used = 0;
    std::string head = text.substr(0, comma);
    *re = std::stod(head, &used);
    if (used != head.size()) return false;
    if (comma != std::string::npos) {
      std::string tail = text.substr(comma + 1);
      *im = std::stod(tail, &used);
      if (used != tail.size()) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

struct Options {
  int r = 1;
  double q = 0.5;
  std::string z_text = "1";
  std::string z_start_text = "1";
  std::string z_end_text = "5";
  long steps = 1;
  std::string method = "auto";
  double tol = 1e-12;
  long max_terms = 200000;
  int max_steps = 1024;
  unsigned long long seed = 1;
};

qmg_method method_from_name(const std::string& name) {
  if (name == "product") return QMG_METHOD_PRODUCT;
  if (name == "gauss") return QMG_METHOD_GAUSS;
  if (name == "euler") return QMG_METHOD_EULER;
  if (name == "recurrence") return QMG_METHOD_RECURRENCE;
  if (name == "closed") return QMG_METHOD_CLOSED;
  return QMG_METHOD_AUTO;
}

struct Handle {
  qmg_evaluator* ev = nullptr;
  ~Handle() { qmg_evaluator_destroy(ev); }
};

int make_evaluator(const Options& opt, Handle* h) {
  qmg_status s = qmg_evaluator_create(opt.q, opt.tol, opt.max_terms,
                                      opt.max_steps, &h->ev);
  if (s != QMG_OK) {
    std::fprintf(stderr, "error: %s\n", qmg_last_error_message());
    return exit_code(s);
  }
  return 0;
}

int run_eval(const Options& opt) {
  double z_re, z_im;
  if (!parse_complex(opt.z_text, &z_re, &z_im)) {
    std::fprintf(stderr, "error: cannot parse --z '%s'\n", opt.z_text.c_str());
    return kExitBadArgs;
  }
  Handle h;
  if (int rc = make_evaluator(opt, &h)) return rc;
  qmg_result res;
  qmg_status s = qmg_evaluate(h.ev, opt.r, z_re, z_im,
                              method_from_name(opt.method), &res);
  if (s != QMG_OK) {
    std::fprintf(stderr, "error (%s): %s\n", qmg_status_name(s),
                 qmg_last_error_message());
    return exit_code(s);
  }
  std::printf(
      "{\"re\":%s,\"im\":%s,\"log_re\":%s,\"log_im\":%s,\"terms_used\":%ld,"
      "\"tail_bound\":%s,\"method\":\"%s\",\"continuation_steps\":%d}\n",
      fmt(res.value_re).c_str(), fmt(res.value_im).c_str(),
      fmt(res.log_re).c_str(), fmt(res.log_im).c_str(), res.terms_used,
      fmt(res.tail_bound).c_str(),
      qmg_method_name(static_cast<qmg_method>(res.method)),
      res.continuation_steps);
  return 0;
}

int run_grid(const Options& opt) {
  double s_re, s_im, e_re, e_im;
  if (!parse_complex(opt.z_start_text, &s_re, &s_im) ||
      !parse_complex(opt.z_end_text, &e_re, &e_im)) {
    std::fprintf(stderr, "error: cannot parse --z-start/--z-end\n");
    return kExitBadArgs;
  }
  if (opt.steps < 1) {
    std::fprintf(stderr, "error: --steps must be >= 1\n");
    return kExitBadArgs;
  }
  Handle h;
  if (int rc = make_evaluator(opt, &h)) return rc;
  qmg_method method = method_from_name(opt.method);

  std::printf("z_re,z_im,G_re,G_im,log_re,log_im,terms_used\n");
  bool hit_pole = false;
  for (long i = 0; i < opt.steps; ++i) {
    double t = opt.steps == 1
                   ? 0.0
                   : static_cast<double>(i) / static_cast<double>(opt.steps - 1);
    double z_re = s_re + t * (e_re - s_re);
    double z_im = s_im + t * (e_im - s_im);
    qmg_result res;
    qmg_status s = qmg_evaluate(h.ev, opt.r, z_re, z_im, method, &res);
    if (s == QMG_ERROR_POLE) {
      hit_pole = true;
      std::printf("%s,%s,nan,nan,nan,nan,0\n", fmt(z_re).c_str(),
                  fmt(z_im).c_str());
      continue;
    }
    if (s != QMG_OK) {
      std::fprintf(stderr, "error (%s): %s\n", qmg_status_name(s),
                   qmg_last_error_message());
      return exit_code(s);
    }
    std::printf("%s,%s,%s,%s,%s,%s,%ld\n", fmt(z_re).c_str(),
                fmt(z_im).c_str(), fmt(res.value_re).c_str(),
                fmt(res.value_im).c_str(), fmt(res.log_re).c_str(),
                fmt(res.log_im).c_str(), res.terms_used);
  }
  return hit_pole ? kExitPole : 0;
}

int run_check(const Options& opt) {
  Handle h;
  if (int rc = make_evaluator(opt, &h)) return rc;
  qmg_status s = qmg_self_check(
      h.ev, opt.seed,
      [](const char* line, void*) { std::printf("%s\n", line); }, nullptr);
  if (s == QMG_OK) {
    std::printf("all invariants pass\n");
    return 0;
  }
  if (s == QMG_ERROR_CHECK_FAILED) {
    std::printf("invariant failure detected\n");
    return kExitCheckFailed;
  }
  std::fprintf(stderr, "error (%s): %s\n", qmg_status_name(s),
               qmg_last_error_message());
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "q-analogue of the multiple gamma functions G_r(z+1;q), 0 < q < 1"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--r", opt.r, "Order r >= 0 of G_r")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--q", opt.q, "Base q in (0, 1 - 1e-6]")->required();
    cmd->add_option("--tol", opt.tol,
                    "Certified bound on the truncated log tail");
    cmd->add_option("--max-terms", opt.max_terms, "Product term budget");
    cmd->add_option("--max-steps", opt.max_steps,
                    "Functional-equation continuation step budget");
    cmd->add_option("--method", opt.method,
                    "auto|product|gauss|euler|recurrence|closed")
        ->check(CLI::IsMember(
            {"auto", "product", "gauss", "euler", "recurrence", "closed"}));
  };

  CLI::App* eval = app.add_subcommand(
      "eval",
      "Evaluate G_r(z+1;q): the (1-q)-power times the infinite product over "
      "((1-q^{z+n})/(1-q^n))-type factors, or a cross-check form");
  add_common(eval);
  eval->add_option("--z", opt.z_text, "z as RE or RE,IM")->required();

  CLI::App* grid = app.add_subcommand(
      "grid", "Tabulate G_r(z+1;q) on a line segment in z; CSV on stdout");
  add_common(grid);
  grid->add_option("--z-start", opt.z_start_text, "Segment start, RE or RE,IM")
      ->required();
  grid->add_option("--z-end", opt.z_end_text, "Segment end, RE or RE,IM")
      ->required();
  grid->add_option("--steps", opt.steps, "Number of grid points (>= 1)");

  CLI::App* check = app.add_subcommand(
      "check",
      "Run the invariant suite: functional equation, normalization, closed "
      "form, series forms, truncation soundness, log-convexity");
  check->add_option("--q", opt.q, "Base q used for the evaluator handle");
  check->add_option("--tol", opt.tol, "Tolerance handed to every evaluation");
  check->add_option("--max-terms", opt.max_terms, "Product term budget");
  check->add_option("--seed", opt.seed, "Seed for the random samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadArgs;
  }

  if (eval->parsed()) return run_eval(opt);
  if (grid->parsed()) return run_grid(opt);
  return run_check(opt);
}
