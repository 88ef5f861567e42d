#include "fpme/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpme/errors.hpp"

namespace fpme::special {

namespace {

constexpr double kTiny = 1e-300;

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw std::domain_error(std::string(name) + " = " + std::to_string(v) +
                            " must be positive and finite");
  }
}

void check_unit_interval(double x) {
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error("x = " + std::to_string(x) +
                            " must lie in [0, 1]");
  }
}

// Modified-Lentz evaluation of the continued fraction in
// I_x(p,q) = x^p (1-x)^q / (p B(p,q)) * cf. Converges fastest left of the
// symmetry point x = p/(p+q); callers arrange that via the split.
double beta_cont_frac(double p, double q, double x,
                      const AccuracyPolicy& policy) {
  const double pq = p + q;
  const double p1 = p + 1.0;
  const double pm1 = p - 1.0;
  double c = 1.0;
  double d = 1.0 - pq * x / p1;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int it = 1; it <= policy.max_iter; ++it) {
    const double two_it = 2.0 * it;
    double a = it * (q - it) * x / ((pm1 + two_it) * (p + two_it));
    d = 1.0 + a * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + a / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    a = -(p + it) * (pq + it) * x / ((p + two_it) * (p1 + two_it));
    d = 1.0 + a * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + a / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < policy.rel_tol) return h;
  }
  throw convergence_error("incomplete beta continued fraction stalled after " +
                          std::to_string(policy.max_iter) +
                          " iterations (p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) +
                          ", x=" + std::to_string(x) + ")");
}

// x^p (1-x)^q / B(p,q) with log B(p,q) precomputed; 0 < x < 1.
double front_factor(double p, double q, double x, double log_beta) {
  return std::exp(p * std::log(x) + q * std::log1p(-x) - log_beta);
}

// I_x(p,q) on the direct side of the split, complement on the other side.
// `want_complement` selects which of the pair is returned without forming
// 1 - (value near 1).
double regularized_core(double p, double q, double x, double log_beta,
                        bool want_complement, const AccuracyPolicy& policy) {
  if (x <= 0.0) return want_complement ? 1.0 : 0.0;
  if (x >= 1.0) return want_complement ? 0.0 : 1.0;
  const bool direct_side = x < p / (p + q);
  if (direct_side) {
    const double v = front_factor(p, q, x, log_beta) *
                     beta_cont_frac(p, q, x, policy) / p;
    return want_complement ? 1.0 - v : v;
  }
  const double v = front_factor(q, p, 1.0 - x, log_beta) *
                   beta_cont_frac(q, p, 1.0 - x, policy) / q;
  return want_complement ? v : 1.0 - v;
}

}  // namespace

void validate(const AccuracyPolicy& policy) {
  if (!(policy.rel_tol > 0.0) || !(policy.rel_tol < 1.0)) {
    throw std::domain_error("rel_tol must lie in (0, 1)");
  }
  if (policy.max_iter < 1) {
    throw std::domain_error("max_iter must be positive");
  }
}

double gamma_fn(double x) {
  check_positive(x, "gamma argument");
  return std::tgamma(x);
}

double log_gamma(double x) {
  check_positive(x, "log-gamma argument");
  return std::lgamma(x);
}

double complete_beta(double a, double b) {
  check_positive(a, "beta parameter a");
  check_positive(b, "beta parameter b");
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double regularized_incomplete_beta(double p, double q, double x,
                                   const AccuracyPolicy& policy) {
  check_positive(p, "parameter p");
  check_positive(q, "parameter q");
  check_unit_interval(x);
  validate(policy);
  const double log_beta =
      std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
  return regularized_core(p, q, x, log_beta, false, policy);
}

double regularized_incomplete_beta_complement(double p, double q, double x,
                                              const AccuracyPolicy& policy) {
  check_positive(p, "parameter p");
  check_positive(q, "parameter q");
  check_unit_interval(x);
  validate(policy);
  const double log_beta =
      std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
  return regularized_core(p, q, x, log_beta, true, policy);
}

double regularized_incomplete_beta_complement(double p, double q, double x,
                                              double log_beta,
                                              const AccuracyPolicy& policy) {
  return regularized_core(p, q, x, log_beta, true, policy);
}

double incomplete_beta(double x, double a, double b,
                       const AccuracyPolicy& policy) {
  check_positive(a, "parameter a");
  check_positive(b, "parameter b");
  check_unit_interval(x);
  validate(policy);
  // Weight-on-first-argument convention: (p, q) = (b, a).
  return complete_beta(a, b) * regularized_incomplete_beta(b, a, x, policy);
}

double incomplete_beta_tail(double x, double a, double b,
                            const AccuracyPolicy& policy) {
  check_positive(a, "parameter a");
  check_positive(b, "parameter b");
  check_unit_interval(x);
  validate(policy);
  return complete_beta(a, b) *
         regularized_incomplete_beta_complement(b, a, x, policy);
}

}  // namespace fpme::special
