#pragma once

namespace fpme::special {

// Tolerances shared by the iterative special-function evaluations.
struct AccuracyPolicy {
  double rel_tol = 1e-12;
  int max_iter = 300;
};

void validate(const AccuracyPolicy& policy);

// Gamma(x) for x > 0.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0.
double complete_beta(double a, double b);

// Regularized incomplete beta I_x(p, q) in the usual convention
// int_0^x t^(p-1) (1-t)^(q-1) dt / B(p, q), via a modified-Lentz continued
// fraction with the symmetry split at x = p / (p + q).
double regularized_incomplete_beta(double p, double q, double x,
                                   const AccuracyPolicy& policy = {});

// 1 - I_x(p, q), formed on whichever side of the split avoids cancellation.
// The overload taking log_beta skips recomputing log B(p, q) in hot loops.
double regularized_incomplete_beta_complement(double p, double q, double x,
                                              const AccuracyPolicy& policy = {});
double regularized_incomplete_beta_complement(double p, double q, double x,
                                              double log_beta,
                                              const AccuracyPolicy& policy);

// Incomplete beta with the weight on the first argument:
//   B(x; a, b) = int_0^x (1-t)^(a-1) t^(b-1) dt,
// equal to the usual convention with (p, q) = (b, a).
double incomplete_beta(double x, double a, double b,
                       const AccuracyPolicy& policy = {});

// B(a, b) - B(x; a, b) = int_x^1 (1-t)^(a-1) t^(b-1) dt, computed without
// forming the difference of the two betas.
double incomplete_beta_tail(double x, double a, double b,
                            const AccuracyPolicy& policy = {});

}  // namespace fpme::special
