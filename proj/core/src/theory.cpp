#include "fpme/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fpme::theory {

void validate(const AmplificationParams& p) {
  if (!(p.A > 0.0) || !(p.B > 0.0)) {
    throw std::domain_error("amplification constants A, B must be positive");
  }
  if (!(p.beta >= 1.0)) {
    throw std::domain_error("amplification exponent beta must be >= 1");
  }
  if (!(p.gamma >= 0.0)) {
    throw std::domain_error("amplification exponent gamma must be >= 0");
  }
}

SolutionBounds bounds_coefficients(const ProblemParams& params) {
  validate(params);
  const double alpha = params.alpha;
  const double m = params.m;
  const double kappa = (2.0 - alpha) / m;
  const double root = 1.0 / (m + 1.0);
  double c1_arg;
  if (alpha <= 1.0 - root) {
    c1_arg = std::pow(alpha / 2.0, 1.0 - alpha) *
             std::exp(std::lgamma(kappa) - std::lgamma(2.0 - alpha + kappa)) /
             (2.0 - alpha + m * (3.0 - alpha));
  } else {
    c1_arg = std::pow(alpha / 2.0, 2.0 - alpha) *
             std::exp(std::lgamma(1.0 + kappa) -
                      std::lgamma(2.0 - alpha + kappa)) /
             (2.0 - alpha);
  }
  SolutionBounds bounds;
  bounds.C1 = std::pow(c1_arg, root);
  bounds.C2 = std::pow(std::tgamma(3.0 - alpha), -root);
  bounds.kappa = kappa;
  return bounds;
}

double asymptotic_coefficient(const ProblemParams& params) {
  validate(params);
  const double alpha = params.alpha;
  const double m = params.m;
  const double denom = (2.0 - alpha) * (1.0 + 1.0 / m) - 1.0;
  if (!(denom > 0.0)) {
    throw std::domain_error("asymptotic coefficient undefined: (2-alpha)(1+1/m)-1 = " +
                            std::to_string(denom) + " <= 0");
  }
  const double kappa = (2.0 - alpha) / m;
  return std::pow(alpha / 2.0, 2.0 - alpha) *
         std::exp(std::lgamma(kappa) - std::lgamma(1.0 - alpha + kappa)) /
         denom;
}

double starting_value(const ProblemParams& params, double h) {
  if (!(h > 0.0) || !(h <= 1.0)) {
    throw std::domain_error("step h = " + std::to_string(h) +
                            " must lie in (0, 1]");
  }
  return asymptotic_coefficient(params) *
         std::pow(h, (2.0 - params.alpha) / params.m);
}

double amplification_f(const AmplificationParams& p, long n) {
  validate(p);
  if (n < 1) throw std::domain_error("amplification index n must be >= 1");
  if (n == 1) return 1.0;
  // f(n) = 1 + A n^g [ P(2) + sum_{i=2}^{n-1} i^(-b) P(i+1) ],
  // P(i) = prod_{j=i}^{n-1} (1 + A j^(g-b)); one backward pass shares the
  // running product.
  double running = 1.0;
  double acc = 0.0;
  for (long i = n - 1; i >= 2; --i) {
    acc += std::pow(static_cast<double>(i), -p.beta) * running;
    running *= 1.0 + p.A * std::pow(static_cast<double>(i), p.gamma - p.beta);
  }
  return 1.0 + p.A * std::pow(static_cast<double>(n), p.gamma) *
                   (running + acc);
}

kernel::KernelBound make_kernel_bound(const ProblemParams& params, double X,
                                      double W) {
  if (!(W > 0.0)) throw std::domain_error("weight bound W must be positive");
  kernel::KernelBound bound;
  bound.X = X;
  bound.D = kernel::bound_constant(params, X);
  const double C1 = bounds_coefficients(params).C1;
  bound.A = W * bound.D / ((params.m + 1.0) * std::pow(C1, params.m));
  return bound;
}

double theoretical_order(const ProblemParams& params,
                         const kernel::KernelBound& bound) {
  validate(params);
  const double alpha = params.alpha;
  const double m = params.m;
  const double C1 = bounds_coefficients(params).C1;
  const double a_mid = 2.0 * bound.D / ((m + 1.0) * std::pow(C1, m));
  return 2.0 - (2.0 - alpha) * (1.0 - 1.0 / m) - a_mid;
}

AdmissibilityReport midpoint_admissible(const ProblemParams& params,
                                        const kernel::KernelBound& bound) {
  validate(params);
  const double alpha = params.alpha;
  const double m = params.m;
  const double C1 = bounds_coefficients(params).C1;
  AdmissibilityReport report;
  report.exponent_condition = m > 2.0 - alpha;
  report.A = 2.0 * bound.D / ((m + 1.0) * std::pow(C1, m));
  report.threshold = alpha + (2.0 - alpha) / m;
  report.admissible = report.exponent_condition && report.A < report.threshold;
  return report;
}

}  // namespace fpme::theory
