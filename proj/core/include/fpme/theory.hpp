#pragma once

#include "fpme/kernel.hpp"
#include "fpme/params.hpp"

namespace fpme::theory {

// Coefficients of the two-sided envelope C1 z^kappa <= y(z) <= C2 z^kappa.
struct SolutionBounds {
  double C1 = 0.0;
  double C2 = 0.0;
  double kappa = 0.0;  // (2 - alpha) / m
};

// Parameters of the discrete Gronwall-type recurrence
// e_n <= n^(-beta) (A sum (n-i)^gamma e_i + B).
struct AmplificationParams {
  double A = 1.0;
  double B = 1.0;
  double beta = 1.0;   // >= 1
  double gamma = 0.0;  // >= 0
};

void validate(const AmplificationParams& p);

// Outcome of the midpoint admissibility test, with its two conditions and the
// quantities entering the second one.
struct AdmissibilityReport {
  bool admissible = false;
  bool exponent_condition = false;  // m > 2 - alpha
  double A = 0.0;                   // 2 D / ((m+1) C1^m)
  double threshold = 0.0;           // alpha + (2 - alpha) / m
};

// Largest quadrature weight of the two-track midpoint rule.
inline constexpr double midpoint_weight_bound = 2.0;

// C1 (two branches, cut at alpha = 1 - 1/(m+1), the boundary belonging to the
// first branch), C2 = Gamma(3-alpha)^(-1/(m+1)), kappa = (2-alpha)/m.
SolutionBounds bounds_coefficients(const ProblemParams& params);

// Coefficient c of the leading asymptotic y(z) ~ c z^((2-alpha)/m) at z -> 0+.
// Requires (2-alpha)(1+1/m) > 1.
double asymptotic_coefficient(const ProblemParams& params);

// First solver node value c h^((2-alpha)/m) for step 0 < h <= 1.
double starting_value(const ProblemParams& params, double h);

// Closed-form amplification factor of the recurrence
//   f(n) = A n^gamma sum_{i=1}^{n-1} f(i) / i^beta + 1,  f(1) = 1,
// computed by one backward accumulation pass in O(n).
double amplification_f(const AmplificationParams& p, long n);

// Builds the analysis constants for cutoff X in [0,1) and weight bound W.
kernel::KernelBound make_kernel_bound(const ProblemParams& params, double X,
                                      double W = midpoint_weight_bound);

// 2 - (2-alpha)(1-1/m) - 2 D / ((m+1) C1^m); may be negative, which signals
// that the estimate guarantees nothing for these parameters.
double theoretical_order(const ProblemParams& params,
                         const kernel::KernelBound& bound);

// m > 2 - alpha and A < alpha + (2-alpha)/m, both strict.
AdmissibilityReport midpoint_admissible(const ProblemParams& params,
                                        const kernel::KernelBound& bound);

}  // namespace fpme::theory
