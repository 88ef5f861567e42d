#pragma once

#include <functional>

#include "fpme/params.hpp"
#include "fpme/special.hpp"

namespace fpme::kernel {

// Constants of the convergence analysis restricted to 0 <= z <= X < 1.
//   D = (m+1) / (2 m Gamma(2-alpha)) * (1-X)^(alpha-1)
//   A = W D / ((m+1) C1^m), W the quadrature weight bound
struct KernelBound {
  double X = 0.0;
  double D = 0.0;
  double A = 0.0;
};

// Evaluates the Volterra kernel K(z, u) for 0 <= u <= z <= 1 through its
// incomplete-beta closed form. The complete-beta constants are computed once
// at construction; each call costs two continued-fraction evaluations.
//
// K is continuous, nonnegative, and vanishes identically on the diagonal
// u == z (returned exactly as 0).
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const ProblemParams& params,
                           const special::AccuracyPolicy& policy = {});

  double operator()(double z, double u) const;

  const ProblemParams& params() const { return params_; }

 private:
  ProblemParams params_;
  special::AccuracyPolicy policy_;
  double half_alpha_;
  double one_minus_half_alpha_;
  double q_;        // 1 - alpha
  double p_long_;   // 4/alpha + 1
  double p_short_;  // 2/alpha + 1
  double beta_long_;
  double beta_short_;
  double log_beta_long_;
  double log_beta_short_;
  double front_;  // (m+1) / (m Gamma(1-alpha))
};

// One-shot K(z, u) through a temporary KernelEvaluator.
double kernel_eval(const ProblemParams& params, double z, double u);

// K(z, u) from its defining integral, after the substitution
// v = (1-s)^(1-alpha) that removes the (1-s)^(-alpha) weight. Slow; serves as
// an independent cross-check of the closed form.
double kernel_eval_quadrature(const ProblemParams& params, double z, double u,
                              double rel_tol = 1e-9);

// D(X), the constant of the pointwise bound K(z, u) <= D (z-u)^(1-alpha) on
// 0 <= u <= z <= X.
double bound_constant(const ProblemParams& params, double X);

// The bound D (z-u)^(1-alpha) itself. Requires 0 <= u <= z <= bound.X.
double kernel_bound(const ProblemParams& params, const KernelBound& bound,
                    double z, double u);

// Nonlocal memory operator
//   (F y)(t) = 1/Gamma(1-alpha) int_{(1-t)^(alpha/2)}^{1}
//                (1-s)^(-alpha) y(1 - s^(-2/alpha) (1-t)) ds,
// evaluated by adaptive quadrature in the substituted variable
// v = (1-s)^(1-alpha).
double memory_operator(const ProblemParams& params,
                       const std::function<double(double)>& y, double t,
                       double rel_tol = 1e-9);

// Right-hand side of the fixed-point equation in its nested (pre-Fubini)
// form:
//   (m+1)/m int_0^z (alpha/2 + (1 - alpha/2) z - t) (F y)(t) dt.
// Slow oracle for the single-integral form int_0^z K(z, u) y(u) du.
double rhs_nested(const ProblemParams& params,
                  const std::function<double(double)>& y, double z,
                  double rel_tol = 1e-8);

}  // namespace fpme::kernel
