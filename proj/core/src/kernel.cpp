#include "fpme/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpme/quadrature.hpp"

namespace fpme::kernel {

namespace {

void check_range(double z, double u) {
  if (!(z >= 0.0) || !(z <= 1.0) || !(u >= 0.0) || !(u <= 1.0)) {
    throw std::domain_error("kernel arguments must lie in [0, 1], got z=" +
                            std::to_string(z) + ", u=" + std::to_string(u));
  }
  if (u > z) {
    throw std::domain_error("kernel requires u <= z, got z=" +
                            std::to_string(z) + ", u=" + std::to_string(u));
  }
}

}  // namespace

KernelEvaluator::KernelEvaluator(const ProblemParams& params,
                                 const special::AccuracyPolicy& policy)
    : params_(params), policy_(policy) {
  validate(params_);
  special::validate(policy_);
  const double alpha = params_.alpha;
  half_alpha_ = alpha / 2.0;
  one_minus_half_alpha_ = 1.0 - half_alpha_;
  q_ = 1.0 - alpha;
  p_long_ = 4.0 / alpha + 1.0;
  p_short_ = 2.0 / alpha + 1.0;
  log_beta_long_ = std::lgamma(p_long_) + std::lgamma(q_) -
                   std::lgamma(p_long_ + q_);
  log_beta_short_ = std::lgamma(p_short_) + std::lgamma(q_) -
                    std::lgamma(p_short_ + q_);
  beta_long_ = std::exp(log_beta_long_);
  beta_short_ = std::exp(log_beta_short_);
  front_ = (params_.m + 1.0) / (params_.m * std::tgamma(q_));
}

double KernelEvaluator::operator()(double z, double u) const {
  check_range(z, u);
  if (u == z) return 0.0;
  // x = ((1-z)/(1-u))^(alpha/2) in [0, 1); the kernel integral runs over
  // [x, 1] in the variable s = t of the beta integrand.
  const double x = std::pow((1.0 - z) / (1.0 - u), half_alpha_);
  const double tail_long =
      beta_long_ * special::regularized_incomplete_beta_complement(
                       p_long_, q_, x, log_beta_long_, policy_);
  const double tail_short =
      beta_short_ * special::regularized_incomplete_beta_complement(
                        p_short_, q_, x, log_beta_short_, policy_);
  return front_ * ((1.0 - u) * tail_long -
                   one_minus_half_alpha_ * (1.0 - z) * tail_short);
}

double kernel_eval(const ProblemParams& params, double z, double u) {
  return KernelEvaluator(params)(z, u);
}

double kernel_eval_quadrature(const ProblemParams& params, double z, double u,
                              double rel_tol) {
  validate(params);
  check_range(z, u);
  if (u == z) return 0.0;
  const double alpha = params.alpha;
  const double x0 = std::pow((1.0 - z) / (1.0 - u), alpha / 2.0);
  // v = (1-s)^(1-alpha) absorbs the (1-s)^(-alpha) weight; ds = dv/(1-alpha).
  const double expo = 1.0 / (1.0 - alpha);
  const double two_over_alpha = 2.0 / alpha;
  auto integrand = [&](double v) {
    const double s = 1.0 - std::pow(v, expo);
    const double s2a = std::pow(s, two_over_alpha);
    return (s2a * (1.0 - u) - (1.0 - alpha / 2.0) * (1.0 - z)) * s2a;
  };
  const double v_max = std::pow(1.0 - x0, 1.0 - alpha);
  const double integral =
      quadrature::integrate_adaptive(integrand, 0.0, v_max, rel_tol);
  return (params.m + 1.0) / params.m / std::tgamma(1.0 - alpha) * expo *
         integral;
}

double bound_constant(const ProblemParams& params, double X) {
  validate(params);
  if (!(X >= 0.0) || !(X < 1.0)) {
    throw std::domain_error("cutoff X = " + std::to_string(X) +
                            " must lie in [0, 1)");
  }
  return (params.m + 1.0) / (2.0 * params.m) /
         std::tgamma(2.0 - params.alpha) *
         std::pow(1.0 - X, params.alpha - 1.0);
}

double kernel_bound(const ProblemParams& params, const KernelBound& bound,
                    double z, double u) {
  validate(params);
  check_range(z, u);
  if (z > bound.X) {
    throw std::domain_error("kernel bound only valid for z <= X, got z=" +
                            std::to_string(z) + ", X=" +
                            std::to_string(bound.X));
  }
  return bound.D * std::pow(z - u, 1.0 - params.alpha);
}

double memory_operator(const ProblemParams& params,
                       const std::function<double(double)>& y, double t,
                       double rel_tol) {
  validate(params);
  if (!(t >= 0.0) || !(t <= 1.0)) {
    throw std::domain_error("memory operator requires t in [0, 1]");
  }
  const double alpha = params.alpha;
  const double lower = std::pow(1.0 - t, alpha / 2.0);
  if (lower >= 1.0) return 0.0;
  const double expo = 1.0 / (1.0 - alpha);
  const double two_over_alpha = 2.0 / alpha;
  auto integrand = [&](double v) {
    const double s = 1.0 - std::pow(v, expo);
    // Rounding can push the profile argument infinitesimally outside [0, 1].
    double arg = 1.0 - std::pow(s, -two_over_alpha) * (1.0 - t);
    if (arg < 0.0) arg = 0.0;
    if (arg > 1.0) arg = 1.0;
    return y(arg);
  };
  const double v_max = std::pow(1.0 - lower, 1.0 - alpha);
  return expo / std::tgamma(1.0 - alpha) *
         quadrature::integrate_adaptive(integrand, 0.0, v_max, rel_tol);
}

double rhs_nested(const ProblemParams& params,
                  const std::function<double(double)>& y, double z,
                  double rel_tol) {
  validate(params);
  if (!(z >= 0.0) || !(z <= 1.0)) {
    throw std::domain_error("rhs requires z in [0, 1]");
  }
  if (z == 0.0) return 0.0;
  const double alpha = params.alpha;
  auto integrand = [&](double t) {
    return (alpha / 2.0 + (1.0 - alpha / 2.0) * z - t) *
           memory_operator(params, y, t, rel_tol * 0.1);
  };
  return (params.m + 1.0) / params.m *
         quadrature::integrate_adaptive(integrand, 0.0, z, rel_tol);
}

}  // namespace fpme::kernel
