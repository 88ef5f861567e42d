#pragma once

#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace fpme::quadrature {

// Depth-adaptive Gauss-Kronrod on [a, b]; the integrand must be smooth up to
// the endpoints. Returns 0 for an empty interval.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                          int max_depth = 15) {
  if (!(b > a)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, max_depth, rel_tol);
}

// tanh-sinh on [a, b]; tolerates integrable endpoint singularities and
// endpoint derivative blowups.
template <typename F>
double integrate_endpoint_singular(F&& f, double a, double b,
                                   double rel_tol = 1e-10) {
  if (!(b > a)) return 0.0;
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(std::forward<F>(f), a, b, rel_tol);
}

}  // namespace fpme::quadrature
