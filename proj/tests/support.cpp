#include "support.hpp"

#include <cmath>
#include <stdexcept>

#include "fpme/kernel.hpp"
#include "fpme/quadrature.hpp"
#include "fpme/theory.hpp"

namespace fpme::test {

namespace {

constexpr double kOracleTol = 1e-11;

// Piece of the beta integrand over [lo, hi] with hi <= 1/2, substituted
// t = v^(1/b) so the t=0 singularity disappears.
double left_piece(double lo, double hi, double a, double b) {
  if (!(hi > lo)) return 0.0;
  auto f = [&](double v) {
    return std::pow(1.0 - std::pow(v, 1.0 / b), a - 1.0);
  };
  return quadrature::integrate_adaptive(f, std::pow(lo, b), std::pow(hi, b),
                                        kOracleTol) /
         b;
}

// Piece over [lo, hi] with lo >= 1/2, substituted 1-t = w^(1/a).
double right_piece(double lo, double hi, double a, double b) {
  if (!(hi > lo)) return 0.0;
  auto f = [&](double w) {
    return std::pow(1.0 - std::pow(w, 1.0 / a), b - 1.0);
  };
  return quadrature::integrate_adaptive(f, std::pow(1.0 - hi, a),
                                        std::pow(1.0 - lo, a), kOracleTol) /
         a;
}

}  // namespace

double incomplete_beta_quad(double x, double a, double b) {
  if (!(x >= 0.0) || !(x <= 1.0)) throw std::domain_error("x outside [0,1]");
  const double split = std::min(x, 0.5);
  return left_piece(0.0, split, a, b) + right_piece(0.5, x, a, b);
}

double beta_tail_quad(double x, double a, double b) {
  if (!(x >= 0.0) || !(x <= 1.0)) throw std::domain_error("x outside [0,1]");
  if (x < 0.5) {
    return left_piece(x, 0.5, a, b) + right_piece(0.5, 1.0, a, b);
  }
  return right_piece(x, 1.0, a, b);
}

std::vector<double> midpoint_transcription(const ProblemParams& params,
                                           int N) {
  const double h = 1.0 / N;
  const kernel::KernelEvaluator K(params);
  std::vector<double> y(static_cast<std::size_t>(N) + 1, 0.0);
  y[1] = theory::starting_value(params, h);
  auto node = [&](int i) { return static_cast<double>(i) / N; };
  for (int M = 2; M <= N; ++M) {
    const int k = M % 2;
    const int n = (M - k) / 2;
    double s = 0.5 * h * K(node(M), node(k)) * y[static_cast<std::size_t>(k)];
    for (int i = 1; i <= n; ++i) {
      const int j = 2 * i + k - 1;
      s += 2.0 * h * K(node(M), node(j)) * y[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(M)] =
        s <= 0.0 ? 0.0 : std::pow(s, 1.0 / (params.m + 1.0));
  }
  return y;
}

std::vector<double> amplification_recurrence(double A, double beta,
                                             double gamma, long n_max) {
  std::vector<double> f(static_cast<std::size_t>(n_max) + 1, 0.0);
  f[1] = 1.0;
  for (long n = 2; n <= n_max; ++n) {
    double s = 0.0;
    for (long i = 1; i < n; ++i) {
      s += f[static_cast<std::size_t>(i)] /
           std::pow(static_cast<double>(i), beta);
    }
    f[static_cast<std::size_t>(n)] =
        A * std::pow(static_cast<double>(n), gamma) * s + 1.0;
  }
  return f;
}

}  // namespace fpme::test
