#pragma once

#include <random>
#include <vector>

#include "fpme/params.hpp"

namespace fpme::test {

// int_0^x (1-t)^(a-1) t^(b-1) dt by adaptive quadrature, with power
// substitutions removing both endpoint singularities. Independent of the
// continued-fraction implementation under test.
double incomplete_beta_quad(double x, double a, double b);

// int_x^1 (1-t)^(a-1) t^(b-1) dt, same technique.
double beta_tail_quad(double x, double a, double b);

// Literal transcription of the two-track midpoint recurrence
//   y_{2n+k}^{m+1} = h/2 K_{2n+k,k} y_k + 2h sum_{i=1}^{n} K_{2n+k,2i+k-1} y_{2i+k-1}
// walked index by index, with the asymptotic starting value. Returns y_0..y_N.
std::vector<double> midpoint_transcription(const ProblemParams& params, int N);

// Direct O(n^2) iteration of f(n) = A n^gamma sum_{i=1}^{n-1} f(i)/i^beta + 1.
std::vector<double> amplification_recurrence(double A, double beta,
                                             double gamma, long n_max);

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace fpme::test
