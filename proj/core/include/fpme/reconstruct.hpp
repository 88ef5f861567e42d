#pragma once

#include <vector>

#include "fpme/params.hpp"
#include "fpme/solver.hpp"

namespace fpme::reconstruct {

// Self-similar profile U over the similarity coordinate eta = x t^(-alpha/2),
// mapped from a Volterra solution via eta = eta_star (1 - z) and
// U = (m eta_star^2)^(1/m) y. U(0) = 1 and U(eta_star) = 0 hold exactly.
struct PhysicalProfile {
  ProblemParams params;
  double eta_star = 0.0;
  std::vector<double> z;    // ascending, z_0 = 0 .. z_N = 1
  std::vector<double> y;    // solver values at z
  std::vector<double> eta;  // eta_star (1 - z), descending
  std::vector<double> U;    // profile values, U[0] = 0, U[N] = 1
};

// Wetting-front position eta_star = (m y_N^m)^(-1/2). Requires y_N > 0; the
// degenerate all-zero solution has no front.
double wetting_front(const solver::DiscreteSolution& solution);

// Full profile transformation. Requires y_N > 0.
PhysicalProfile profile(const solver::DiscreteSolution& solution);

// u(x, t) = U(x t^(-alpha/2)) by linear interpolation in z; 0 beyond the
// wetting front, 1 at x = 0. Requires t > 0, x >= 0.
double evaluate_u(const PhysicalProfile& profile, double x, double t);

// U nonincreasing along increasing eta (empirical property of valid runs).
bool is_monotone(const PhysicalProfile& profile);

}  // namespace fpme::reconstruct
