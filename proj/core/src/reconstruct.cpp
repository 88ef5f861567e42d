#include "fpme/reconstruct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fpme::reconstruct {

double wetting_front(const solver::DiscreteSolution& solution) {
  if (solution.values.empty()) {
    throw std::domain_error("empty solution has no wetting front");
  }
  const double yN = solution.values.back();
  if (!(yN > 0.0)) {
    throw std::domain_error(
        "wetting front undefined: y(1) = " + std::to_string(yN) +
        " must be positive");
  }
  return 1.0 / std::sqrt(solution.params.m * std::pow(yN, solution.params.m));
}

PhysicalProfile profile(const solver::DiscreteSolution& solution) {
  PhysicalProfile prof;
  prof.params = solution.params;
  prof.eta_star = wetting_front(solution);
  const int N = solution.grid.subdivisions;
  const double yN = solution.values.back();
  prof.z.resize(static_cast<std::size_t>(N) + 1);
  prof.y = solution.values;
  prof.eta.resize(prof.z.size());
  prof.U.resize(prof.z.size());
  for (int n = 0; n <= N; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const double z = solution.grid.node(n);
    prof.z[idx] = z;
    prof.eta[idx] = prof.eta_star * (1.0 - z);
    // The profile scale (m eta_star^2)^(1/m) collapses to 1/y_N, so dividing
    // gives U = 1 exactly at z = 1.
    prof.U[idx] = solution.values[idx] / yN;
  }
  return prof;
}

double evaluate_u(const PhysicalProfile& profile, double x, double t) {
  if (!(t > 0.0)) {
    throw std::domain_error("u(x,t) requires t > 0, got t=" +
                            std::to_string(t));
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("u(x,t) requires x >= 0, got x=" +
                            std::to_string(x));
  }
  if (x == 0.0) return 1.0;
  const double eta = x * std::pow(t, -profile.params.alpha / 2.0);
  if (eta >= profile.eta_star) return 0.0;
  const double z = 1.0 - eta / profile.eta_star;
  const auto N = profile.U.size() - 1;
  const double pos = z * static_cast<double>(N);
  auto i = static_cast<std::size_t>(pos);
  if (i >= N) return profile.U[N];
  const double frac = pos - static_cast<double>(i);
  return profile.U[i] + frac * (profile.U[i + 1] - profile.U[i]);
}

bool is_monotone(const PhysicalProfile& profile) {
  // eta descends with the index, so U must ascend with the index.
  for (std::size_t i = 1; i < profile.U.size(); ++i) {
    if (profile.U[i] < profile.U[i - 1]) return false;
  }
  return true;
}

}  // namespace fpme::reconstruct
