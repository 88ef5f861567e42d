#include "fpme/solver.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "fpme/errors.hpp"
#include "fpme/theory.hpp"

namespace fpme::solver {

bool is_nondecreasing(const DiscreteSolution& solution) {
  for (std::size_t i = 1; i < solution.values.size(); ++i) {
    if (solution.values[i] < solution.values[i - 1]) return false;
  }
  return true;
}

KernelRowCache::KernelRowCache(const ProblemParams& params, UniformGrid grid)
    : eval_(params), grid_(grid) {
  if (grid_.subdivisions < 1) {
    throw std::domain_error("grid must have at least one subdivision");
  }
  rows_.resize(static_cast<std::size_t>(grid_.subdivisions) + 1);
}

double KernelRowCache::at(int target, int i) {
  if (target < 1 || target > grid_.subdivisions || i < 0 || i >= target) {
    throw std::domain_error("kernel cache index out of range");
  }
  auto& row = rows_[static_cast<std::size_t>(target)];
  if (row.empty()) {
    row.assign(static_cast<std::size_t>(target),
               std::numeric_limits<double>::quiet_NaN());
  }
  double& slot = row[static_cast<std::size_t>(i)];
  if (std::isnan(slot)) {
    slot = eval_(grid_.node(target), grid_.node(i));
  }
  return slot;
}

DiscreteSolution solve_generic(const ProblemParams& params, UniformGrid grid,
                               const QuadratureRule& rule, double y1,
                               KernelRowCache* cache) {
  validate(params);
  if (grid.subdivisions < 2) {
    throw std::domain_error("solve requires N >= 2, got N=" +
                            std::to_string(grid.subdivisions));
  }
  if (!rule.weight) throw std::domain_error("quadrature rule has no weights");
  if (!std::isfinite(y1) || y1 < 0.0) {
    throw std::domain_error("starting value y1 = " + std::to_string(y1) +
                            " must be finite and nonnegative");
  }
  const int N = grid.subdivisions;
  const double h = grid.step();
  const double inv_mp1 = 1.0 / (params.m + 1.0);
  std::optional<kernel::KernelEvaluator> local;
  if (!cache) local.emplace(params);

  std::vector<double> y(static_cast<std::size_t>(N) + 1, 0.0);
  y[1] = y1;
  for (int n = 2; n <= N; ++n) {
    const double zn = grid.node(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double w = rule.weight(n, i);
      if (w == 0.0) continue;
      const double k = cache ? cache->at(n, i) : (*local)(zn, grid.node(i));
      sum += w * k * y[static_cast<std::size_t>(i)];
    }
    sum *= h;
    if (sum < 0.0) {
      throw negative_radicand_error(
          "weighted kernel sum " + std::to_string(sum) +
          " is negative at node " + std::to_string(n));
    }
    y[static_cast<std::size_t>(n)] =
        sum == 0.0 ? 0.0 : std::exp(std::log(sum) * inv_mp1);
  }

  DiscreteSolution solution;
  solution.params = params;
  solution.grid = grid;
  solution.values = std::move(y);
  solution.rule_name = rule.name;
  solution.starting_value_used = y1;
  return solution;
}

QuadratureRule midpoint_rule() {
  QuadratureRule rule;
  rule.name = "midpoint";
  // Target M = 2n+k, k in {0,1}: weight 1/2 on index k, weight 2 on the
  // midpoint indices k+1, k+3, ..., M-1.
  rule.weight = [](int target, int i) -> double {
    const int k = target % 2;
    if (i == k) return 0.5;
    if (i > k && (i - k) % 2 == 1) return 2.0;
    return 0.0;
  };
  rule.weight_bound = 2.0;
  rule.consistency_sign = ConsistencySign::nonpositive;
  return rule;
}

DiscreteSolution solve_midpoint(const ProblemParams& params, int N,
                                KernelRowCache* cache) {
  if (N < 4) {
    throw std::domain_error("midpoint solve requires N >= 4, got N=" +
                            std::to_string(N));
  }
  const UniformGrid grid{N};
  const double y1 = theory::starting_value(params, grid.step());
  return solve_generic(params, grid, midpoint_rule(), y1, cache);
}

}  // namespace fpme::solver
