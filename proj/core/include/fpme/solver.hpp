#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fpme/kernel.hpp"
#include "fpme/params.hpp"

namespace fpme::solver {

// Uniform subdivision of [0,1] into N cells, nodes z_n = n/N.
struct UniformGrid {
  int subdivisions = 0;

  double step() const { return 1.0 / subdivisions; }
  double node(int i) const { return static_cast<double>(i) / subdivisions; }
  int node_count() const { return subdivisions + 1; }
};

enum class ConsistencySign { nonpositive, nonnegative, unknown };

// Weighted left-open quadrature rule: at target row n the scheme sums
// h * w(n, i) * K(z_n, z_i) * y_i over i = 0..n-1. Every nonzero weight lies
// in (0, weight_bound].
struct QuadratureRule {
  std::string name;
  std::function<double(int n, int i)> weight;
  double weight_bound = 0.0;
  ConsistencySign consistency_sign = ConsistencySign::unknown;
};

// Grid values y_0..y_N of one scheme run, with the inputs that produced them.
struct DiscreteSolution {
  ProblemParams params;
  UniformGrid grid;
  std::vector<double> values;
  std::string rule_name;
  double starting_value_used = 0.0;
};

// y_n <= y_{n+1} for all n (the solution increases from 0; checked
// empirically, not guaranteed).
bool is_nondecreasing(const DiscreteSolution& solution);

// Lazily filled table of kernel values K(z_n, z_i) on one grid; entry (n, i)
// is computed on first access. Memory grows toward O(N^2/2) doubles only for
// rows actually touched. Intended for repeated studies on a fixed grid.
class KernelRowCache {
 public:
  KernelRowCache(const ProblemParams& params, UniformGrid grid);

  // K(z_target, z_i) with 0 <= i < target <= N.
  double at(int target, int i);

  const UniformGrid& grid() const { return grid_; }

 private:
  kernel::KernelEvaluator eval_;
  UniformGrid grid_;
  std::vector<std::vector<double>> rows_;
};

// Runs the weighted scheme y_n = (h sum_{i<n} w(n,i) K(z_n,z_i) y_i)^(1/(m+1))
// for n = 2..N with y_0 = 0 and y_1 given. Summation is in fixed ascending-i
// order; the root is taken as exp(log(S)/(m+1)), S = 0 mapping to 0.
// Throws negative_radicand_error if a weighted sum is negative.
DiscreteSolution solve_generic(const ProblemParams& params, UniformGrid grid,
                               const QuadratureRule& rule, double y1,
                               KernelRowCache* cache = nullptr);

// The two-track midpoint rule: for target M = 2n+k, k in {0,1}, weight 1/2 on
// index k and weight 2 on k+1, k+3, ..., M-1.
QuadratureRule midpoint_rule();

// Midpoint scheme with the asymptotic starting value y_1 = c h^((2-alpha)/m).
// Requires N >= 4.
DiscreteSolution solve_midpoint(const ProblemParams& params, int N,
                                KernelRowCache* cache = nullptr);

}  // namespace fpme::solver
