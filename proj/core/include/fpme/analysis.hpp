#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fpme/params.hpp"
#include "fpme/solver.hpp"
#include "fpme/theory.hpp"

namespace fpme::analysis {

// Result of one three-grid order study.
struct OrderReport {
  ProblemParams params;
  int N_base = 0;
  double evaluation_point = 1.0;
  double empirical_order = 0.0;
  double theoretical_order = 0.0;
  double diffs[2] = {0.0, 0.0};  // v_N - v_2N, v_2N - v_4N
  double runtime_seconds = 0.0;
  std::string error;  // nonempty when the cell failed; numeric fields then NaN
};

// Knobs shared by order studies.
struct StudyConfig {
  int n_base = 3000;
  double evaluation_point = 1.0;  // must be a node of the N_base grid
  double X = 0.0;                 // cutoff for the theoretical order
};

// log2(|v_N - v_2N| / |v_2N - v_4N|). Throws degenerate_differences_error
// when |v_2N - v_4N| < 1e-300; a vanishing numerator yields -infinity.
double aitken_order(double v_N, double v_2N, double v_4N);

// Solves at N, 2N, 4N, extracts the value at the evaluation point from each,
// and applies aitken_order. Solver errors propagate.
OrderReport empirical_order_study(const ProblemParams& params,
                                  const StudyConfig& config);

// Runs one study per cell, at most `threads` concurrently. Per-cell failures
// are recorded in the report's error field, never fatal to the batch. Output
// sorted by (alpha, m).
std::vector<OrderReport> table_harness(const std::vector<ProblemParams>& cells,
                                       const StudyConfig& config,
                                       int threads = 1);

// One node outside the two-sided envelope.
struct BoundViolation {
  int n = 0;
  double z = 0.0;
  double y = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// All nodes with y_n < C1 z^kappa - tolerance or y_n > C2 z^kappa + tolerance.
std::vector<BoundViolation> bound_check(const solver::DiscreteSolution& solution,
                                        const theory::SolutionBounds& bounds,
                                        double tolerance);

// Published reference orders for the standard 20-cell sweep. The theoretical
// column feeds the `theoretical_order_paper` report field; it is reference
// data only, never an assertion target.
struct ReferenceOrders {
  double alpha = 0.0;
  double m = 0.0;
  double theoretical = 0.0;
  double empirical = 0.0;
};

const std::array<ReferenceOrders, 20>& reference_table();

// The 20 (alpha, m) pairs of the standard sweep, sorted by (alpha, m).
std::vector<ProblemParams> standard_cells();

// Reference row for (alpha, m), if it is one of the standard cells.
std::optional<ReferenceOrders> reference_lookup(const ProblemParams& params);

}  // namespace fpme::analysis
