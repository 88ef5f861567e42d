#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fpme/analysis.hpp"
#include "fpme/reconstruct.hpp"
#include "fpme/solver.hpp"

namespace fpme::io {

// Shortest decimal form that parses back to the same double (17 significant
// digits); "nan"/"inf" spelled out.
std::string format_full(double v);

// Solution table, header `z,y`, LF line endings.
void write_solution_csv(std::ostream& os, const solver::DiscreteSolution& s);
std::string solution_csv(const solver::DiscreteSolution& s);

// Parses the `z,y` table back. Throws std::runtime_error on malformed input.
struct SolutionTable {
  std::vector<double> z;
  std::vector<double> y;
};
SolutionTable read_solution_csv(std::istream& is);

std::string solution_json(const solver::DiscreteSolution& s);

// Order reports, header
// `alpha,m,N_base,evaluation_point,empirical_order,theoretical_order_computed,
//  theoretical_order_paper,runtime_seconds`.
// The *_paper column is blank for cells outside the reference table. When
// include_runtime is false the runtime column holds 0 (for byte-comparable
// output).
std::string reports_csv(const std::vector<analysis::OrderReport>& reports,
                        bool include_runtime = true);
std::string reports_json(const std::vector<analysis::OrderReport>& reports,
                         bool include_runtime = true);

// Profile table, header `z,y,eta,U`.
std::string profile_csv(const reconstruct::PhysicalProfile& p);
std::string profile_json(const reconstruct::PhysicalProfile& p);

// Sampled physical field, header `x,t,u`.
struct FieldSample {
  double x = 0.0;
  double t = 0.0;
  double u = 0.0;
};
std::string field_csv(const std::vector<FieldSample>& samples);

}  // namespace fpme::io
