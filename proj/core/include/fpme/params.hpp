#pragma once

namespace fpme {

// One equation instance: fractional time order alpha and porous-medium
// exponent m.
struct ProblemParams {
  double alpha = 0.5;  // 0 < alpha < 1
  double m = 2.0;      // m > 1
};

// Throws std::domain_error naming the violated range.
void validate(const ProblemParams& params);

}  // namespace fpme
