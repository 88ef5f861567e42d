#include "fpme/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fpme {

void validate(const ProblemParams& params) {
  if (!std::isfinite(params.alpha) || !(params.alpha > 0.0) ||
      !(params.alpha < 1.0)) {
    throw std::domain_error("alpha = " + std::to_string(params.alpha) +
                            " violates 0 < alpha < 1");
  }
  // m = 1 itself is accepted: the standard 20-cell sweep uses it even though
  // the admissibility theory needs m > 2 - alpha.
  if (!std::isfinite(params.m) || !(params.m >= 1.0)) {
    throw std::domain_error("m = " + std::to_string(params.m) +
                            " violates m >= 1");
  }
}

}  // namespace fpme
