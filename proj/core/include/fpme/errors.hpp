#pragma once

#include <stdexcept>

namespace fpme {

// Iterative evaluation (continued fraction, series, quadrature) exhausted its
// iteration budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weighted quadrature sum under an (m+1)-th root came out negative.
class negative_radicand_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Successive refinement differences vanished; no order estimate exists.
class degenerate_differences_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fpme
