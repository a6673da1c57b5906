#pragma once

#include <stdexcept>
#include <string>

namespace motifforge {

/// Exploration exceeded a configured budget (exponential-worst-case ops).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tensor shape mismatch; a programming error at the call site.
struct ShapeError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Non-finite value where a finite one is required.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace motifforge
