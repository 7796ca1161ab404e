#pragma once

#include <stdexcept>
#include <string>

namespace zetaq {

/// A requested precision needs more working digits than the configured budget.
class PrecisionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple-pole residues of a partial-fraction expansion failed to cancel.
class DivergentSeries : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A diagonal coefficient of the triangular system vanished.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs of incompatible shape (polynomial degrees, bound counts).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zetaq
