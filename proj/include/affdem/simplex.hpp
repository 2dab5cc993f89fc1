#ifndef AFFDEM_SIMPLEX_HPP
#define AFFDEM_SIMPLEX_HPP

#include <vector>

#include "affdem/rational.hpp"

namespace affdem {

/// Outcome of the feasibility problem A x = b, x >= 0.
struct FeasibilityResult {
  bool feasible = false;
  RationalVector x;       ///< a solution when feasible
  RationalVector farkas;  ///< y with y A <= 0 and y b > 0 when infeasible
};

/// Exact phase-one simplex with Bland's rule.  A is given row by row; every
/// row must have the same length.
FeasibilityResult solve_feasibility(const std::vector<RationalVector>& A, const RationalVector& b);

} // namespace affdem

#endif // AFFDEM_SIMPLEX_HPP
