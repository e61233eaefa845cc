#pragma once

#include <vector>

#include "oscomp/ints.hpp"

namespace oscomp {

/**
 * Exact rational linear programming, dense two-phase simplex with Bland's
 * rule. Variables are free (unrestricted in sign); constraints are a.v >= b
 * or a.v == b. Small problems only: the state cones this serves have a
 * handful of variables and rows.
 */

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  enum class Kind { Ge, Eq };
  std::vector<Rat> a;
  Rat b;
  Kind kind;
};

struct LpResult {
  LpStatus status;
  Rat value;               // objective value when Optimal
  std::vector<Rat> point;  // an optimal point when Optimal
};

// Maximizes c.v subject to the constraints.
LpResult lp_maximize(const std::vector<Rat>& c, const std::vector<LpConstraint>& cons);

}  // namespace oscomp
