// Exact rational linear programming.  Two-phase tableau simplex with Bland's
// rule: deterministic, never cycles, never rounds.  Problem sizes here are a
// few dozen variables at most, so the dense tableau is the right tool.

#pragma once

#include "chainfold/rational.hpp"

#include <optional>

namespace chainfold {

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rat value;  // objective at optimum (when Optimal)
  VecQ x;     // an optimal point (when Optimal)
};

// maximize c . x  subject to  A x <= b, x free.
LPResult solve_lp(const MatQ& a, const VecQ& b, const VecQ& c);

// Feasibility of { x : A x <= b }.
bool lp_feasible(const MatQ& a, const VecQ& b);
std::optional<VecQ> lp_feasible_point(const MatQ& a, const VecQ& b);

}  // namespace chainfold
