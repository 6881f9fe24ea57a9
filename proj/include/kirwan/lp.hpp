#pragma once

// Small exact-rational linear programming: two-phase simplex with Bland's
// rule on standard form min c'x s.t. Ax = b, x >= 0. Sized for desk-scale
// feasibility and redundancy questions, not performance.

#include "kirwan/numeric.hpp"

namespace kirwan {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> x;
};

LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c);

/// Exact test whether 0 lies in the convex hull of the given points.
bool zero_in_convex_hull(const std::vector<RatVec>& points);

/// Farkas test: is <target, x> >= 0 implied by { <g, x> >= 0 for g in
/// generators } together with { <e, x> = 0 for e in equalities }? Exact;
/// used by the optional redundancy pruning pass.
bool cone_implies(const std::vector<RatVec>& generators, const std::vector<RatVec>& equalities,
                  const RatVec& target);

}  // namespace kirwan
