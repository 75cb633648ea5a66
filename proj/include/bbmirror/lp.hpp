#pragma once

// Small dense exact simplex solver. Only what the certificate searches need:
// every problem handed to it has a feasible origin.

#include <optional>
#include <vector>

#include "bbmirror/exactalg.hpp"

namespace bbm::lp {

struct Solution {
  bool unbounded = false;
  Rat value;
  RatVec x;
};

/// maximize c.x  subject to  A x <= b, x >= 0, with b >= 0 (origin feasible).
/// Bland's rule; exact.
Solution maximize(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c);

/// Finds y (free, length dim) with
///   s.y > 0 for each s in strict, w.y >= 0 for each w in weak, e.y = 0 for each e in equal.
/// Returns nullopt when the strict system is infeasible.
std::optional<RatVec> strict_feasible(const std::vector<IntVec>& strict, const std::vector<IntVec>& weak,
                                      const std::vector<IntVec>& equal, std::size_t dim);

}  // namespace bbm::lp
