#pragma once

// Exact Phase-I simplex (Bland's rule) for feasibility of G x = b, x >= 0.

#include <cstddef>
#include <vector>

#include "coxm06/linalg.hpp"

namespace coxm06 {

struct FeasibilityResult {
  bool feasible = false;
  RationalVector x;  // G x = b, x >= 0 when feasible
  RationalVector y;  // y^T G >= 0 and y^T b < 0 when infeasible
  std::size_t pivots = 0;
};

FeasibilityResult phase_one(const RationalMatrix& G, const RationalVector& b);

}  // namespace coxm06
