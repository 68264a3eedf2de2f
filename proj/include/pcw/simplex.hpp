#pragma once

#include <vector>

#include "pcw/rational.hpp"

namespace pcw {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rat> x;
  Rat objective;
};

// minimize c.x subject to A x (rel) b, x >= 0, where rel[i] is -1 for <=,
// 0 for ==, +1 for >=. Exact rational two-phase simplex with Bland's rule,
// so it terminates and certificates are exact.
LPResult solve_lp(const std::vector<std::vector<Rat>>& A,
                  const std::vector<Rat>& b, const std::vector<int>& rel,
                  const std::vector<Rat>& c);

}  // namespace pcw
