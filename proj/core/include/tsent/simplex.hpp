#pragma once

#include <vector>

#include "tsent/rational.hpp"
#include "tsent/rational_system.hpp"

namespace tsent {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value{0};
  std::vector<Rational> duals;  // one multiplier per system row when Optimal
};

// Exact rational min c.x subject to the system. Internally solves the dual in
// standard form; a double-precision pass suggests the optimal basis and the
// basis is then verified (and if necessary corrected) in exact arithmetic, so
// results are always exact.
LpResult lp_minimize(const std::vector<Rational>& objective, const RationalSystem& sys);

bool is_feasible(const RationalSystem& sys);

// Is `row` implied by the system? Equality rows require both directions.
bool is_implied(const RationalRow& row, const RationalSystem& sys);

// Double-precision LP for systems whose bounds are not exactly rational.
struct LpResultApprox {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
};
LpResultApprox lp_minimize_approx(const std::vector<double>& objective,
                                  const RationalSystem& sys);

}  // namespace tsent
