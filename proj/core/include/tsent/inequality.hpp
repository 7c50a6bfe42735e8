#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsent/dag.hpp"
#include "tsent/entropy.hpp"
#include "tsent/rational.hpp"
#include "tsent/rational_system.hpp"
#include "tsent/subset.hpp"

namespace tsent {

// Linear constraint over entropy coordinates, indexed by subset masks of a
// declared variable universe. Reads "sum coeff * H(subset) REL bound".
struct LinearInequality {
  std::map<SubsetMask, Rational> coeffs;
  Rational bound{0};
  Relation rel = Relation::GreaterEqual;
  std::string tag;          // elemental-monotonicity | elemental-submodularity |
                            // causal-shannon | causal-tsallis | derived
  bool exact_bound = true;  // false when the bound is a 50-digit decimal snap
};

struct InequalitySystem {
  std::vector<std::string> universe;
  std::vector<LinearInequality> rows;

  bool exact_bounds() const;
  // Appends the other system's rows; universes must match.
  void append(const InequalitySystem& other);
};

// The n + n(n-1)2^{n-3} elemental Shannon constraints: top monotonicities
// H(all) - H(all\i) >= 0, then elemental submodularities I(i:j|K) >= 0 with
// i < j and K enumerated by (size, mask).
InequalitySystem shannon_elemental(const std::vector<std::string>& universe);

// One equality per non-trivial Markov statement, expanded into coordinates.
InequalitySystem shannon_causal(const Dag& dag);

// One inequality -I_q(X:Y|Z) >= -f(q, dX, dY) per d-separation statement.
// q >= 1 required; dims override the DAG node cardinalities when non-empty.
InequalitySystem tsallis_causal(const Dag& dag, double q,
                                const std::vector<int>& dims = {});

// Coefficient vector of I(X:Y|Z) over a universe (Shannon/Tsallis share it).
std::map<SubsetMask, Rational> cmi_coefficients(std::span<const std::string> universe,
                                                const CiStatement& st);

struct RowSlack {
  size_t row = 0;
  double slack = 0.0;   // lhs - bound (for = rows, signed deviation)
  bool violated = false;
  std::string tag;
};

struct EvaluationReport {
  std::vector<RowSlack> slacks;
  size_t violation_count = 0;
  double worst_slack = 0.0;
};

EvaluationReport evaluate(const InequalitySystem& sys, const EntropyVector& v,
                          double tol = 1e-9);

struct AuditEntry {
  size_t row = 0;
  bool redundant = false;
};

// LP implication check of each row against all the others. Exact when all
// bounds are exact; otherwise the double-precision LP decides at 1e-9.
std::vector<AuditEntry> nonredundancy_audit(const InequalitySystem& sys);

// Dense coordinate form over masks 1..2^n-1 (coordinate k = mask k+1).
RationalSystem to_rational_system(const InequalitySystem& sys);

// f(q, dx, dy) snapped to `digits` significant decimals (used for bounds at
// irrational q).
Rational bound_f_decimal(double q, long dx, long dy, int digits = 50);

}  // namespace tsent
