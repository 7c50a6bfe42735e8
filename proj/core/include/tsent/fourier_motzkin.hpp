#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsent/rational_system.hpp"

namespace tsent {

struct FmCaps {
  size_t max_rows = 0;            // 0 = unlimited
  size_t max_steps = 0;           // 0 = unlimited
  double time_budget_seconds = 0; // 0 = unlimited
  // LP-backed redundancy removal runs after a step only while the row count
  // stays at or below this; beyond it only syntactic reduction is applied.
  size_t lp_reduction_row_limit = 500;
};

struct FmStep {
  int coordinate = -1;
  size_t rows_before = 0;
  size_t rows_after_combination = 0;
  size_t rows_after_reduction = 0;
};

struct FmOutcome {
  RationalSystem system;           // full projection, or partial progress
  bool completed = false;
  std::string breach;              // "max_rows" | "max_steps" | "time_budget" when capped
  std::vector<FmStep> steps;
  std::vector<int> eliminated;     // coordinates actually eliminated, in order
};

// Exact single-coordinate elimination (equality substitution first, then
// positive/negative row combination). No reduction pass.
RationalSystem fm_eliminate_one(const RationalSystem& sys, int coordinate);

// Eliminates every coordinate in `coordinates`. Unless `fixed_order`, each
// step picks the remaining coordinate minimizing (#positive x #negative)
// inequality rows. A reduction pass runs after every step.
FmOutcome fm_eliminate(RationalSystem sys, std::vector<int> coordinates,
                       const FmCaps& caps = {}, bool fixed_order = false);

// Greedy irredundant subsystem in stored row order: a row is dropped iff it
// is implied by all rows currently kept (equalities need both directions).
// The surviving set depends on the row order, which is therefore part of any
// count this function is quoted for.
RationalSystem remove_redundant(const RationalSystem& sys);

// Syntactic-only pass: normalize, drop zero rows and exact duplicates, keep
// the tighter of rows differing only in rhs.
RationalSystem reduce_syntactic(const RationalSystem& sys);

// Drops the eliminated coordinates from the coefficient vectors (they are
// zero there after elimination), producing a system over the kept ones.
RationalSystem compress_coordinates(const RationalSystem& sys,
                                    const std::vector<int>& eliminated);

}  // namespace tsent
