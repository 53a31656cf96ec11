#pragma once

#include "scoregate/linear_program.hpp"

namespace scoregate {

inline constexpr long kDefaultNodeBudget = 100000;

/// Integer solve: LP relaxation, then rounding repair, then branch and bound
/// on the most fractional variable with best-bound pruning. `max_nodes`
/// bounds the number of relaxations solved; exhausting it yields
/// FeasibleRelaxationOnly rather than a guess. Verdicts are exact whenever
/// the search completes. Optimal assignments are re-verified by substitution.
LpOutcome solve_ilp(const LinearProgram& prob, long max_nodes = kDefaultNodeBudget);

}  // namespace scoregate
