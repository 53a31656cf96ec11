#pragma once

#include "scoregate/linear_program.hpp"

namespace scoregate {

/// Solves the continuous relaxation of `prob` (integrality flags ignored)
/// with a bounded-variable exact simplex under Bland's rule. The returned
/// optimizer is re-verified by substitution; a violation throws.
LpOutcome solve_lp(const LinearProgram& prob);

}  // namespace scoregate
