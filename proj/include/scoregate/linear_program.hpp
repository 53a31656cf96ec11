#pragma once

#include "scoregate/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scoregate {

enum class Sense { Maximize, Minimize };

/// Boxed rational linear program. Every variable carries finite bounds;
/// rows may be bounded on one or both sides.
class LinearProgram {
public:
    struct Variable {
        Rational lower;
        Rational upper;
        bool integral = false;
    };

    struct Row {
        VectorXr coefficients;
        std::optional<Rational> lower;
        std::optional<Rational> upper;
    };

    struct Objective {
        VectorXr coefficients;
        Sense sense = Sense::Maximize;
    };

    int add_variable(Rational lower, Rational upper, bool integral = false);

    void add_row(VectorXr coefficients, std::optional<Rational> lower,
                 std::optional<Rational> upper);

    void set_objective(VectorXr coefficients, Sense sense);

    int variable_count() const { return static_cast<int>(variables_.size()); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::optional<Objective>& objective() const { return objective_; }
    bool has_integral_variables() const;

    Rational objective_value(const VectorXr& x) const;

    /// Exact substitution check of every row and box; integrality included
    /// when check_integrality is set.
    bool satisfies(const VectorXr& x, bool check_integrality = false) const;

    /// Plain-text dump of the instance for offline inspection.
    std::string dump() const;

private:
    std::vector<Variable> variables_;
    std::vector<Row> rows_;
    std::optional<Objective> objective_;
};

enum class LpStatus { Infeasible, Optimal, FeasibleRelaxationOnly };

std::string to_string(LpStatus status);

/// Solver verdict. Optimal carries an exact optimizer that has been
/// re-verified by substitution before being returned.
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    VectorXr assignment;
    /// Best integer point seen before the budget ran out, if any.
    std::optional<VectorXr> incumbent;
};

}  // namespace scoregate
