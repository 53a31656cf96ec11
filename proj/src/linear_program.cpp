#include "scoregate/linear_program.hpp"

#include <sstream>

namespace scoregate {

int LinearProgram::add_variable(Rational lower, Rational upper, bool integral) {
    if (lower > upper) throw std::invalid_argument("variable with empty box");
    variables_.push_back(Variable{std::move(lower), std::move(upper), integral});
    return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::add_row(VectorXr coefficients, std::optional<Rational> lower,
                            std::optional<Rational> upper) {
    if (coefficients.size() != variable_count())
        throw std::invalid_argument("row length does not match variable count");
    if (!lower && !upper) throw std::invalid_argument("row without bounds");
    if (lower && upper && *lower > *upper) throw std::invalid_argument("row with empty band");
    rows_.push_back(Row{std::move(coefficients), std::move(lower), std::move(upper)});
}

void LinearProgram::set_objective(VectorXr coefficients, Sense sense) {
    if (coefficients.size() != variable_count())
        throw std::invalid_argument("objective length does not match variable count");
    objective_ = Objective{std::move(coefficients), sense};
}

bool LinearProgram::has_integral_variables() const {
    for (const auto& v : variables_)
        if (v.integral) return true;
    return false;
}

Rational LinearProgram::objective_value(const VectorXr& x) const {
    if (!objective_) return Rational(0);
    return objective_->coefficients.dot(x);
}

bool LinearProgram::satisfies(const VectorXr& x, bool check_integrality) const {
    if (x.size() != variable_count()) return false;
    for (int j = 0; j < variable_count(); ++j) {
        const auto& v = variables_[j];
        if (x(j) < v.lower || x(j) > v.upper) return false;
        if (check_integrality && v.integral && !is_integer(x(j))) return false;
    }
    for (const auto& row : rows_) {
        const Rational activity = row.coefficients.dot(x);
        if (row.lower && activity < *row.lower) return false;
        if (row.upper && activity > *row.upper) return false;
    }
    return true;
}

std::string LinearProgram::dump() const {
    std::ostringstream out;
    if (objective_) {
        out << (objective_->sense == Sense::Maximize ? "maximize" : "minimize");
        for (int j = 0; j < variable_count(); ++j)
            if (objective_->coefficients(j) != 0)
                out << " " << objective_->coefficients(j) << "*x" << j;
        out << "\n";
    } else {
        out << "feasibility\n";
    }
    for (const auto& row : rows_) {
        if (row.lower) out << *row.lower << " <= ";
        bool first = true;
        for (int j = 0; j < variable_count(); ++j) {
            if (row.coefficients(j) == 0) continue;
            if (!first) out << " + ";
            out << row.coefficients(j) << "*x" << j;
            first = false;
        }
        if (first) out << "0";
        if (row.upper) out << " <= " << *row.upper;
        out << "\n";
    }
    for (int j = 0; j < variable_count(); ++j) {
        const auto& v = variables_[j];
        out << v.lower << " <= x" << j << " <= " << v.upper;
        if (v.integral) out << " integer";
        out << "\n";
    }
    return out.str();
}

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Optimal: return "optimal";
        case LpStatus::FeasibleRelaxationOnly: return "relaxation-only";
    }
    return "infeasible";
}

}  // namespace scoregate
