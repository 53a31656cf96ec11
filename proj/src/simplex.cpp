#include "scoregate/simplex.hpp"

#include <optional>
#include <vector>

namespace scoregate {

namespace {

// Bounded-variable tableau simplex over exact rationals.
//
// The instance is rewritten as  A x - s = 0  with one slack per row, the
// slack inheriting the row band as its box. Infeasible starting slacks get
// an artificial column each; phase 1 minimizes the artificial sum, phase 2
// freezes the artificials at zero and optimizes the caller's objective.
// Bland's smallest-index rule is used for both entering and blocking
// variables, which rules out cycling.
class BoundedSimplex {
public:
    explicit BoundedSimplex(const LinearProgram& prob) : prob_(prob) {
        const int n = prob.variable_count();
        const int m = prob.row_count();
        num_structural_ = n;
        num_total_ = n + m;

        lower_.resize(num_total_ + m);
        upper_.resize(num_total_ + m);
        for (int j = 0; j < n; ++j) {
            lower_[j] = prob.variables()[j].lower;
            upper_[j] = prob.variables()[j].upper;
        }
        for (int i = 0; i < m; ++i) {
            lower_[n + i] = prob.rows()[i].lower;
            upper_[n + i] = prob.rows()[i].upper;
        }

        // columns: structurals, slacks, then up to m artificials
        tableau_ = MatrixXr::Zero(m, num_total_ + m);
        for (int i = 0; i < m; ++i) {
            tableau_.row(i).head(n) = prob.rows()[i].coefficients.transpose();
            tableau_(i, n + i) = -1;
        }

        value_.assign(num_total_ + m, Rational(0));
        at_upper_.assign(num_total_ + m, false);
        in_basis_.assign(num_total_ + m, false);
        basis_.assign(m, -1);
    }

    LpOutcome solve() {
        if (!run_phase1()) return LpOutcome{LpStatus::Infeasible, Rational(0), {}, {}};
        run_phase2();

        VectorXr x(num_structural_);
        for (int j = 0; j < num_structural_; ++j) x(j) = value_[j];
        if (!prob_.satisfies(x))
            throw std::logic_error("simplex produced an assignment violating the instance");
        return LpOutcome{LpStatus::Optimal, prob_.objective_value(x), std::move(x), {}};
    }

private:
    const LinearProgram& prob_;
    int num_structural_ = 0;
    int num_total_ = 0;  // structurals + slacks
    int num_artificial_ = 0;
    MatrixXr tableau_;  // B^{-1} [A | -I | sigma], maintained by pivoting
    std::vector<std::optional<Rational>> lower_, upper_;
    std::vector<Rational> value_;
    std::vector<bool> at_upper_;
    std::vector<bool> in_basis_;
    std::vector<int> basis_;

    int column_count() const { return num_total_ + num_artificial_; }

    // Nonbasic structurals start at a finite bound; slacks start basic at the
    // row activity, swapped for an artificial when that violates the band.
    bool run_phase1() {
        const int n = num_structural_;
        const int m = prob_.row_count();
        for (int j = 0; j < n; ++j) {
            at_upper_[j] = false;
            value_[j] = *lower_[j];
        }
        std::vector<Rational> cost(num_total_ + m, Rational(0));
        bool need_phase1 = false;
        for (int i = 0; i < m; ++i) {
            Rational activity = 0;
            for (int j = 0; j < n; ++j)
                if (tableau_(i, j) != 0) activity += tableau_(i, j) * value_[j];
            const int slack = n + i;
            if ((!lower_[slack] || activity >= *lower_[slack]) &&
                (!upper_[slack] || activity <= *upper_[slack])) {
                basis_[i] = slack;
                in_basis_[slack] = true;
                value_[slack] = activity;
                continue;
            }
            // pin the slack at the violated bound and absorb the residual
            const bool above = upper_[slack] && activity > *upper_[slack];
            const Rational pin = above ? *upper_[slack] : *lower_[slack];
            value_[slack] = pin;
            at_upper_[slack] = above;
            const Rational residual = activity - pin;  // sign gives sigma
            const int art = num_total_ + num_artificial_;
            ++num_artificial_;
            tableau_(i, art) = residual > 0 ? Rational(-1) : Rational(1);
            lower_[art] = Rational(0);
            upper_[art] = std::nullopt;
            value_[art] = residual > 0 ? residual : Rational(-residual);
            basis_[i] = art;
            in_basis_[art] = true;
            cost[art] = -1;  // maximize -sum(artificials)
            need_phase1 = true;
        }
        // normalize so each basic column is a unit column
        for (int i = 0; i < m; ++i) tableau_.row(i) /= tableau_(i, basis_[i]);
        if (!need_phase1) return true;

        optimize(cost);

        Rational infeasibility = 0;
        for (int j = num_total_; j < column_count(); ++j) infeasibility += value_[j];
        if (infeasibility != 0) return false;
        // artificials are frozen at zero from here on
        for (int j = num_total_; j < column_count(); ++j) upper_[j] = Rational(0);
        return true;
    }

    void run_phase2() {
        if (!prob_.objective()) return;
        std::vector<Rational> cost(column_count(), Rational(0));
        const bool maximize = prob_.objective()->sense == Sense::Maximize;
        for (int j = 0; j < num_structural_; ++j) {
            const Rational& c = prob_.objective()->coefficients(j);
            cost[j] = maximize ? c : Rational(-c);
        }
        optimize(cost);
    }

    void optimize(const std::vector<Rational>& cost) {
        while (true) {
            const int entering = pick_entering(cost);
            if (entering < 0) return;
            step(entering);
        }
    }

    // Bland: smallest-index nonbasic column whose reduced cost improves the
    // (maximized) objective in its free direction.
    int pick_entering(const std::vector<Rational>& cost) {
        const int m = prob_.row_count();
        for (int j = 0; j < column_count(); ++j) {
            if (in_basis_[j]) continue;
            if (lower_[j] && upper_[j] && *lower_[j] == *upper_[j]) continue;  // frozen
            Rational reduced = cost[j];
            for (int i = 0; i < m; ++i)
                if (cost[basis_[i]] != 0 && tableau_(i, j) != 0)
                    reduced -= cost[basis_[i]] * tableau_(i, j);
            if (reduced > 0 && !at_upper_[j]) return j;
            if (reduced < 0 && at_upper_[j]) return j;
        }
        return -1;
    }

    // Increase (or decrease, from an upper bound) the entering variable until
    // it or a basic variable hits a bound; bound flips skip the basis change.
    void step(int entering) {
        const int m = prob_.row_count();
        const int dir = at_upper_[entering] ? -1 : 1;

        std::optional<Rational> best_step;
        int blocking_row = -1;   // -1 means the entering variable's own box
        bool blocking_hits_upper = false;

        if (dir > 0 && upper_[entering])
            best_step = *upper_[entering] - value_[entering];
        else if (dir < 0 && lower_[entering])
            best_step = value_[entering] - *lower_[entering];

        for (int i = 0; i < m; ++i) {
            const Rational rate = dir * tableau_(i, entering);
            if (rate == 0) continue;
            const int b = basis_[i];
            // basic value moves by -rate * step
            std::optional<Rational> limit;
            bool hits_upper = false;
            if (rate > 0 && lower_[b]) {
                limit = (value_[b] - *lower_[b]) / rate;
            } else if (rate < 0 && upper_[b]) {
                limit = (value_[b] - *upper_[b]) / rate;
                hits_upper = true;
            }
            if (!limit) continue;
            const int current = blocking_row < 0 ? entering : basis_[blocking_row];
            if (!best_step || *limit < *best_step || (*limit == *best_step && b < current)) {
                best_step = *limit;
                blocking_row = i;
                blocking_hits_upper = hits_upper;
            }
        }

        if (!best_step)
            throw std::logic_error("unbounded direction in a boxed instance");

        const Rational step_len = *best_step;
        for (int i = 0; i < m; ++i) {
            if (tableau_(i, entering) == 0) continue;
            value_[basis_[i]] -= dir * step_len * tableau_(i, entering);
        }
        value_[entering] += dir * step_len;

        if (blocking_row < 0) {  // bound flip
            at_upper_[entering] = dir > 0;
            return;
        }

        const int leaving = basis_[blocking_row];
        in_basis_[leaving] = false;
        at_upper_[leaving] = blocking_hits_upper;
        value_[leaving] = blocking_hits_upper ? *upper_[leaving] : *lower_[leaving];
        basis_[blocking_row] = entering;
        in_basis_[entering] = true;

        const Rational pivot = tableau_(blocking_row, entering);
        tableau_.row(blocking_row) /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == blocking_row) continue;
            const Rational factor = tableau_(i, entering);
            if (factor != 0) tableau_.row(i) -= factor * tableau_.row(blocking_row);
        }
    }
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& prob) { return BoundedSimplex(prob).solve(); }

}  // namespace scoregate
