#include "scoregate/integer_search.hpp"

#include "scoregate/simplex.hpp"

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace scoregate {

namespace {

using Box = std::vector<std::pair<Rational, Rational>>;

LinearProgram with_box(const LinearProgram& base, const Box& box) {
    LinearProgram prob;
    for (std::size_t j = 0; j < box.size(); ++j)
        prob.add_variable(box[j].first, box[j].second, base.variables()[j].integral);
    for (const auto& row : base.rows()) prob.add_row(row.coefficients, row.lower, row.upper);
    if (base.objective()) prob.set_objective(base.objective()->coefficients, base.objective()->sense);
    return prob;
}

std::vector<int> fractional_integrals(const LinearProgram& prob, const VectorXr& x) {
    std::vector<int> out;
    for (int j = 0; j < prob.variable_count(); ++j)
        if (prob.variables()[j].integral && !is_integer(x(j))) out.push_back(j);
    return out;
}

// Round every fractional variable both ways (2^f candidates, clamped to the
// box) and keep the first candidate that satisfies the instance exactly.
std::optional<VectorXr> rounding_repair(const LinearProgram& prob, const Box& box,
                                        const VectorXr& relaxed,
                                        const std::vector<int>& fractional) {
    if (fractional.size() > 12) return std::nullopt;
    const std::size_t combos = std::size_t{1} << fractional.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        VectorXr candidate = relaxed;
        for (std::size_t k = 0; k < fractional.size(); ++k) {
            const int j = fractional[k];
            Rational rounded = (mask >> k) & 1 ? Rational(ceil_rational(relaxed(j)))
                                               : Rational(floor_rational(relaxed(j)));
            rounded = std::max(rounded, box[j].first);
            rounded = std::min(rounded, box[j].second);
            candidate(j) = rounded;
        }
        if (prob.satisfies(candidate, true)) return candidate;
    }
    return std::nullopt;
}

int most_fractional(const std::vector<int>& fractional, const VectorXr& x) {
    int best = fractional.front();
    Rational best_dist(-1);
    for (int j : fractional) {
        const Rational frac = x(j) - floor_rational(x(j));
        const Rational dist = std::min(frac, Rational(1 - frac));
        if (dist > best_dist) {
            best_dist = dist;
            best = j;
        }
    }
    return best;
}

struct Node {
    Box box;
    Rational bound;  // objective value of the parent relaxation
    long id = 0;     // insertion order, for deterministic ties
    bool is_root = false;
};

}  // namespace

LpOutcome solve_ilp(const LinearProgram& prob, long max_nodes) {
    if (max_nodes <= 0) throw std::invalid_argument("integer search needs a positive node budget");
    if (!prob.has_integral_variables()) return solve_lp(prob);

    const bool optimizing = prob.objective().has_value();
    const bool maximizing = optimizing && prob.objective()->sense == Sense::Maximize;
    // Compare so that "better" is always "greater".
    auto better = [&](const Rational& a, const Rational& b) {
        return maximizing || !optimizing ? a > b : a < b;
    };

    Box root_box;
    for (const auto& v : prob.variables()) {
        Rational lo = v.lower, up = v.upper;
        if (v.integral) {
            lo = Rational(ceil_rational(lo));
            up = Rational(floor_rational(up));
            if (lo > up) return LpOutcome{LpStatus::Infeasible, Rational(0), {}, {}};
        }
        root_box.emplace_back(std::move(lo), std::move(up));
    }

    std::optional<VectorXr> incumbent;
    Rational incumbent_value;
    auto offer = [&](const VectorXr& x) {
        const Rational v = prob.objective_value(x);
        if (!incumbent || better(v, incumbent_value)) {
            incumbent = x;
            incumbent_value = v;
        }
    };
    auto finish_optimal = [&]() {
        if (!prob.satisfies(*incumbent, true))
            throw std::logic_error("integer search produced an infeasible optimizer");
        return LpOutcome{LpStatus::Optimal, incumbent_value, *incumbent, {}};
    };

    // Best-bound ordering for optimization (DFS for pure feasibility, via id).
    auto node_after = [&](const Node& a, const Node& b) {
        if (!optimizing) return a.id < b.id;  // larger id first: depth first
        if (a.bound != b.bound) return !better(a.bound, b.bound);
        return a.id > b.id;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(node_after)> open(node_after);
    long next_id = 0;
    long nodes_used = 0;
    open.push(Node{std::move(root_box), Rational(0), next_id++, true});

    while (!open.empty()) {
        Node node = open.top();
        open.pop();

        if (optimizing && incumbent && !node.is_root && !better(node.bound, incumbent_value))
            continue;  // cannot beat the incumbent

        if (nodes_used >= max_nodes) {
            LpOutcome out{LpStatus::FeasibleRelaxationOnly, Rational(0), {}, {}};
            if (incumbent) {
                out.incumbent = incumbent;
                out.value = incumbent_value;
            }
            return out;
        }
        ++nodes_used;

        const LinearProgram node_prob = with_box(prob, node.box);
        LpOutcome relaxed = solve_lp(node_prob);
        if (relaxed.status == LpStatus::Infeasible) {
            if (node.is_root) return LpOutcome{LpStatus::Infeasible, Rational(0), {}, {}};
            continue;
        }

        const auto fractional = fractional_integrals(prob, relaxed.assignment);
        if (fractional.empty()) {
            if (!optimizing) {
                if (!prob.satisfies(relaxed.assignment, true))
                    throw std::logic_error("integer search produced an infeasible witness");
                return LpOutcome{LpStatus::Optimal, Rational(0), relaxed.assignment, {}};
            }
            offer(relaxed.assignment);
            if (node.is_root) return finish_optimal();  // relaxation optimum is integral
            continue;
        }

        if (optimizing && incumbent && !better(relaxed.value, incumbent_value)) continue;

        if (node.is_root) {
            if (auto repaired = rounding_repair(prob, node.box, relaxed.assignment, fractional)) {
                if (!optimizing)
                    return LpOutcome{LpStatus::Optimal, Rational(0), *repaired, {}};
                offer(*repaired);
            }
        }

        const int j = most_fractional(fractional, relaxed.assignment);
        const Integer split = floor_rational(relaxed.assignment(j));
        Node down{node.box, relaxed.value, next_id++, false};
        down.box[j].second = std::min(down.box[j].second, Rational(split));
        Node up{std::move(node.box), relaxed.value, next_id++, false};
        up.box[j].first = std::max(up.box[j].first, Rational(split + 1));
        if (down.box[j].first <= down.box[j].second) open.push(std::move(down));
        if (up.box[j].first <= up.box[j].second) open.push(std::move(up));
    }

    if (optimizing && incumbent) return finish_optimal();
    return LpOutcome{LpStatus::Infeasible, Rational(0), {}, {}};
}

}  // namespace scoregate
