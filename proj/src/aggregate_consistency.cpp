#include "scoregate/aggregate_consistency.hpp"

#include "scoregate/integer_search.hpp"

namespace scoregate {

AggregatedTriplet::AggregatedTriplet(Rational acc_, Rational sens_, Rational spec_, int digits_,
                                     RoundingMode rounding_)
    : acc(std::move(acc_)),
      sens(std::move(sens_)),
      spec(std::move(spec_)),
      digits(digits_),
      rounding(rounding_) {
    if (digits < 1) throw std::invalid_argument("aggregated scores need at least 1 decimal place");
    for (const auto* s : {&acc, &sens, &spec}) {
        if (*s < 0 || *s > 1) throw std::invalid_argument("aggregated score outside [0,1]");
        if (!is_integer(Rational(*s * pow10(digits))))
            throw std::invalid_argument(
                "aggregated score not representable at the declared decimal precision");
    }
}

LinearProgram build_feasibility_problem(const AggregatedTriplet& t,
                                        const std::vector<ImageCounts>& counts,
                                        const Uncertainty& u) {
    if (counts.empty()) throw std::invalid_argument("aggregated test needs at least one image");
    const auto m = static_cast<std::int64_t>(counts.size());

    LinearProgram prob;
    for (const auto& c : counts) prob.add_variable(0, c.p, true);   // tp_i
    for (const auto& c : counts) prob.add_variable(0, c.n, true);   // tn_i

    const int n_vars = prob.variable_count();
    VectorXr sens_row = VectorXr::Zero(n_vars);
    VectorXr spec_row = VectorXr::Zero(n_vars);
    VectorXr acc_row = VectorXr::Zero(n_vars);
    for (std::int64_t i = 0; i < m; ++i) {
        sens_row(i) = Rational(1, m * counts[i].p);
        spec_row(m + i) = Rational(1, m * counts[i].n);
        acc_row(i) = Rational(1, m * (counts[i].p + counts[i].n));
        acc_row(m + i) = acc_row(i);
    }
    prob.add_row(std::move(sens_row), t.sens - u.eps, t.sens + u.eps);
    prob.add_row(std::move(spec_row), t.spec - u.eps, t.spec + u.eps);
    prob.add_row(std::move(acc_row), t.acc - u.eps, t.acc + u.eps);
    return prob;
}

ConsistencyVerdict aggregated_test(const AggregatedTriplet& t,
                                   const std::vector<ImageCounts>& counts, const Uncertainty& u,
                                   RegionTag hypothesis, long max_nodes) {
    const auto prob = build_feasibility_problem(t, counts, u);
    const auto out = solve_ilp(prob, max_nodes);

    ConsistencyVerdict verdict;
    verdict.hypothesis = hypothesis;
    for (const auto& c : counts) {
        if (2 * u.eps * c.p < 1 || 2 * u.eps * c.n < 1) {
            verdict.real_relaxation_only = true;
            break;
        }
    }
    switch (out.status) {
        case LpStatus::Optimal:
            if (!verify_aggregate_witness(t, counts, u, out.assignment))
                throw std::logic_error("aggregated witness failed the substitution check");
            verdict.passed = true;
            break;
        case LpStatus::Infeasible:
            verdict.passed = false;
            verdict.failed_conditions = {0};  // the coupled system as a whole
            break;
        case LpStatus::FeasibleRelaxationOnly:
            verdict.passed = true;
            verdict.inconclusive = true;
            break;
    }
    return verdict;
}

bool verify_aggregate_witness(const AggregatedTriplet& t, const std::vector<ImageCounts>& counts,
                              const Uncertainty& u, const VectorXr& assignment) {
    const auto m = static_cast<std::int64_t>(counts.size());
    if (assignment.size() != 2 * m) return false;
    Rational sens_sum = 0, spec_sum = 0, acc_sum = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const Rational& tp = assignment(i);
        const Rational& tn = assignment(m + i);
        if (!is_integer(tp) || !is_integer(tn)) return false;
        if (tp < 0 || tp > counts[i].p || tn < 0 || tn > counts[i].n) return false;
        sens_sum += tp / counts[i].p;
        spec_sum += tn / counts[i].n;
        acc_sum += (tp + tn) / (counts[i].p + counts[i].n);
    }
    auto in_band = [&](const Rational& sum, const Rational& center) {
        const Rational mean = sum / m;
        return center - u.eps <= mean && mean <= center + u.eps;
    };
    return in_band(sens_sum, t.sens) && in_band(spec_sum, t.spec) && in_band(acc_sum, t.acc);
}

}  // namespace scoregate
