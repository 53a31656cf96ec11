#include "scoregate/adjustment.hpp"

#include "scoregate/integer_search.hpp"
#include "scoregate/simplex.hpp"

#include <algorithm>

namespace scoregate {

AdjustedScore::AdjustedScore(const Rational& lower, const Rational& upper)
    : value((lower + upper) / 2), half_width((upper - lower) / 2) {
    if (lower > upper) throw std::invalid_argument("inverted adjustment interval");
    if (lower < 0 || upper > 1) throw std::invalid_argument("adjustment interval outside [0,1]");
}

SplitCounts::SplitCounts(std::int64_t p_fov_, std::int64_t n_fov_, std::int64_t p_diff_,
                         std::int64_t n_diff_)
    : p_fov(p_fov_), n_fov(n_fov_), p_diff(p_diff_), n_diff(n_diff_) {
    if (p_fov < 1 || n_fov < 1) throw std::invalid_argument("split needs p_fov, n_fov >= 1");
    if (p_diff < 0 || n_diff < 0) throw std::invalid_argument("split differences must be >= 0");
}

namespace {

// Variable layout: per image i the block [tp_fov, tn_fov, tp_diff, tn_diff]
// at offset 4*i.
LinearProgram build_adjustment_problem(const Rational& acc, const Rational& sens,
                                       const Rational& spec, const Rational& eps,
                                       const std::vector<SplitCounts>& splits,
                                       const Rational& leak_fraction) {
    const auto m = static_cast<std::int64_t>(splits.size());
    LinearProgram prob;
    for (const auto& s : splits) {
        prob.add_variable(0, s.p_fov, true);
        prob.add_variable(0, s.n_fov, true);
        prob.add_variable(0, s.p_diff, true);
        const Rational leak_lo =
            std::max(Rational(0), Rational(s.n_diff - leak_fraction * s.p_fov));
        prob.add_variable(leak_lo, s.n_diff, true);
    }
    const int n_vars = prob.variable_count();
    VectorXr sens_row = VectorXr::Zero(n_vars);
    VectorXr spec_row = VectorXr::Zero(n_vars);
    VectorXr acc_row = VectorXr::Zero(n_vars);
    for (std::int64_t i = 0; i < m; ++i) {
        const auto& s = splits[i];
        const Rational sens_w(1, m * s.p_all());
        const Rational spec_w(1, m * s.n_all());
        const Rational acc_w(1, m * (s.p_all() + s.n_all()));
        sens_row(4 * i) = sens_w;
        sens_row(4 * i + 2) = sens_w;
        spec_row(4 * i + 1) = spec_w;
        spec_row(4 * i + 3) = spec_w;
        for (int j = 0; j < 4; ++j) acc_row(4 * i + j) = acc_w;
    }
    prob.add_row(std::move(sens_row), sens - eps, sens + eps);
    prob.add_row(std::move(spec_row), spec - eps, spec + eps);
    prob.add_row(std::move(acc_row), acc - eps, acc + eps);
    return prob;
}

enum class FovScore { Acc, Sens, Spec };

VectorXr fov_objective(const std::vector<SplitCounts>& splits, FovScore which) {
    const auto m = static_cast<std::int64_t>(splits.size());
    VectorXr c = VectorXr::Zero(4 * m);
    for (std::int64_t i = 0; i < m; ++i) {
        const auto& s = splits[i];
        switch (which) {
            case FovScore::Acc:
                c(4 * i) = c(4 * i + 1) = Rational(1, m * (s.p_fov + s.n_fov));
                break;
            case FovScore::Sens:
                c(4 * i) = Rational(1, m * s.p_fov);
                break;
            case FovScore::Spec:
                c(4 * i + 1) = Rational(1, m * s.n_fov);
                break;
        }
    }
    return c;
}

// min/max of one FoV objective over the constraint polytope
struct Endpoints {
    Rational lower;
    Rational upper;
    bool exact = false;
};

Endpoints optimize_both_ways(LinearProgram& prob, const VectorXr& objective,
                             const AdjustmentOptions& opts) {
    Endpoints out;
    out.exact = opts.exact_ilp;
    for (const auto sense : {Sense::Minimize, Sense::Maximize}) {
        prob.set_objective(objective, sense);
        LpOutcome solved;
        if (opts.exact_ilp) {
            solved = solve_ilp(prob, opts.max_nodes);
            if (solved.status == LpStatus::FeasibleRelaxationOnly) {
                solved = solve_lp(prob);  // outer endpoint, still sound
                out.exact = false;
            }
        } else {
            solved = solve_lp(prob);
        }
        if (solved.status == LpStatus::Infeasible)
            throw NotAdjustableError("report not adjustable under the all-pixels hypothesis");
        (sense == Sense::Minimize ? out.lower : out.upper) = solved.value;
    }
    return out;
}

AdjustedTriplet adjust(const Rational& acc, const Rational& sens, const Rational& spec,
                       const Rational& eps, const std::vector<SplitCounts>& splits,
                       const AdjustmentOptions& opts) {
    auto prob = build_adjustment_problem(acc, sens, spec, eps, splits,
                                         opts.vessel_leak_fraction);
    AdjustedTriplet result;
    result.exact_integer_endpoints = true;
    for (const auto which : {FovScore::Acc, FovScore::Sens, FovScore::Spec}) {
        const auto ends = optimize_both_ways(prob, fov_objective(splits, which), opts);
        AdjustedScore score(ends.lower, ends.upper);
        if (!ends.exact) result.exact_integer_endpoints = false;
        switch (which) {
            case FovScore::Acc: result.acc = score; break;
            case FovScore::Sens: result.sens = score; break;
            case FovScore::Spec: result.spec = score; break;
        }
    }
    return result;
}

}  // namespace

AdjustedTriplet adjust_image_level(const ScoreTriplet& t, const SplitCounts& s,
                                   const Uncertainty& u, const AdjustmentOptions& opts) {
    if (!opts.force) {
        const ImageCounts all{s.p_all(), s.n_all()};
        if (!image_level_test(t, all, u, RegionTag::AllPixels).passed)
            throw NotAdjustableError(
                "report fails the all-pixels consistency test; pass force to adjust anyway");
    }
    return adjust(t.acc, t.sens, t.spec, u.eps, {s}, opts);
}

AdjustedTriplet adjust_aggregated(const AggregatedTriplet& t,
                                  const std::vector<SplitCounts>& splits, const Uncertainty& u,
                                  const AdjustmentOptions& opts) {
    if (splits.empty()) throw std::invalid_argument("aggregated adjustment needs m >= 1 images");
    return adjust(t.acc, t.sens, t.spec, u.eps, splits, opts);
}

}  // namespace scoregate
