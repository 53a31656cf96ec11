#pragma once

#include "scoregate/consistency.hpp"
#include "scoregate/integer_search.hpp"

#include <vector>

namespace scoregate {

/// Mean of per-image score triplets as reported (macro-average), with the
/// decimal precision of the report.
struct AggregatedTriplet {
    Rational acc;
    Rational sens;
    Rational spec;
    int digits = 4;
    RoundingMode rounding = RoundingMode::Round;

    AggregatedTriplet(Rational acc_, Rational sens_, Rational spec_, int digits_,
                      RoundingMode rounding_ = RoundingMode::Round);

    Uncertainty uncertainty() const { return Uncertainty::for_report(digits, rounding); }
};

/// Integer feasibility instance for a mean triplet over m images: variables
/// tp_i in [0, p_i] and tn_i in [0, n_i], three rows banding the mean
/// sensitivity, specificity and accuracy within +-eps. Variable order is
/// tp_1..tp_m, tn_1..tn_m.
LinearProgram build_feasibility_problem(const AggregatedTriplet& t,
                                        const std::vector<ImageCounts>& counts,
                                        const Uncertainty& u);

/// Feasibility verdict for the mean triplet under one hypothesis. A solver
/// budget exhaustion surfaces as passed-with-caveat (`inconclusive` set).
ConsistencyVerdict aggregated_test(const AggregatedTriplet& t,
                                   const std::vector<ImageCounts>& counts, const Uncertainty& u,
                                   RegionTag hypothesis = RegionTag::Custom,
                                   long max_nodes = kDefaultNodeBudget);

/// Substitution check of an integer assignment against the mean bands.
bool verify_aggregate_witness(const AggregatedTriplet& t, const std::vector<ImageCounts>& counts,
                              const Uncertainty& u, const VectorXr& assignment);

}  // namespace scoregate
