#pragma once

#include "scoregate/aggregate_consistency.hpp"

#include <vector>

namespace scoregate {

/// Raised when a report cannot be mapped into the FoV domain under the
/// assumed hypothesis; callers treat it as an outlier signal.
class NotAdjustableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interval midpoint with half-width error estimate; the underlying
/// [lower, upper] stays inside [0, 1].
struct AdjustedScore {
    Rational value;
    Rational half_width;

    AdjustedScore() : value(0), half_width(0) {}
    AdjustedScore(const Rational& lower, const Rational& upper);

    Rational lower() const { return value - half_width; }
    Rational upper() const { return value + half_width; }
    bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
};

struct AdjustedTriplet {
    AdjustedScore acc;
    AdjustedScore sens;
    AdjustedScore spec;
    /// False when any endpoint fell back to the LP relaxation (the default
    /// mode, or an integer search that ran out of budget).
    bool exact_integer_endpoints = false;
};

/// Per-image region split: FoV totals and the differences to the all-pixels
/// totals.
struct SplitCounts {
    std::int64_t p_fov = 0;
    std::int64_t n_fov = 0;
    std::int64_t p_diff = 0;
    std::int64_t n_diff = 0;

    SplitCounts() = default;
    SplitCounts(std::int64_t p_fov_, std::int64_t n_fov_, std::int64_t p_diff_,
                std::int64_t n_diff_);

    std::int64_t p_all() const { return p_fov + p_diff; }
    std::int64_t n_all() const { return n_fov + n_diff; }
};

struct AdjustmentOptions {
    /// Upper bound on negatives misclassified outside the FoV, as a fraction
    /// of the FoV vasculature; kept rational inside the solver.
    Rational vessel_leak_fraction = Rational(1, 100);
    /// Optimize the interval endpoints over integer points instead of the
    /// (outer, hence still sound) LP relaxation.
    bool exact_ilp = false;
    long max_nodes = kDefaultNodeBudget;
    /// Skip the all-pixels consistency precheck.
    bool force = false;
};

/// Maps an all-pixels triplet of one image into the FoV domain: for each
/// score, the minimum and maximum of the FoV-domain objective over all
/// confusion splits consistent with the report give the interval.
AdjustedTriplet adjust_image_level(const ScoreTriplet& t, const SplitCounts& s,
                                   const Uncertainty& u, const AdjustmentOptions& opts = {});

/// Aggregated analogue over m images; objectives and bands are the exact
/// 1/m-weighted means.
AdjustedTriplet adjust_aggregated(const AggregatedTriplet& t,
                                  const std::vector<SplitCounts>& splits, const Uncertainty& u,
                                  const AdjustmentOptions& opts = {});

}  // namespace scoregate
