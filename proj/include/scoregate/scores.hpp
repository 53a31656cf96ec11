#pragma once

#include "scoregate/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scoregate {

enum class RoundingMode { Round, Truncate, Ceil };

std::string to_string(RoundingMode mode);
RoundingMode rounding_mode_from_string(const std::string& name);

/// Pixel-level confusion counts of one segmentation against one ground truth.
struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;

    ConfusionCounts() = default;
    ConfusionCounts(std::int64_t tp_, std::int64_t tn_, std::int64_t fp_, std::int64_t fn_);

    std::int64_t positives() const { return tp + fn; }
    std::int64_t negatives() const { return tn + fp; }
};

/// Positive/negative pixel totals of one image under one region hypothesis.
struct ImageCounts {
    std::int64_t p = 0;
    std::int64_t n = 0;

    ImageCounts() = default;
    ImageCounts(std::int64_t p_, std::int64_t n_);
};

enum class RegionTag { FovOnly, AllPixels, Custom };

std::string to_string(RegionTag tag);

struct RegionHypothesis {
    RegionTag tag = RegionTag::Custom;
    std::vector<ImageCounts> counts;
};

/// Numerical uncertainty of a figure reported to k decimal places.
struct Uncertainty {
    Rational eps;

    explicit Uncertainty(Rational eps_);

    /// Half ULP under rounding, full ULP under truncation/ceiling.
    static Uncertainty for_report(int digits, RoundingMode mode);
    /// Full ULP regardless of mode, the pessimistic band.
    static Uncertainty full_ulp(int digits);
};

/// A reported (acc, sens, spec) with its decimal precision, the unit of audit.
struct ScoreTriplet {
    Rational acc;
    Rational sens;
    Rational spec;
    int digits = 4;
    RoundingMode rounding = RoundingMode::Round;

    ScoreTriplet(Rational acc_, Rational sens_, Rational spec_, int digits_,
                 RoundingMode rounding_ = RoundingMode::Round);

    Uncertainty uncertainty() const { return Uncertainty::for_report(digits, rounding); }
};

/// Unrounded exact score triplet, the library-internal intermediate.
struct ExactTriplet {
    Rational acc;
    Rational sens;
    Rational spec;

    ScoreTriplet rounded(int digits, RoundingMode mode = RoundingMode::Round) const;
};

/// acc = (tp+tn)/(p+n), sens = tp/p, spec = tn/n, all exact.
/// Throws std::domain_error when p or n is zero.
ExactTriplet scores_from_counts(const ConfusionCounts& c);

/// 2*tp / (2*tp + fp + fn); throws std::domain_error on an all-zero denominator.
Rational dice_from_counts(const ConfusionCounts& c);

/// Rounds x to k decimal places. Round ties break half away from zero.
Rational round_score(const Rational& x, int digits, RoundingMode mode);

/// Componentwise exact mean of per-image triplets (macro-average).
ExactTriplet mean_triplet(const std::vector<ExactTriplet>& triplets);

}  // namespace scoregate
