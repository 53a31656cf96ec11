#include "scoregate/adjustment.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace scoregate;

namespace {

struct SyntheticImage {
    SplitCounts split;
    std::int64_t tp_fov, tn_fov, tp_diff, tn_diff;

    ExactTriplet fov_scores() const {
        return scores_from_counts(ConfusionCounts{tp_fov, tn_fov, split.n_fov - tn_fov,
                                                  split.p_fov - tp_fov});
    }
    ExactTriplet all_scores() const {
        return scores_from_counts(ConfusionCounts{tp_fov + tp_diff, tn_fov + tn_diff,
                                                  split.n_all() - tn_fov - tn_diff,
                                                  split.p_all() - tp_fov - tp_diff});
    }
};

// Random segmentation of a 100x100 frame with a ~69% FoV, obeying the leak
// assumption: negatives misclassified outside the FoV stay below
// leak_fraction * p_fov.
SyntheticImage random_image(std::mt19937_64& rng, const Rational& leak_fraction) {
    std::uniform_int_distribution<std::int64_t> pf(500, 1200), pdiff(0, 5);
    const std::int64_t p_fov = pf(rng);
    const std::int64_t p_diff = pdiff(rng);
    const SplitCounts split{p_fov, 6900 - p_fov, p_diff, 3100 - p_diff};

    std::uniform_real_distribution<double> sens_rate(0.60, 0.95), spec_rate(0.93, 1.0);
    SyntheticImage img;
    img.split = split;
    img.tp_fov = static_cast<std::int64_t>(sens_rate(rng) * static_cast<double>(split.p_fov));
    img.tn_fov = static_cast<std::int64_t>(spec_rate(rng) * static_cast<double>(split.n_fov));
    std::uniform_int_distribution<std::int64_t> tpd(0, split.p_diff);
    img.tp_diff = tpd(rng);
    const auto max_leak =
        floor_rational(Rational(leak_fraction * split.p_fov)).convert_to<std::int64_t>();
    std::uniform_int_distribution<std::int64_t> leak(0, std::min(max_leak, split.n_diff));
    img.tn_diff = split.n_diff - leak(rng);
    return img;
}

}  // namespace

TEST_CASE("split counts validation") {
    CHECK_NOTHROW(SplitCounts(100, 500, 2, 40));
    CHECK_THROWS_AS(SplitCounts(0, 500, 2, 40), std::invalid_argument);
    CHECK_THROWS_AS(SplitCounts(100, 500, -1, 40), std::invalid_argument);
    const SplitCounts s{100, 500, 2, 40};
    CHECK(s.p_all() == 102);
    CHECK(s.n_all() == 540);
}

TEST_CASE("adjusted score interval bookkeeping") {
    const AdjustedScore a(Rational(1, 4), Rational(3, 4));
    CHECK(a.value == Rational(1, 2));
    CHECK(a.half_width == Rational(1, 4));
    CHECK(a.contains(Rational(1, 3)));
    CHECK_FALSE(a.contains(Rational(9, 10)));
    CHECK_THROWS_AS(AdjustedScore(Rational(3, 4), Rational(1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(AdjustedScore(Rational(1, 2), Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("true FoV scores land inside the adjustment intervals") {
    std::mt19937_64 rng(660601);
    const AdjustmentOptions opts;
    Rational width_sum = 0;
    int width_count = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto img = random_image(rng, opts.vessel_leak_fraction);
        const auto reported = img.all_scores().rounded(4);
        const auto adjusted = adjust_image_level(reported, img.split, reported.uncertainty(),
                                                 opts);
        const auto truth = img.fov_scores();
        CHECK(adjusted.acc.contains(truth.acc));
        CHECK(adjusted.sens.contains(truth.sens));
        CHECK(adjusted.spec.contains(truth.spec));
        width_sum += adjusted.acc.half_width + adjusted.sens.half_width +
                     adjusted.spec.half_width;
        width_count += 3;
    }
    CHECK(width_sum / width_count <= Rational(5, 1000));
}

TEST_CASE("aggregated adjustment of one image equals the image-level path") {
    std::mt19937_64 rng(20230310);
    for (int trial = 0; trial < 25; ++trial) {
        const auto img = random_image(rng, Rational(1, 100));
        const auto reported = img.all_scores().rounded(4);
        const auto u = reported.uncertainty();
        const auto image_path = adjust_image_level(reported, img.split, u);
        const AggregatedTriplet agg(reported.acc, reported.sens, reported.spec, 4);
        const auto aggregate_path = adjust_aggregated(agg, {img.split}, u);
        CHECK(image_path.acc.value == aggregate_path.acc.value);
        CHECK(image_path.acc.half_width == aggregate_path.acc.half_width);
        CHECK(image_path.sens.value == aggregate_path.sens.value);
        CHECK(image_path.sens.half_width == aggregate_path.sens.half_width);
        CHECK(image_path.spec.value == aggregate_path.spec.value);
        CHECK(image_path.spec.half_width == aggregate_path.spec.half_width);
    }
}

TEST_CASE("true mean FoV scores land inside aggregated intervals") {
    std::mt19937_64 rng(44100);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<SplitCounts> splits;
        std::vector<ExactTriplet> fov, all;
        for (int i = 0; i < 5; ++i) {
            const auto img = random_image(rng, Rational(1, 100));
            splits.push_back(img.split);
            fov.push_back(img.fov_scores());
            all.push_back(img.all_scores());
        }
        const auto mean_all = mean_triplet(all);
        const AggregatedTriplet reported(round_score(mean_all.acc, 4, RoundingMode::Round),
                                         round_score(mean_all.sens, 4, RoundingMode::Round),
                                         round_score(mean_all.spec, 4, RoundingMode::Round), 4);
        const auto adjusted = adjust_aggregated(reported, splits, reported.uncertainty());
        const auto truth = mean_triplet(fov);
        CHECK(adjusted.acc.contains(truth.acc));
        CHECK(adjusted.sens.contains(truth.sens));
        CHECK(adjusted.spec.contains(truth.spec));
    }
}

TEST_CASE("intervals widen monotonically in the uncertainty") {
    std::mt19937_64 rng(555);
    const auto img = random_image(rng, Rational(1, 100));
    const auto reported = img.all_scores().rounded(4);
    const auto tight = adjust_image_level(reported, img.split, Uncertainty(Rational(1, 20000)));
    const auto loose = adjust_image_level(reported, img.split, Uncertainty(Rational(1, 2000)));
    CHECK(tight.acc.half_width <= loose.acc.half_width);
    CHECK(tight.sens.half_width <= loose.sens.half_width);
    CHECK(tight.spec.half_width <= loose.spec.half_width);
    CHECK(loose.acc.lower() <= tight.acc.lower());
    CHECK(loose.acc.upper() >= tight.acc.upper());
}

TEST_CASE("intervals shrink as the leak allowance shrinks") {
    std::mt19937_64 rng(808);
    const auto img = random_image(rng, Rational(0));  // no leak at all
    const auto reported = img.all_scores().rounded(4);
    const auto u = reported.uncertainty();
    Rational previous_total(-1);
    for (const auto& frac :
         {Rational(0), Rational(1, 200), Rational(1, 100), Rational(1, 50)}) {
        AdjustmentOptions opts;
        opts.vessel_leak_fraction = frac;
        const auto adjusted = adjust_image_level(reported, img.split, u, opts);
        const Rational total = adjusted.acc.half_width + adjusted.sens.half_width +
                               adjusted.spec.half_width;
        CHECK(total >= previous_total);
        previous_total = total;
    }
}

TEST_CASE("inconsistent reports are rejected as not adjustable") {
    const SplitCounts split{800, 6100, 3, 3097};
    const ScoreTriplet junk(parse_decimal("0.5"), parse_decimal("0.99"), parse_decimal("0.2"),
                            4);
    CHECK_THROWS_AS(adjust_image_level(junk, split, junk.uncertainty()), NotAdjustableError);
    AdjustmentOptions forced;
    forced.force = true;
    // the system itself is infeasible, so forcing still reports not-adjustable
    CHECK_THROWS_AS(adjust_image_level(junk, split, junk.uncertainty(), forced),
                    NotAdjustableError);
}

TEST_CASE("relaxation endpoints sit within 1e-5 of exact integer endpoints") {
    std::mt19937_64 rng(1234321);
    const Rational tol(1, 100000);
    std::uniform_int_distribution<std::int64_t> pf(25000, 32000), pdiff(0, 40);
    std::uniform_real_distribution<double> sens_rate(0.70, 0.85), spec_rate(0.95, 0.99);
    int completed = 0;
    for (int trial = 0; trial < 20; ++trial) {
        // DRIVE-scale aggregated instance; the per-unit objective step
        // 1/(m * p_fov) keeps the integrality gap below the tolerance
        std::vector<SplitCounts> splits;
        std::vector<ExactTriplet> all;
        for (int i = 0; i < 5; ++i) {
            const std::int64_t p_fov = pf(rng), p_diff = pdiff(rng);
            const SplitCounts split{p_fov, 224377 - p_fov, p_diff, 105583 - p_diff};
            const auto tp =
                static_cast<std::int64_t>(sens_rate(rng) * static_cast<double>(p_fov));
            const auto tn =
                static_cast<std::int64_t>(spec_rate(rng) * static_cast<double>(split.n_fov));
            const SyntheticImage img{split, tp, tn, p_diff,
                                     split.n_diff -
                                         std::min<std::int64_t>(p_fov / 200, split.n_diff)};
            splits.push_back(split);
            all.push_back(img.all_scores());
        }
        const auto mean_all = mean_triplet(all);
        const AggregatedTriplet reported(round_score(mean_all.acc, 4, RoundingMode::Round),
                                         round_score(mean_all.sens, 4, RoundingMode::Round),
                                         round_score(mean_all.spec, 4, RoundingMode::Round), 4);
        const auto u = reported.uncertainty();
        const auto relaxed = adjust_aggregated(reported, splits, u);
        AdjustmentOptions exact;
        exact.exact_ilp = true;
        const auto integral = adjust_aggregated(reported, splits, u, exact);
        if (!integral.exact_integer_endpoints) continue;  // budget ran out, nothing to compare
        ++completed;
        for (auto pick : {&AdjustedTriplet::acc, &AdjustedTriplet::sens, &AdjustedTriplet::spec}) {
            const auto& r = relaxed.*pick;
            const auto& e = integral.*pick;
            CHECK(r.lower() <= e.lower());
            CHECK(r.upper() >= e.upper());
            CHECK(e.lower() - r.lower() < tol);
            CHECK(r.upper() - e.upper() < tol);
        }
    }
    CHECK(completed >= 15);
}
