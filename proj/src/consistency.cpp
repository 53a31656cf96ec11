#include "scoregate/consistency.hpp"

#include <algorithm>

namespace scoregate {

namespace {

struct ScoreIntervals {
    Rational tp_lo, tp_hi;    // clamped to [0, p]
    Rational tn_lo, tn_hi;    // clamped to [0, n]
    Rational sum_lo, sum_hi;  // accuracy band scaled by p + n
};

ScoreIntervals intervals_of(const ScoreTriplet& t, const ImageCounts& c, const Rational& eps) {
    ScoreIntervals iv;
    iv.tp_lo = std::max(Rational(0), Rational(c.p * (t.sens - eps)));
    iv.tp_hi = std::min(Rational(c.p), Rational(c.p * (t.sens + eps)));
    iv.tn_lo = std::max(Rational(0), Rational(c.n * (t.spec - eps)));
    iv.tn_hi = std::min(Rational(c.n), Rational(c.n * (t.spec + eps)));
    iv.sum_lo = (c.p + c.n) * (t.acc - eps);
    iv.sum_hi = (c.p + c.n) * (t.acc + eps);
    return iv;
}

}  // namespace

ConsistencyVerdict image_level_test(const ScoreTriplet& t, const ImageCounts& c,
                                    const Uncertainty& u, RegionTag hypothesis) {
    const Rational& eps = u.eps;
    const auto iv = intervals_of(t, c, eps);

    ConsistencyVerdict verdict;
    verdict.hypothesis = hypothesis;
    verdict.real_relaxation_only = 2 * eps * c.p < 1 || 2 * eps * c.n < 1;

    if (iv.sum_lo > iv.tp_hi + iv.tn_hi) verdict.failed_conditions.push_back(1);
    if (iv.tp_lo + iv.tn_lo > iv.sum_hi) verdict.failed_conditions.push_back(2);
    if (c.p * (t.sens - eps) > c.p) verdict.failed_conditions.push_back(3);
    if (c.p * (t.sens + eps) < 0) verdict.failed_conditions.push_back(4);
    if (c.n * (t.spec - eps) > c.n) verdict.failed_conditions.push_back(5);
    if (c.n * (t.spec + eps) < 0) verdict.failed_conditions.push_back(6);

    verdict.passed = verdict.failed_conditions.empty();
    return verdict;
}

std::pair<ConsistencyVerdict, ConsistencyVerdict> image_level_test_both(const ScoreTriplet& t,
                                                                        const ImageCounts& fov,
                                                                        const ImageCounts& all,
                                                                        const Uncertainty& u) {
    if (fov.p + fov.n >= all.p + all.n)
        throw std::invalid_argument("the FoV region must be smaller than the full image");
    return {image_level_test(t, fov, u, RegionTag::FovOnly),
            image_level_test(t, all, u, RegionTag::AllPixels)};
}

std::optional<std::pair<std::int64_t, std::int64_t>> find_integer_witness(const ScoreTriplet& t,
                                                                          const ImageCounts& c,
                                                                          const Uncertainty& u) {
    const auto iv = intervals_of(t, c, u.eps);
    const Integer tp_first = ceil_rational(iv.tp_lo);
    const Integer tp_last = floor_rational(iv.tp_hi);
    for (Integer tp = tp_first; tp <= tp_last; ++tp) {
        const Rational lo = std::max(iv.tn_lo, Rational(iv.sum_lo - tp));
        const Rational hi = std::min(iv.tn_hi, Rational(iv.sum_hi - tp));
        const Integer tn = ceil_rational(lo);
        if (tn <= floor_rational(hi))
            return std::make_pair(tp.convert_to<std::int64_t>(), tn.convert_to<std::int64_t>());
    }
    return std::nullopt;
}

}  // namespace scoregate
