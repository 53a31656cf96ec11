#include "scoregate/scores.hpp"

namespace scoregate {

std::string to_string(RoundingMode mode) {
    switch (mode) {
        case RoundingMode::Round: return "round";
        case RoundingMode::Truncate: return "truncate";
        case RoundingMode::Ceil: return "ceil";
    }
    return "round";
}

RoundingMode rounding_mode_from_string(const std::string& name) {
    if (name == "round" || name.empty()) return RoundingMode::Round;
    if (name == "truncate") return RoundingMode::Truncate;
    if (name == "ceil") return RoundingMode::Ceil;
    throw std::invalid_argument("unknown rounding mode: " + name);
}

std::string to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::FovOnly: return "fov";
        case RegionTag::AllPixels: return "all";
        case RegionTag::Custom: return "custom";
    }
    return "custom";
}

ConfusionCounts::ConfusionCounts(std::int64_t tp_, std::int64_t tn_, std::int64_t fp_,
                                 std::int64_t fn_)
    : tp(tp_), tn(tn_), fp(fp_), fn(fn_) {
    if (tp < 0 || tn < 0 || fp < 0 || fn < 0)
        throw std::invalid_argument("confusion counts must be non-negative");
}

ImageCounts::ImageCounts(std::int64_t p_, std::int64_t n_) : p(p_), n(n_) {
    if (p < 1 || n < 1) throw std::invalid_argument("image counts require p >= 1 and n >= 1");
}

Uncertainty::Uncertainty(Rational eps_) : eps(std::move(eps_)) {
    if (eps <= 0) throw std::invalid_argument("uncertainty must be positive");
}

Uncertainty Uncertainty::for_report(int digits, RoundingMode mode) {
    Rational ulp(1, pow10(digits));
    return Uncertainty(mode == RoundingMode::Round ? ulp / 2 : ulp);
}

Uncertainty Uncertainty::full_ulp(int digits) { return Uncertainty(Rational(1, pow10(digits))); }

namespace {

void check_score_range(const Rational& x, const char* name) {
    if (x < 0 || x > 1) throw std::invalid_argument(std::string(name) + " outside [0,1]");
}

void check_representable(const Rational& x, int digits, const char* name) {
    if (!is_integer(Rational(x * pow10(digits))))
        throw std::invalid_argument(std::string(name) +
                                    " not representable at the declared decimal precision");
}

}  // namespace

ScoreTriplet::ScoreTriplet(Rational acc_, Rational sens_, Rational spec_, int digits_,
                           RoundingMode rounding_)
    : acc(std::move(acc_)),
      sens(std::move(sens_)),
      spec(std::move(spec_)),
      digits(digits_),
      rounding(rounding_) {
    if (digits < 3) throw std::invalid_argument("reported scores need at least 3 decimal places");
    check_score_range(acc, "acc");
    check_score_range(sens, "sens");
    check_score_range(spec, "spec");
    check_representable(acc, digits, "acc");
    check_representable(sens, digits, "sens");
    check_representable(spec, digits, "spec");
}

ScoreTriplet ExactTriplet::rounded(int digits, RoundingMode mode) const {
    return ScoreTriplet(round_score(acc, digits, mode), round_score(sens, digits, mode),
                        round_score(spec, digits, mode), digits, mode);
}

ExactTriplet scores_from_counts(const ConfusionCounts& c) {
    const std::int64_t p = c.positives();
    const std::int64_t n = c.negatives();
    if (p == 0 || n == 0)
        throw std::domain_error("degenerate counts: a region hypothesis needs p > 0 and n > 0");
    return ExactTriplet{Rational(c.tp + c.tn, p + n), Rational(c.tp, p), Rational(c.tn, n)};
}

Rational dice_from_counts(const ConfusionCounts& c) {
    const std::int64_t den = 2 * c.tp + c.fp + c.fn;
    if (den == 0) throw std::domain_error("degenerate counts: dice denominator is zero");
    return Rational(2 * c.tp, den);
}

Rational round_score(const Rational& x, int digits, RoundingMode mode) {
    const Integer scale = pow10(digits);
    const Rational scaled = x * scale;
    Integer units;
    switch (mode) {
        case RoundingMode::Round: {
            // half away from zero
            const Rational shifted =
                scaled >= 0 ? Rational(scaled + Rational(1, 2)) : Rational(scaled - Rational(1, 2));
            units = scaled >= 0 ? floor_rational(shifted) : ceil_rational(shifted);
            break;
        }
        case RoundingMode::Truncate:
            units = scaled >= 0 ? floor_rational(scaled) : ceil_rational(scaled);
            break;
        case RoundingMode::Ceil:
            units = ceil_rational(scaled);
            break;
    }
    return Rational(units, scale);
}

ExactTriplet mean_triplet(const std::vector<ExactTriplet>& triplets) {
    if (triplets.empty()) throw std::invalid_argument("mean of an empty triplet list");
    Rational acc = 0, sens = 0, spec = 0;
    for (const auto& t : triplets) {
        acc += t.acc;
        sens += t.sens;
        spec += t.spec;
    }
    const auto m = static_cast<std::int64_t>(triplets.size());
    return ExactTriplet{acc / m, sens / m, spec / m};
}

}  // namespace scoregate
