#pragma once

#include "scoregate/scores.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace scoregate {

/// Per-triplet verdict of a consistency test. Condition identifiers C1..C6
/// follow the eliminated system top to bottom: C1/C2 couple accuracy with
/// the other two scores, C3/C4 bound sensitivity, C5/C6 bound specificity.
/// Identifier 0 stands for the coupled system as a whole (aggregated test,
/// which has no per-condition breakdown).
struct ConsistencyVerdict {
    bool passed = false;
    std::vector<int> failed_conditions;  // subset of {0..6}; empty iff passed
    RegionTag hypothesis = RegionTag::Custom;
    /// Set when the score bands are so tight relative to the counts that the
    /// real relaxation may admit no integer witness (2*eps*p < 1 or
    /// 2*eps*n < 1); the verdict then certifies the relaxation only.
    bool real_relaxation_only = false;
    /// Budget exhaustion marker used by the aggregated test.
    bool inconclusive = false;
};

/// Decides whether a reported triplet is consistent with counts (p, n) at
/// uncertainty eps: exact feasibility of the real-valued system obtained by
/// eliminating the confusion counts. Intervals are clamped at the count
/// boxes, so the test is sharp for scores within eps of 0 or 1 as well.
ConsistencyVerdict image_level_test(const ScoreTriplet& t, const ImageCounts& c,
                                    const Uncertainty& u,
                                    RegionTag hypothesis = RegionTag::Custom);

/// Runs the image-level test under both region hypotheses.
std::pair<ConsistencyVerdict, ConsistencyVerdict> image_level_test_both(const ScoreTriplet& t,
                                                                        const ImageCounts& fov,
                                                                        const ImageCounts& all,
                                                                        const Uncertainty& u);

/// Constructs an integer (tp, tn) witness for a passing triplet when one
/// exists; used for diagnostics and soundness checks.
std::optional<std::pair<std::int64_t, std::int64_t>> find_integer_witness(const ScoreTriplet& t,
                                                                          const ImageCounts& c,
                                                                          const Uncertainty& u);

}  // namespace scoregate
