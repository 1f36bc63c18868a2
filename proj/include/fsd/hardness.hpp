#pragma once

#include <cstdint>
#include <vector>

#include "fsd/core.hpp"

namespace fsd {

// Input of the gap-instance generator: nonnegative integer weights with even
// total 2S and a scale R > 5S.
struct PartitionInput {
    std::vector<Time> weights;
    Time r = 0;

    Time half_sum() const;  // S
    int m() const { return static_cast<int>(weights.size()); }
};

// Validates the invariants (nonnegative weights, even total, R > 5S) and
// throws PreconditionError naming the violated one.
PartitionInput make_partition_input(std::vector<Time> weights, Time r);

Time yes_threshold(const PartitionInput& p);  // 4R + 4S
Time no_threshold(const PartitionInput& p);   // 5R - S

enum class GapVerdict {
    AtMostYesThreshold,   // optimum <= 4R+4S: a partition certificate exists
    AtLeastNoThreshold,   // optimum >= 5R-S: no certificate exists
    ForbiddenGap,         // strictly between: impossible for true optima
};

// The m+6-job gap instance: small jobs (w_k, 2R, w_k) followed by the six big
// frame jobs. Delays take exactly the two values {0, 2R}.
Instance generate(const PartitionInput& p);

// Feasible schedule of length <= 4R+4S built from a certificate subset X with
// weight sum S. Starts may be negative (the mirrored side extends left of 0);
// normalize() for output. Throws PreconditionError if X does not certify.
Schedule build_yes_schedule(const PartitionInput& p, const std::vector<int>& x);

// Places a claimed optimal makespan relative to the two thresholds.
// ForbiddenGap indicates a bug in the caller's solver: optimal values cannot
// land strictly between them.
GapVerdict classify(const PartitionInput& p, Time claimed_optimal);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Reduced value of (5k-1)/(4k+4), the inapproximability ratio at R = kS.
// Strictly increasing in k and strictly below 5/4. Requires k > 5.
Rational ratio_bound(std::int64_t k);

}  // namespace fsd
