#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jlf/rational.hpp"
#include "jlf/support.hpp"

namespace jlf {

/// A segment of one cuspidal label: `length` exponents in arithmetic
/// progression with difference `step`, centered at `center`. Also names the
/// twisted block MW(rho, length) nu^center.
struct Segment {
    std::string label;
    int length = 1;
    Rational center;
    Rational step{1};

    /// Endpoints (a, b) in units of `step`: a = center/step - (length-1)/2.
    Rational start() const { return center / step - Rational(length - 1, 2); }
    Rational end() const { return center / step + Rational(length - 1, 2); }

    bool operator==(const Segment&) const = default;
};

/// Block order inside a canonical triple: center descending, then label
/// ascending, then length descending.
bool canonical_less(const Segment& a, const Segment& b);

/// "tau@1/2", "MW(rho,2)@0"; primed names on the inner side.
std::string format_segment(const Segment& segment, Side side = Side::split);

ExponentMultiset segment_exponents(const Segment& segment);

struct NotDecomposable {
    Rational missing;
};

using Decomposition = std::variant<std::vector<Segment>, NotDecomposable>;

/// Peels off step-1 segments of length exactly k from the top of the
/// multiset. Succeeds iff the multiset is a sum of such segments; the result
/// is then the unique decomposition.
Decomposition greedy_decompose_fixed_length(const ExponentMultiset& exponents, int k, std::string_view label = {});

using SegmentPartition = std::vector<Segment>;

inline constexpr std::size_t kDefaultEnumerationBound = 12;

/// Every partition of the multiset into arithmetic progressions of
/// difference `step`, each segment list in canonical order, the list of
/// partitions sorted and free of duplicates. Throws Error{bound_exceeded}
/// when the multiset is larger than `max_size`.
std::vector<SegmentPartition> enumerate_progression_partitions(const ExponentMultiset& exponents,
                                                               const Rational& step, std::string_view label = {},
                                                               std::size_t max_size = kDefaultEnumerationBound);

/// Lexicographic order of canonical segment lists under canonical_less.
bool partition_less(const SegmentPartition& a, const SegmentPartition& b);

}  // namespace jlf
