#include "jlf/segments.hpp"

#include <algorithm>
#include <map>

#include "jlf/error.hpp"

namespace jlf {

bool canonical_less(const Segment& a, const Segment& b) {
    if (a.center != b.center) return a.center > b.center;
    if (a.label != b.label) return a.label < b.label;
    if (a.length != b.length) return a.length > b.length;
    return a.step < b.step;
}

bool partition_less(const SegmentPartition& a, const SegmentPartition& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

std::string format_segment(const Segment& segment, Side side) {
    const std::string prime = side == Side::inner ? "'" : "";
    std::string out = segment.label + prime;
    if (segment.length > 1) out = "MW" + prime + "(" + out + "," + std::to_string(segment.length) + ")";
    return out + "@" + format_rational(segment.center);
}

ExponentMultiset segment_exponents(const Segment& segment) {
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(segment.length));
    const Rational top = segment.center + segment.step * Rational(segment.length - 1, 2);
    for (int i = 0; i < segment.length; ++i) entries.push_back(top - segment.step * Rational(i));
    return ExponentMultiset(std::move(entries));
}

Decomposition greedy_decompose_fixed_length(const ExponentMultiset& exponents, int k, std::string_view label) {
    if (k <= 0) throw Error(ErrorKind::non_positive_size, "segment length " + std::to_string(k));
    std::map<Rational, int, std::greater<>> remaining;
    for (const auto& e : exponents.entries()) ++remaining[e];

    std::vector<Segment> out;
    while (!remaining.empty()) {
        const Rational top = remaining.begin()->first;
        for (int i = 0; i < k; ++i) {
            const Rational want = top - Rational(i);
            auto it = remaining.find(want);
            if (it == remaining.end()) return NotDecomposable{want};
            if (--it->second == 0) remaining.erase(it);
        }
        out.push_back(Segment{std::string(label), k, top - Rational(k - 1, 2), Rational(1)});
    }
    return out;
}

namespace {

using Counts = std::map<Rational, int, std::greater<>>;

void extend(Counts& remaining, const Rational& step, const std::string& label, SegmentPartition& current,
            std::vector<SegmentPartition>& out) {
    if (remaining.empty()) {
        SegmentPartition p = current;
        std::sort(p.begin(), p.end(), canonical_less);
        out.push_back(std::move(p));
        return;
    }
    // The largest remaining exponent is the top of the segment containing it.
    const Rational top = remaining.begin()->first;
    std::vector<Rational> taken;
    for (int length = 1;; ++length) {
        const Rational next = top - step * Rational(length - 1);
        auto it = remaining.find(next);
        if (it == remaining.end()) break;
        if (--it->second == 0) remaining.erase(it);
        taken.push_back(next);
        current.push_back(Segment{label, length, top - step * Rational(length - 1, 2), step});
        extend(remaining, step, label, current, out);
        current.pop_back();
    }
    for (const auto& e : taken) ++remaining[e];
}

}  // namespace

std::vector<SegmentPartition> enumerate_progression_partitions(const ExponentMultiset& exponents,
                                                               const Rational& step, std::string_view label,
                                                               std::size_t max_size) {
    if (exponents.size() > max_size) {
        throw Error(ErrorKind::bound_exceeded,
                    std::to_string(exponents.size()) + " exponents exceed the enumeration bound " +
                        std::to_string(max_size),
                    std::to_string(exponents.size()));
    }
    if (step <= Rational(0)) throw Error(ErrorKind::non_positive_size, "progression step " + format_rational(step));
    if (exponents.empty()) return {SegmentPartition{}};

    Counts remaining;
    for (const auto& e : exponents.entries()) ++remaining[e];
    std::vector<SegmentPartition> out;
    SegmentPartition current;
    extend(remaining, step, std::string(label), current, out);
    std::sort(out.begin(), out.end(), partition_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace jlf
