#include "jlf/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jlf/error.hpp"

namespace jlf {

ExponentPoint::ExponentPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    Rational sum(0);
    for (const auto& c : coords_) sum += c;
    if (sum != Rational(0)) {
        throw Error(ErrorKind::center_condition_violated,
                    "point " + format_rationals(coords_) + " has coordinate sum " + format_rational(sum),
                    format_rationals(coords_));
    }
}

std::string format_point(const ExponentPoint& point) { return format_rationals(point.coords()); }

std::string_view to_string(Order order) {
    switch (order) {
        case Order::succeeds: return "succeeds";
        case Order::precedes: return "precedes";
        case Order::equal: return "equal";
        case Order::incomparable: return "incomparable";
    }
    return "?";
}

Order compare_points(const ExponentPoint& s, const ExponentPoint& t) {
    if (s.size() != t.size()) {
        throw Error(ErrorKind::length_mismatch,
                    "cannot compare points of lengths " + std::to_string(s.size()) + " and " + std::to_string(t.size()),
                    format_point(s) + " vs " + format_point(t));
    }
    if (s == t) return Order::equal;
    bool s_le_t = true;
    bool t_le_s = true;
    Rational ps(0), pt(0);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        ps += s.coords()[i];
        pt += t.coords()[i];
        if (ps > pt) s_le_t = false;
        if (pt > ps) t_le_s = false;
    }
    // Both sum to zero, so equal proper prefix sums would force s == t.
    if (s_le_t) return Order::succeeds;
    if (t_le_s) return Order::precedes;
    return Order::incomparable;
}

ExponentPoint embed_blocks(std::span<const int> block_sizes, std::span<const Rational> z) {
    if (block_sizes.size() != z.size()) {
        throw Error(ErrorKind::length_mismatch, std::to_string(block_sizes.size()) + " block sizes for " +
                                                    std::to_string(z.size()) + " coordinates");
    }
    std::vector<Rational> coords;
    Rational weighted(0);
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (block_sizes[j] <= 0) {
            throw Error(ErrorKind::non_positive_size, "block size " + std::to_string(block_sizes[j]));
        }
        weighted += Rational(block_sizes[j]) * z[j];
        coords.insert(coords.end(), static_cast<std::size_t>(block_sizes[j]), z[j]);
    }
    if (weighted != Rational(0)) {
        throw Error(ErrorKind::center_condition_violated,
                    "sum of block_size * z = " + format_rational(weighted),
                    format_rationals(std::vector<Rational>(z.begin(), z.end())));
    }
    return ExponentPoint(std::move(coords));
}

ExponentPoint expand_by_degree(const ExponentPoint& point, int degree) {
    if (degree <= 0) throw Error(ErrorKind::non_positive_size, "degree " + std::to_string(degree));
    std::vector<Rational> coords;
    coords.reserve(point.size() * static_cast<std::size_t>(degree));
    for (const auto& c : point.coords()) coords.insert(coords.end(), static_cast<std::size_t>(degree), c);
    return ExponentPoint(std::move(coords));
}

Layering layer_antichains(std::vector<ExponentPoint> points, EmptyInput empty) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) {
        if (empty == EmptyInput::allow) return {};
        throw Error(ErrorKind::empty_input, "cannot layer an empty point set");
    }

    std::vector<std::vector<ExponentPoint>> stripped;
    std::vector<ExponentPoint> remaining = std::move(points);
    while (!remaining.empty()) {
        std::vector<ExponentPoint> maxima;
        std::vector<ExponentPoint> rest;
        for (const auto& p : remaining) {
            const bool dominated = std::any_of(remaining.begin(), remaining.end(),
                                               [&](const ExponentPoint& q) { return succeeds(q, p); });
            (dominated ? rest : maxima).push_back(p);
        }
        stripped.push_back(std::move(maxima));
        remaining = std::move(rest);
    }
    std::reverse(stripped.begin(), stripped.end());
    return Layering{std::move(stripped)};
}

std::size_t longest_chain_length(std::span<const ExponentPoint> input) {
    std::vector<ExponentPoint> points(input.begin(), input.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();

    // chain[i] = longest chain whose top element is points[i].
    std::vector<std::size_t> chain(n, 0);
    std::vector<bool> done(n, false);
    auto solve = [&](auto& self, std::size_t i) -> std::size_t {
        if (done[i]) return chain[i];
        std::size_t best = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (succeeds(points[i], points[j])) best = std::max(best, 1 + self(self, j));
        }
        done[i] = true;
        chain[i] = best;
        return best;
    };
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, solve(solve, i));
    return best;
}

LayeringCheck check_layering_properties(std::span<const ExponentPoint> points,
                                        const std::vector<std::vector<ExponentPoint>>& candidate) {
    std::multiset<ExponentPoint> in_candidate;
    for (const auto& layer : candidate) in_candidate.insert(layer.begin(), layer.end());
    std::set<ExponentPoint> in_points(points.begin(), points.end());
    const std::multiset<ExponentPoint> expected(in_points.begin(), in_points.end());
    if (in_candidate != expected) {
        throw Error(ErrorKind::invalid_partition, "candidate layers are not a partition of the point set");
    }

    auto fail = [](std::string property, std::vector<ExponentPoint> witness, std::string detail) {
        return LayeringCheck{false, std::move(property), std::move(witness), std::move(detail)};
    };

    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const auto& layer = candidate[i];
        for (std::size_t a = 0; a < layer.size(); ++a) {
            for (std::size_t b = a + 1; b < layer.size(); ++b) {
                if (compare_points(layer[a], layer[b]) != Order::incomparable) {
                    return fail("i'", {layer[a], layer[b]},
                                "comparable elements share layer " + std::to_string(i));
                }
            }
        }
    }
    for (std::size_t lo = 0; lo < candidate.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < candidate.size(); ++hi) {
            for (const auto& upper : candidate[hi]) {
                for (const auto& lower : candidate[lo]) {
                    if (compare_points(upper, lower) == Order::precedes) {
                        return fail("ii'", {upper, lower},
                                    "element of layer " + std::to_string(hi) + " precedes element of layer " +
                                        std::to_string(lo));
                    }
                }
            }
        }
    }
    for (std::size_t lo = 0; lo < candidate.size(); ++lo) {
        for (const auto& lower : candidate[lo]) {
            for (std::size_t hi = lo + 1; hi < candidate.size(); ++hi) {
                const bool covered = std::any_of(candidate[hi].begin(), candidate[hi].end(),
                                                 [&](const ExponentPoint& upper) { return succeeds(upper, lower); });
                if (!covered) {
                    return fail("iii'", {lower},
                                "no element of layer " + std::to_string(hi) + " succeeds this element of layer " +
                                    std::to_string(lo));
                }
            }
        }
    }
    return {};
}

}  // namespace jlf
