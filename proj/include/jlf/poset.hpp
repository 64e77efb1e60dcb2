#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jlf/rational.hpp"

namespace jlf {

/// A point of the minimal-parabolic exponent space. Coordinates sum to zero.
class ExponentPoint {
public:
    ExponentPoint() = default;
    /// Throws Error{center_condition_violated} when the coordinates do not sum to zero.
    explicit ExponentPoint(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }

    static ExponentPoint zero(std::size_t n) { return ExponentPoint(std::vector<Rational>(n, Rational(0))); }

    friend bool operator==(const ExponentPoint& a, const ExponentPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const ExponentPoint& a, const ExponentPoint& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

std::string format_point(const ExponentPoint& point);

enum class Order { succeeds, precedes, equal, incomparable };

std::string_view to_string(Order order);

/// The dominance order: s succeeds t iff s != t and every proper prefix sum
/// of s is <= the matching prefix sum of t.
Order compare_points(const ExponentPoint& s, const ExponentPoint& t);

inline bool succeeds(const ExponentPoint& s, const ExponentPoint& t) {
    return compare_points(s, t) == Order::succeeds;
}

/// Repeats z[j] block_sizes[j] times.
ExponentPoint embed_blocks(std::span<const int> block_sizes, std::span<const Rational> z);

/// Repeats every coordinate d times in place.
ExponentPoint expand_by_degree(const ExponentPoint& point, int degree);

/// Ordered antichains; layer 0 holds the minimal elements, the last layer
/// the maximal ones. Points inside a layer are sorted.
struct Layering {
    std::vector<std::vector<ExponentPoint>> layers;

    std::size_t size() const noexcept { return layers.size(); }
    bool operator==(const Layering&) const = default;
};

enum class EmptyInput { reject, allow };

/// Repeatedly strips all maximal elements and reverses the order of the
/// stripped sets. Duplicates in the input are ignored.
Layering layer_antichains(std::vector<ExponentPoint> points, EmptyInput empty = EmptyInput::reject);

/// Number of elements of the longest chain, by dynamic programming over the
/// comparability graph.
std::size_t longest_chain_length(std::span<const ExponentPoint> points);

struct LayeringCheck {
    bool ok = true;
    std::string property;  // "i'", "ii'" or "iii'"
    std::vector<ExponentPoint> witness;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks an ordered partition literally against
///   (i')   each layer is an antichain,
///   (ii')  no element of a higher layer precedes one of a lower layer,
///   (iii') every element is below some element of each higher layer.
/// Throws Error{invalid_partition} when `candidate` is not a partition of `points`.
LayeringCheck check_layering_properties(std::span<const ExponentPoint> points,
                                        const std::vector<std::vector<ExponentPoint>>& candidate);

}  // namespace jlf
