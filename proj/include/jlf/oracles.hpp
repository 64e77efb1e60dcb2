#pragma once

#include <cstddef>
#include <vector>

#include "jlf/poset.hpp"
#include "jlf/segments.hpp"
#include "jlf/support.hpp"

// Exhaustive reference implementations for small instances. None of these
// share code paths with the constructions they are used to check.
namespace jlf::oracle {

/// Every set partition of the multiset (restricted-growth enumeration over
/// positions) whose blocks are arithmetic progressions with difference
/// `step`, canonicalized and deduplicated.
std::vector<SegmentPartition> progression_partitions(const ExponentMultiset& exponents, const Rational& step,
                                                     std::string_view label = {});

/// Number of partitions of the multiset into step-1 segments all of length k.
std::size_t count_fixed_length_partitions(const ExponentMultiset& exponents, int k);

/// All ordered partitions of the distinct points into non-empty parts that
/// satisfy (i') (ii') (iii') of check_layering_properties. Intended for at
/// most 7 points.
std::vector<std::vector<std::vector<ExponentPoint>>> admissible_layerings(std::vector<ExponentPoint> points);

/// All assignments of the tilde points to parts 0 .. l'+1 (l'+1 = number of
/// image layers) that satisfy (i) and (ii) of check_tilde_partition.
/// Intended for at most 6 tilde points.
std::vector<std::vector<std::vector<ExponentPoint>>> admissible_tilde_partitions(
    const std::vector<std::vector<ExponentPoint>>& image_layers, std::vector<ExponentPoint> tilde);

/// Longest chain by checking every subset for total order.
std::size_t longest_chain_by_subsets(std::vector<ExponentPoint> points);

}  // namespace jlf::oracle
