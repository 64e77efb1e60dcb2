#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jlf/poset.hpp"
#include "jlf/segments.hpp"
#include "jlf/support.hpp"

namespace jlf {

/// An object (R, Pi, z) of the groupoid of triples. Block j is the twisted
/// discrete-spectrum block MW(label, length) nu^center of size block_sizes[j];
/// the parabolic R is the ordered partition block_sizes, z the centers.
struct Triple {
    Side side = Side::inner;
    std::vector<Segment> blocks;
    std::vector<int> block_sizes;

    std::vector<Rational> centers() const;
    /// Dimension of the exponent space of R inside G; the only datum kept
    /// from the symmetric-algebra factor.
    int symmetric_algebra_dim() const { return static_cast<int>(blocks.size()) - 1; }

    bool operator==(const Triple&) const = default;
};

/// Builds a triple from blocks, deriving block sizes from the label table.
Triple make_triple(Side side, std::vector<Segment> blocks, const LabelTable& labels);

/// Isomorphism class of a triple.
struct TripleOrbit {
    Triple canonical;
    std::uint64_t automorphisms = 1;
    /// Split side: the triple is a transfer from the inner form. Always true
    /// on the inner side.
    bool in_image = true;

    bool operator==(const TripleOrbit&) const = default;
};

/// Sorts blocks by (center desc, label asc, length desc), carrying sizes along.
Triple canonicalize_triple(Triple triple);

/// Product of factorials of the multiplicities of identical blocks.
std::uint64_t automorphism_count(const Triple& triple);

ExponentPoint triple_point(const Triple& triple);

/// Total order on canonical triples used for presentation.
bool triple_less(const Triple& a, const Triple& b);

std::string format_triple(const Triple& triple);

/// One orbit per isomorphism class of triples with the given cuspidal
/// support, sorted by triple_less. Throws Error{bound_exceeded} if the
/// support has more than `max_size` factors.
std::vector<TripleOrbit> enumerate_triples(const Support& support, std::size_t max_size = kDefaultEnumerationBound);

}  // namespace jlf
