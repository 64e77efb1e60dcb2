#include "jlf/triples.hpp"

#include <algorithm>

#include "jlf/error.hpp"
#include "jlf/transfer.hpp"

namespace jlf {

std::vector<Rational> Triple::centers() const {
    std::vector<Rational> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.center);
    return out;
}

Triple make_triple(Side side, std::vector<Segment> blocks, const LabelTable& labels) {
    Triple t;
    t.side = side;
    for (auto& b : blocks) {
        t.block_sizes.push_back(labels.size_on(side, b.label) * b.length);
        b.step = labels.step_on(side, b.label);
    }
    t.blocks = std::move(blocks);
    return t;
}

Triple canonicalize_triple(Triple triple) {
    std::vector<std::size_t> order(triple.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return canonical_less(triple.blocks[a], triple.blocks[b]);
    });
    Triple out;
    out.side = triple.side;
    for (auto i : order) {
        out.blocks.push_back(std::move(triple.blocks[i]));
        out.block_sizes.push_back(triple.block_sizes[i]);
    }
    return out;
}

std::uint64_t automorphism_count(const Triple& triple) {
    std::uint64_t count = 1;
    std::size_t i = 0;
    const auto& b = triple.blocks;
    while (i < b.size()) {
        std::size_t j = i + 1;
        while (j < b.size() && b[j] == b[i]) ++j;
        for (std::uint64_t f = 2; f <= j - i; ++f) count *= f;
        i = j;
    }
    return count;
}

ExponentPoint triple_point(const Triple& triple) {
    const auto z = triple.centers();
    return embed_blocks(triple.block_sizes, z);
}

bool triple_less(const Triple& a, const Triple& b) {
    if (a.side != b.side) return a.side < b.side;
    if (a.blocks != b.blocks) {
        return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
                                            canonical_less);
    }
    return a.block_sizes < b.block_sizes;
}

std::string format_triple(const Triple& triple) {
    std::string out = "[";
    for (std::size_t i = 0; i < triple.blocks.size(); ++i) {
        if (i) out += ", ";
        out += format_segment(triple.blocks[i], triple.side);
    }
    return out + "]";
}

std::vector<TripleOrbit> enumerate_triples(const Support& support, std::size_t max_size) {
    if (support.factors.size() > max_size) {
        throw Error(ErrorKind::bound_exceeded,
                    std::to_string(support.factors.size()) + " factors exceed the enumeration bound " +
                        std::to_string(max_size),
                    std::to_string(support.factors.size()));
    }
    const auto& labels = support.labels;

    std::vector<std::vector<SegmentPartition>> per_label;
    for (const auto& label : labels.labels()) {
        const auto exps = exponent_multiset(support, label.name);
        if (exps.empty()) continue;
        per_label.push_back(
            enumerate_progression_partitions(exps, labels.step_on(support.side, label.name), label.name, max_size));
    }

    std::vector<TripleOrbit> out;
    std::vector<std::size_t> pick(per_label.size(), 0);
    while (true) {
        std::vector<Segment> blocks;
        for (std::size_t l = 0; l < per_label.size(); ++l) {
            const auto& part = per_label[l][pick[l]];
            blocks.insert(blocks.end(), part.begin(), part.end());
        }
        auto triple = canonicalize_triple(make_triple(support.side, std::move(blocks), labels));
        TripleOrbit orbit;
        orbit.automorphisms = automorphism_count(triple);
        orbit.in_image = support.side == Side::inner || triple_in_image(triple, labels);
        orbit.canonical = std::move(triple);
        out.push_back(std::move(orbit));

        std::size_t l = 0;
        while (l < pick.size() && ++pick[l] == per_label[l].size()) pick[l++] = 0;
        if (l == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const TripleOrbit& a, const TripleOrbit& b) { return triple_less(a.canonical, b.canonical); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace jlf
