#include "jlf/transfer.hpp"

#include "jlf/error.hpp"
#include "jlf/segments.hpp"

namespace jlf {

TransferredSupport transfer_support(const Support& inner) {
    if (inner.side != Side::inner) {
        throw Error(ErrorKind::malformed_input, "transfer_support expects an inner-side support");
    }
    TransferredSupport out;
    out.representative.side = Side::split;
    out.representative.labels = inner.labels;
    for (const auto& f : inner.factors) {
        const auto& label = inner.labels.at(f.label);
        for (int i = 0; i < label.k; ++i) {
            out.representative.factors.push_back(Factor{f.label, f.exponent + Rational(label.k - 1 - 2 * i, 2)});
            out.q_partition.push_back(label.split_size);
        }
    }
    out.sigma = normalize_support(out.representative);
    return out;
}

std::variant<Support, NotInImage> invert_support(const Support& split) {
    if (split.side != Side::split) {
        throw Error(ErrorKind::malformed_input, "invert_support expects a split-side support");
    }
    Support inner;
    inner.side = Side::inner;
    inner.labels = split.labels;
    for (const auto& label : split.labels.labels()) {
        const auto exps = exponent_multiset(split, label.name);
        if (exps.empty()) continue;
        auto result = greedy_decompose_fixed_length(exps, label.k, label.name);
        if (const auto* fail = std::get_if<NotDecomposable>(&result)) {
            return NotInImage{label.name, fail->missing};
        }
        for (const auto& seg : std::get<std::vector<Segment>>(result)) {
            inner.factors.push_back(Factor{label.name, seg.center});
        }
    }
    return normalize_support(inner);
}

Support require_preimage(const Support& split) {
    auto result = invert_support(split);
    if (const auto* fail = std::get_if<NotInImage>(&result)) {
        throw Error(ErrorKind::not_in_image,
                    "exponents of '" + fail->label + "' are not a sum of segments of length k (missing " +
                        format_rational(fail->witness) + ")",
                    fail->label + "@" + format_rational(fail->witness));
    }
    return std::get<Support>(std::move(result));
}

Triple transfer_triple(const Triple& inner, const LabelTable& labels) {
    if (inner.side != Side::inner) {
        throw Error(ErrorKind::malformed_input, "transfer_triple expects an inner-side triple");
    }
    std::vector<Segment> blocks;
    blocks.reserve(inner.blocks.size());
    for (const auto& b : inner.blocks) {
        blocks.push_back(Segment{b.label, labels.at(b.label).k * b.length, b.center, Rational(1)});
    }
    return canonicalize_triple(make_triple(Side::split, std::move(blocks), labels));
}

bool triple_in_image(const Triple& split, const LabelTable& labels) {
    for (const auto& b : split.blocks) {
        if (b.length % labels.at(b.label).k != 0) return false;
    }
    return true;
}

std::optional<Triple> preimage_triple(const Triple& split, const LabelTable& labels) {
    if (split.side != Side::split) {
        throw Error(ErrorKind::malformed_input, "preimage_triple expects a split-side triple");
    }
    std::vector<Segment> blocks;
    for (const auto& b : split.blocks) {
        const int k = labels.at(b.label).k;
        if (b.length % k != 0) return std::nullopt;
        // Cut the block into its chain of k-segments; their centers are the
        // exponents of one inner segment MW'(rho', length/k) with step k.
        auto chain = greedy_decompose_fixed_length(segment_exponents(b), k, b.label);
        const auto& pieces = std::get<std::vector<Segment>>(chain);
        std::vector<Rational> centers;
        for (const auto& p : pieces) centers.push_back(p.center);
        Rational mean(0);
        for (const auto& c : centers) mean += c;
        mean /= Rational(static_cast<std::int64_t>(centers.size()));
        blocks.push_back(Segment{b.label, b.length / k, mean, Rational(k)});
    }
    return canonicalize_triple(make_triple(Side::inner, std::move(blocks), labels));
}

}  // namespace jlf
