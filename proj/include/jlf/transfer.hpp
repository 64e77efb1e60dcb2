#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jlf/support.hpp"
#include "jlf/triples.hpp"

namespace jlf {

struct TransferredSupport {
    /// Factor-by-factor expansion in the order of the inner factors; the
    /// parabolic Q is `q_partition` for this ordering.
    Support representative;
    /// normalize_support(representative).
    Support sigma;
    std::vector<int> q_partition;

    bool operator==(const TransferredSupport&) const = default;
};

/// rho' nu^s  ->  rho nu^{s+(k-1)/2} (x) ... (x) rho nu^{s-(k-1)/2}.
TransferredSupport transfer_support(const Support& inner);

struct NotInImage {
    std::string label;
    Rational witness;
};

/// Inverse of transfer_support on its image; the per-label exponent
/// multisets are split greedily into segments of length k.
std::variant<Support, NotInImage> invert_support(const Support& split);

/// Like invert_support, but throws Error{not_in_image}.
Support require_preimage(const Support& split);

/// MW'(rho', l) nu^c  ->  MW(rho, k l) nu^c with block sizes scaled by d.
Triple transfer_triple(const Triple& inner, const LabelTable& labels);

/// Every block length is divisible by the k of its label.
bool triple_in_image(const Triple& split, const LabelTable& labels);

/// The inner triple mapping to `split`, reconstructed by cutting each block
/// into segments of length k; nullopt when the triple is not in the image.
std::optional<Triple> preimage_triple(const Triple& split, const LabelTable& labels);

}  // namespace jlf
