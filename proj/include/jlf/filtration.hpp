#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jlf/poset.hpp"
#include "jlf/support.hpp"
#include "jlf/transfer.hpp"
#include "jlf/triples.hpp"

namespace jlf {

struct BuildOptions {
    std::size_t max_size = kDefaultEnumerationBound;
};

enum class LayerKind { inner, split_mixed, split_image_only, split_nonimage_only };

std::string_view to_string(LayerKind kind);
LayerKind parse_layer_kind(std::string_view text);

/// Descriptor of one quotient A^i / A^{i+1}: the exponent points assigned to
/// index i and the triple orbits whose colimit the quotient is.
struct FiltrationLayer {
    int index = 0;
    std::vector<ExponentPoint> points;
    std::vector<TripleOrbit> orbits;
    LayerKind kind = LayerKind::inner;

    bool operator==(const FiltrationLayer&) const = default;
};

struct FiltrationReport {
    Side side = Side::inner;
    bool refined = false;
    std::vector<FiltrationLayer> layers;
    int ell_prime = 0;
    /// Split side only: l_0 .. l_{l'+1}, with -1 for an empty tilde part.
    std::vector<int> ell_list;
    std::vector<int> epsilons;
    std::vector<int> L_indices;
    std::vector<int> Lhat_indices;
    /// L+1 on the split side (l'+1 on the inner side).
    int total_length = 0;
    /// Lhat+1; equals total_length unless refined.
    int refined_length = 0;

    bool operator==(const FiltrationReport&) const = default;
};

/// Which member of the ordered partition of S a part is.
struct PartitionPart {
    enum class Kind { tilde, image } kind = Kind::image;
    int outer = 0;  // i in S~_{i,j} or S^G_i
    int inner = 0;  // j in S~_{i,j}; 0 for image parts
    std::vector<ExponentPoint> points;

    bool operator==(const PartitionPart&) const = default;
};

/// The ordered partition of the split point set S built from the inner
/// layering, with its bookkeeping.
struct SplitPartition {
    Support inner;
    Support sigma;
    std::vector<TripleOrbit> orbits;
    std::vector<ExponentPoint> points;
    /// S^G_0 .. S^G_{l'}, transported from the inner layering.
    std::vector<std::vector<ExponentPoint>> image_layers;
    /// S~_0 .. S~_{l'+1}, possibly empty.
    std::vector<std::vector<ExponentPoint>> tilde_parts;
    /// Antichain refinement of each S~_i.
    std::vector<Layering> tilde_refined;
    /// S~_{0,*}, S^G_0, S~_{1,*}, S^G_1, ..., S^G_{l'}, S~_{l'+1,*}.
    std::vector<PartitionPart> ordered;
    int ell_prime = 0;
    std::vector<int> ell_list;
    std::vector<int> L_indices;
    int total_length = 0;
};

/// Inner filtration: one layer per antichain of the inner point set.
FiltrationReport build_inner_filtration(const Support& inner, const BuildOptions& options = {});

/// Builds the ordered partition of S for a split support in the image of
/// the support transfer. Throws Error{not_in_image} otherwise and
/// Error{internal_inconsistency} if any structural property fails.
SplitPartition build_split_partition(const Support& sigma, const BuildOptions& options = {});

/// The filtration given by the ordered partition verbatim.
FiltrationReport naive_split_filtration(const SplitPartition& partition);
FiltrationReport build_naive_filtration(const Support& sigma, const BuildOptions& options = {});

/// Splits each S^G_i layer into image and non-image quotients when they share points.
FiltrationReport refined_split_filtration(const SplitPartition& partition);
FiltrationReport build_refined_filtration(const Support& sigma, const BuildOptions& options = {});

struct CorrespondenceReport {
    TransferredSupport transfer;
    FiltrationReport inner;
    FiltrationReport split;
    /// (inner index i, refined split index Lhat_i).
    std::vector<std::pair<int, int>> quotient_map;
    std::vector<int> unmatched_split_indices;
    /// Per entry of quotient_map: (inner orbit, its transfer in the split layer).
    std::vector<std::vector<std::pair<Triple, Triple>>> orbit_bijections;

    bool operator==(const CorrespondenceReport&) const = default;
};

CorrespondenceReport correspondence_report(const Support& inner, const BuildOptions& options = {});

// Structural checks, run by the builders and by the verification harness.
// Each returns a description of the first violation.

/// Checks the coarse tilde partition against the image layers:
///   (i)   an element of S~_i never precedes an element of S^G_{i0}, i0 < i,
///   (ii)  an element of S~_{i0} is below some element of every S^G_i, i >= i0,
///   (iii) no element of a higher tilde part precedes one of a lower part.
std::optional<std::string> check_tilde_partition(const std::vector<std::vector<ExponentPoint>>& image_layers,
                                                 const std::vector<std::vector<ExponentPoint>>& tilde_parts);

/// A point outside S^G never both succeeds and precedes elements of one image layer.
std::optional<std::string> check_no_mixed_verdicts(const std::vector<std::vector<ExponentPoint>>& image_layers,
                                                   const std::vector<ExponentPoint>& tilde);

/// x succeeds y implies index(x) > index(y) across an ordered partition.
std::optional<std::string> check_order_compatible(const std::vector<std::vector<ExponentPoint>>& parts);

/// Layer partition, layer kinds and the index identities of a split report.
std::optional<std::string> check_report_structure(const FiltrationReport& report,
                                                  const std::vector<TripleOrbit>& all_orbits);

}  // namespace jlf
