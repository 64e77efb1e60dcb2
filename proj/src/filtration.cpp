#include "jlf/filtration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "jlf/error.hpp"

namespace jlf {

std::string_view to_string(LayerKind kind) {
    switch (kind) {
        case LayerKind::inner: return "inner";
        case LayerKind::split_mixed: return "split_mixed";
        case LayerKind::split_image_only: return "split_image_only";
        case LayerKind::split_nonimage_only: return "split_nonimage_only";
    }
    return "?";
}

LayerKind parse_layer_kind(std::string_view text) {
    for (auto k : {LayerKind::inner, LayerKind::split_mixed, LayerKind::split_image_only,
                   LayerKind::split_nonimage_only}) {
        if (to_string(k) == text) return k;
    }
    throw Error(ErrorKind::malformed_input, "unknown layer kind '" + std::string(text) + "'");
}

namespace {

using PointSet = std::set<ExponentPoint>;

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::internal_inconsistency, what); }

bool orbit_less(const TripleOrbit& a, const TripleOrbit& b) { return triple_less(a.canonical, b.canonical); }

LayerKind split_kind(const std::vector<TripleOrbit>& orbits) {
    const auto image = std::count_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.in_image; });
    if (image == static_cast<long>(orbits.size())) return LayerKind::split_image_only;
    if (image == 0) return LayerKind::split_nonimage_only;
    return LayerKind::split_mixed;
}

// Orbits whose point lies in `points` and whose image flag passes `keep`.
template <class Pred>
std::vector<TripleOrbit> orbits_at(const std::vector<TripleOrbit>& all, const std::vector<ExponentPoint>& points,
                                   Pred keep) {
    const PointSet wanted(points.begin(), points.end());
    std::vector<TripleOrbit> out;
    for (const auto& o : all) {
        if (keep(o) && wanted.count(triple_point(o.canonical))) out.push_back(o);
    }
    std::sort(out.begin(), out.end(), orbit_less);
    return out;
}

std::vector<ExponentPoint> distinct_points(const std::vector<TripleOrbit>& orbits) {
    PointSet set;
    for (const auto& o : orbits) set.insert(triple_point(o.canonical));
    return {set.begin(), set.end()};
}

std::string describe(const ExponentPoint& a, std::string_view rel, const ExponentPoint& b) {
    return format_point(a) + " " + std::string(rel) + " " + format_point(b);
}

}  // namespace

FiltrationReport build_inner_filtration(const Support& inner_in, const BuildOptions& options) {
    if (inner_in.side != Side::inner) inconsistent("build_inner_filtration needs an inner-side support");
    const Support inner = normalize_support(inner_in);
    const auto orbits = enumerate_triples(inner, options.max_size);
    const auto points = distinct_points(orbits);
    const Layering layering = layer_antichains(points);
    if (layering.size() != longest_chain_length(points)) {
        inconsistent("inner layering has " + std::to_string(layering.size()) +
                     " layers but the longest chain has " + std::to_string(longest_chain_length(points)));
    }

    FiltrationReport report;
    report.side = Side::inner;
    for (std::size_t i = 0; i < layering.size(); ++i) {
        FiltrationLayer layer;
        layer.index = static_cast<int>(i);
        layer.points = layering.layers[i];
        layer.orbits = orbits_at(orbits, layer.points, [](const auto&) { return true; });
        layer.kind = LayerKind::inner;
        report.layers.push_back(std::move(layer));
    }
    report.ell_prime = static_cast<int>(layering.size()) - 1;
    report.total_length = static_cast<int>(layering.size());
    report.refined_length = report.total_length;
    return report;
}

std::optional<std::string> check_tilde_partition(const std::vector<std::vector<ExponentPoint>>& image_layers,
                                                 const std::vector<std::vector<ExponentPoint>>& tilde_parts) {
    const int top = static_cast<int>(image_layers.size()) - 1;  // l'
    if (static_cast<int>(tilde_parts.size()) != top + 2) {
        return "expected " + std::to_string(top + 2) + " tilde parts, got " + std::to_string(tilde_parts.size());
    }
    // (i) a tilde element above image layer i0 is never below it.
    for (int i = 0; i <= top + 1; ++i) {
        for (int i0 = 0; i0 < i && i0 <= top; ++i0) {
            for (const auto& zeta : tilde_parts[i]) {
                for (const auto& z : image_layers[i0]) {
                    if (compare_points(zeta, z) == Order::precedes) {
                        return "(i) fails: " + describe(zeta, "precedes", z) + " with tilde index " +
                               std::to_string(i) + " > image index " + std::to_string(i0);
                    }
                }
            }
        }
    }
    // (ii) every image layer from i0 up to l' has an element above it.
    for (int i0 = 0; i0 <= top + 1; ++i0) {
        for (const auto& zeta : tilde_parts[i0]) {
            for (int i = i0; i <= top; ++i) {
                const bool covered = std::any_of(image_layers[i].begin(), image_layers[i].end(),
                                                 [&](const auto& z) { return succeeds(z, zeta); });
                if (!covered) {
                    return "(ii) fails: no element of image layer " + std::to_string(i) + " succeeds " +
                           format_point(zeta) + " in tilde part " + std::to_string(i0);
                }
            }
        }
    }
    // (iii) comparabilities across tilde parts only point upward.
    for (int i0 = 0; i0 <= top + 1; ++i0) {
        for (int i = i0 + 1; i <= top + 1; ++i) {
            for (const auto& low : tilde_parts[i0]) {
                for (const auto& high : tilde_parts[i]) {
                    if (compare_points(high, low) == Order::precedes) {
                        return "(iii) fails: " + describe(high, "precedes", low);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_no_mixed_verdicts(const std::vector<std::vector<ExponentPoint>>& image_layers,
                                                   const std::vector<ExponentPoint>& tilde) {
    for (const auto& zeta : tilde) {
        for (std::size_t i = 0; i < image_layers.size(); ++i) {
            bool above = false, below = false;
            for (const auto& z : image_layers[i]) {
                const auto o = compare_points(zeta, z);
                above |= o == Order::succeeds;
                below |= o == Order::precedes;
            }
            if (above && below) {
                return format_point(zeta) + " both succeeds and precedes elements of image layer " +
                       std::to_string(i);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_order_compatible(const std::vector<std::vector<ExponentPoint>>& parts) {
    std::map<ExponentPoint, std::size_t> index;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (const auto& p : parts[k]) index[p] = k;
    }
    for (const auto& [x, kx] : index) {
        for (const auto& [y, ky] : index) {
            if (succeeds(x, y) && kx <= ky) {
                return describe(x, "succeeds", y) + " but sits at index " + std::to_string(kx) +
                       " <= " + std::to_string(ky);
            }
        }
    }
    return std::nullopt;
}

SplitPartition build_split_partition(const Support& sigma_in, const BuildOptions& options) {
    if (sigma_in.side != Side::split) inconsistent("build_split_partition needs a split-side support");
    SplitPartition out;
    out.sigma = normalize_support(sigma_in);
    out.inner = require_preimage(out.sigma);
    const int d = out.sigma.degree();

    const auto inner_report = build_inner_filtration(out.inner, options);
    out.ell_prime = inner_report.ell_prime;
    out.orbits = enumerate_triples(out.sigma, options.max_size);
    out.points = distinct_points(out.orbits);

    PointSet image_points;
    for (const auto& layer : inner_report.layers) {
        std::vector<ExponentPoint> transported;
        for (const auto& p : layer.points) transported.push_back(expand_by_degree(p, d));
        std::sort(transported.begin(), transported.end());
        image_points.insert(transported.begin(), transported.end());
        out.image_layers.push_back(std::move(transported));
    }

    PointSet from_image_orbits;
    for (const auto& o : out.orbits) {
        if (o.in_image) from_image_orbits.insert(triple_point(o.canonical));
    }
    if (from_image_orbits != image_points) {
        inconsistent("transported inner points differ from the points of image triples");
    }
    const auto transported_check = check_layering_properties(
        std::vector<ExponentPoint>(image_points.begin(), image_points.end()), out.image_layers);
    if (!transported_check) {
        inconsistent("transported layering violates (" + transported_check.property + "): " + transported_check.detail);
    }

    std::vector<ExponentPoint> remaining;
    for (const auto& p : out.points) {
        if (!image_points.count(p)) remaining.push_back(p);
    }
    const std::vector<ExponentPoint> tilde = remaining;

    // Downward: S~_i takes what is not below anything in S^G_{i-1}.
    const int top = out.ell_prime;
    out.tilde_parts.assign(static_cast<std::size_t>(top + 2), {});
    for (int i = top + 1; i >= 1; --i) {
        const auto& guard = out.image_layers[static_cast<std::size_t>(i - 1)];
        std::vector<ExponentPoint> keep;
        for (const auto& zeta : remaining) {
            const bool below = std::any_of(guard.begin(), guard.end(), [&](const auto& z) { return succeeds(z, zeta); });
            (below ? keep : out.tilde_parts[static_cast<std::size_t>(i)]).push_back(zeta);
        }
        remaining = std::move(keep);
    }
    out.tilde_parts[0] = std::move(remaining);

    if (auto bad = check_tilde_partition(out.image_layers, out.tilde_parts)) inconsistent(*bad);
    if (auto bad = check_no_mixed_verdicts(out.image_layers, tilde)) inconsistent(*bad);

    for (const auto& part : out.tilde_parts) {
        out.tilde_refined.push_back(layer_antichains(part, EmptyInput::allow));
        out.ell_list.push_back(static_cast<int>(out.tilde_refined.back().size()) - 1);
    }

    for (int i = 0; i <= top + 1; ++i) {
        const auto& refined = out.tilde_refined[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < refined.size(); ++j) {
            out.ordered.push_back(PartitionPart{PartitionPart::Kind::tilde, i, static_cast<int>(j), refined.layers[j]});
        }
        if (i <= top) {
            out.ordered.push_back(
                PartitionPart{PartitionPart::Kind::image, i, 0, out.image_layers[static_cast<std::size_t>(i)]});
        }
    }

    int running = 0;
    for (int i = 0; i <= top; ++i) {
        running += out.ell_list[static_cast<std::size_t>(i)];
        out.L_indices.push_back(1 + 2 * i + running);
    }
    out.total_length = 3 + 2 * top + std::accumulate(out.ell_list.begin(), out.ell_list.end(), 0);
    if (out.total_length != static_cast<int>(out.ordered.size())) {
        inconsistent("ordered partition has " + std::to_string(out.ordered.size()) + " parts, index arithmetic gives " +
                     std::to_string(out.total_length));
    }
    for (int i = 0; i <= top; ++i) {
        const auto& part = out.ordered[static_cast<std::size_t>(out.L_indices[static_cast<std::size_t>(i)])];
        if (part.kind != PartitionPart::Kind::image || part.outer != i) {
            inconsistent("part L_" + std::to_string(i) + " is not image layer " + std::to_string(i));
        }
    }
    std::vector<std::vector<ExponentPoint>> parts;
    for (const auto& p : out.ordered) parts.push_back(p.points);
    if (auto bad = check_order_compatible(parts)) inconsistent("ordered partition: " + *bad);
    return out;
}

namespace {

FiltrationReport split_report_skeleton(const SplitPartition& partition) {
    FiltrationReport report;
    report.side = Side::split;
    report.ell_prime = partition.ell_prime;
    report.ell_list = partition.ell_list;
    report.L_indices = partition.L_indices;
    report.total_length = partition.total_length;
    for (const auto& layer : partition.image_layers) {
        const bool mixed = !orbits_at(partition.orbits, layer, [](const auto& o) { return !o.in_image; }).empty();
        report.epsilons.push_back(mixed ? 1 : 0);
    }
    int shift = 0;
    for (std::size_t i = 0; i < report.L_indices.size(); ++i) {
        report.Lhat_indices.push_back(report.L_indices[i] + shift);
        shift += report.epsilons[i];
    }
    report.refined_length = report.total_length + shift;
    return report;
}

}  // namespace

FiltrationReport naive_split_filtration(const SplitPartition& partition) {
    auto report = split_report_skeleton(partition);
    for (const auto& part : partition.ordered) {
        FiltrationLayer layer;
        layer.index = static_cast<int>(report.layers.size());
        layer.points = part.points;
        layer.orbits = orbits_at(partition.orbits, part.points, [](const auto&) { return true; });
        layer.kind = split_kind(layer.orbits);
        report.layers.push_back(std::move(layer));
    }
    return report;
}

FiltrationReport build_naive_filtration(const Support& sigma, const BuildOptions& options) {
    return naive_split_filtration(build_split_partition(sigma, options));
}

FiltrationReport refined_split_filtration(const SplitPartition& partition) {
    auto report = split_report_skeleton(partition);
    report.refined = true;
    auto push = [&](const std::vector<ExponentPoint>& points, std::vector<TripleOrbit> orbits) {
        FiltrationLayer layer;
        layer.index = static_cast<int>(report.layers.size());
        layer.points = points;
        layer.kind = split_kind(orbits);
        layer.orbits = std::move(orbits);
        report.layers.push_back(std::move(layer));
    };
    for (const auto& part : partition.ordered) {
        if (part.kind == PartitionPart::Kind::tilde) {
            push(part.points, orbits_at(partition.orbits, part.points, [](const auto&) { return true; }));
            continue;
        }
        push(part.points, orbits_at(partition.orbits, part.points, [](const auto& o) { return o.in_image; }));
        if (report.epsilons[static_cast<std::size_t>(part.outer)] == 1) {
            push(part.points, orbits_at(partition.orbits, part.points, [](const auto& o) { return !o.in_image; }));
        }
    }
    if (auto bad = check_report_structure(report, partition.orbits)) inconsistent(*bad);
    return report;
}

FiltrationReport build_refined_filtration(const Support& sigma, const BuildOptions& options) {
    return refined_split_filtration(build_split_partition(sigma, options));
}

std::optional<std::string> check_report_structure(const FiltrationReport& report,
                                                  const std::vector<TripleOrbit>& all_orbits) {
    std::vector<TripleOrbit> seen;
    for (std::size_t k = 0; k < report.layers.size(); ++k) {
        const auto& layer = report.layers[k];
        if (layer.index != static_cast<int>(k)) return "layer " + std::to_string(k) + " carries index " +
                                                       std::to_string(layer.index);
        const PointSet pts(layer.points.begin(), layer.points.end());
        for (const auto& o : layer.orbits) {
            if (!pts.count(triple_point(o.canonical))) {
                return "orbit " + format_triple(o.canonical) + " lies outside the points of layer " + std::to_string(k);
            }
            if (layer.kind == LayerKind::split_image_only && !o.in_image) {
                return "non-image orbit in image-only layer " + std::to_string(k);
            }
            if (layer.kind == LayerKind::split_nonimage_only && o.in_image) {
                return "image orbit in non-image-only layer " + std::to_string(k);
            }
        }
        seen.insert(seen.end(), layer.orbits.begin(), layer.orbits.end());
    }
    auto expected = all_orbits;
    std::sort(expected.begin(), expected.end(), orbit_less);
    std::sort(seen.begin(), seen.end(), orbit_less);
    if (seen != expected) return "layer orbit sets do not partition the orbit set";

    if (report.side == Side::inner) {
        if (static_cast<int>(report.layers.size()) != report.ell_prime + 1) return "inner length is not l'+1";
        return std::nullopt;
    }

    const int top = report.ell_prime;
    if (static_cast<int>(report.ell_list.size()) != top + 2 || static_cast<int>(report.epsilons.size()) != top + 1 ||
        static_cast<int>(report.L_indices.size()) != top + 1 ||
        static_cast<int>(report.Lhat_indices.size()) != top + 1) {
        return "index vectors have the wrong length";
    }
    int ell_sum = 0, eps_sum = 0;
    for (int i = 0; i <= top; ++i) {
        ell_sum += report.ell_list[static_cast<std::size_t>(i)];
        if (report.L_indices[static_cast<std::size_t>(i)] != 1 + 2 * i + ell_sum) {
            return "L_" + std::to_string(i) + " != 1 + 2i + sum_{j<=i} l_j";
        }
        if (report.Lhat_indices[static_cast<std::size_t>(i)] != report.L_indices[static_cast<std::size_t>(i)] + eps_sum) {
            return "Lhat_" + std::to_string(i) + " != L_i + sum_{j<i} eps_j";
        }
        eps_sum += report.epsilons[static_cast<std::size_t>(i)];
    }
    ell_sum += report.ell_list.back();
    if (report.total_length != 3 + 2 * top + ell_sum) return "L+1 != 3 + 2l' + sum l_i";
    if (report.refined_length != report.total_length + eps_sum) return "Lhat+1 != L+1 + sum eps_i";
    const int expected_layers = report.refined ? report.refined_length : report.total_length;
    if (static_cast<int>(report.layers.size()) != expected_layers) return "layer count disagrees with the indices";

    if (report.refined) {
        for (int i = 0; i <= top; ++i) {
            const auto at = static_cast<std::size_t>(report.Lhat_indices[static_cast<std::size_t>(i)]);
            const auto& image = report.layers[at];
            if (image.kind != LayerKind::split_image_only) {
                return "layer Lhat_" + std::to_string(i) + " is not image-only";
            }
            std::vector<TripleOrbit> at_points = image.orbits;
            if (report.epsilons[static_cast<std::size_t>(i)] == 1) {
                const auto& rest = report.layers[at + 1];
                if (rest.kind != LayerKind::split_nonimage_only || rest.points != image.points) {
                    return "layer Lhat_" + std::to_string(i) + "+1 is not the non-image copy of S^G_i";
                }
                at_points.insert(at_points.end(), rest.orbits.begin(), rest.orbits.end());
            }
            std::sort(at_points.begin(), at_points.end(), orbit_less);
            if (at_points != orbits_at(all_orbits, image.points, [](const auto&) { return true; })) {
                return "layers at S^G_" + std::to_string(i) + " do not split its orbits into a direct sum";
            }
        }
    }
    return std::nullopt;
}

CorrespondenceReport correspondence_report(const Support& inner_in, const BuildOptions& options) {
    CorrespondenceReport out;
    const Support inner = normalize_support(inner_in);
    out.inner = build_inner_filtration(inner, options);
    out.transfer = transfer_support(inner);
    out.split = build_refined_filtration(out.transfer.sigma, options);
    if (out.split.ell_prime != out.inner.ell_prime) inconsistent("inner and split l' differ");

    std::set<int> matched;
    for (std::size_t i = 0; i < out.inner.layers.size(); ++i) {
        const int target = out.split.Lhat_indices[i];
        const auto& split_layer = out.split.layers[static_cast<std::size_t>(target)];
        std::vector<std::pair<Triple, Triple>> pairs;
        for (const auto& o : out.inner.layers[i].orbits) {
            pairs.emplace_back(o.canonical, transfer_triple(o.canonical, inner.labels));
        }
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return triple_less(a.second, b.second); });
        std::vector<Triple> images, present;
        for (const auto& p : pairs) images.push_back(p.second);
        for (const auto& o : split_layer.orbits) present.push_back(o.canonical);
        if (images != present) {
            inconsistent("transfer of inner layer " + std::to_string(i) + " does not match split layer " +
                         std::to_string(target));
        }
        out.quotient_map.emplace_back(static_cast<int>(i), target);
        out.orbit_bijections.push_back(std::move(pairs));
        matched.insert(target);
    }
    for (int k = 0; k < static_cast<int>(out.split.layers.size()); ++k) {
        if (!matched.count(k)) out.unmatched_split_indices.push_back(k);
    }
    return out;
}

}  // namespace jlf
