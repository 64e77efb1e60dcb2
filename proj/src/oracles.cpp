#include "jlf/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "jlf/error.hpp"

namespace jlf::oracle {

namespace {

void dedupe_points(std::vector<ExponentPoint>& points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool is_progression(std::vector<Rational> values, const Rational& step) {
    std::sort(values.begin(), values.end(), std::greater<>());
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i - 1] - values[i] != step) return false;
    }
    return true;
}

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> block(n, 0);
    auto rec = [&](auto& self, std::size_t i, int used) -> void {
        if (i == n) {
            visit(block, used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0) {
        visit(block, 0);
        return;
    }
    rec(rec, 0, 0);
}

// gt[a][b] is true when points[a] succeeds points[b].
std::vector<std::vector<bool>> succession_matrix(const std::vector<ExponentPoint>& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<bool>> gt(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) gt[a][b] = compare_points(points[a], points[b]) == Order::succeeds;
    }
    return gt;
}

}  // namespace

std::vector<SegmentPartition> progression_partitions(const ExponentMultiset& exponents, const Rational& step,
                                                     std::string_view label) {
    const auto& e = exponents.entries();
    std::vector<SegmentPartition> out;
    for_each_set_partition(e.size(), [&](const std::vector<int>& block, int count) {
        std::vector<std::vector<Rational>> groups(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < e.size(); ++i) groups[static_cast<std::size_t>(block[i])].push_back(e[i]);
        SegmentPartition part;
        for (const auto& g : groups) {
            if (!is_progression(g, step)) return;
            Rational sum(0);
            for (const auto& v : g) sum += v;
            const auto len = static_cast<std::int64_t>(g.size());
            part.push_back(Segment{std::string(label), static_cast<int>(len), sum / Rational(len), step});
        }
        std::sort(part.begin(), part.end(), canonical_less);
        out.push_back(std::move(part));
    });
    std::sort(out.begin(), out.end(), partition_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t count_fixed_length_partitions(const ExponentMultiset& exponents, int k) {
    const auto all = progression_partitions(exponents, Rational(1));
    return static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [k](const SegmentPartition& p) {
        return std::all_of(p.begin(), p.end(), [k](const Segment& s) { return s.length == k; });
    }));
}

std::vector<std::vector<std::vector<ExponentPoint>>> admissible_layerings(std::vector<ExponentPoint> points) {
    dedupe_points(points);
    const std::size_t n = points.size();
    const auto gt = succession_matrix(points);

    std::vector<std::vector<std::vector<ExponentPoint>>> out;
    // An ordered partition is a set partition together with an order of its blocks.
    for_each_set_partition(n, [&](const std::vector<int>& block, int count) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (gt[a][b] && block[a] == block[b]) return;  // (i')
            }
        }
        std::vector<int> order(static_cast<std::size_t>(count));
        std::iota(order.begin(), order.end(), 0);
        do {
            // order[p] is the block placed at position p.
            std::vector<int> position(static_cast<std::size_t>(count));
            for (int p = 0; p < count; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
            auto pos = [&](std::size_t a) { return position[static_cast<std::size_t>(block[a])]; };
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) {
                for (std::size_t b = 0; b < n && ok; ++b) {
                    if (gt[a][b] && pos(a) < pos(b)) ok = false;  // (ii')
                }
                for (int hi = pos(a) + 1; hi < count && ok; ++hi) {  // (iii')
                    bool covered = false;
                    for (std::size_t c = 0; c < n && !covered; ++c) covered = pos(c) == hi && gt[c][a];
                    ok = covered;
                }
            }
            if (!ok) continue;
            std::vector<std::vector<ExponentPoint>> layers(static_cast<std::size_t>(count));
            for (std::size_t a = 0; a < n; ++a) layers[static_cast<std::size_t>(pos(a))].push_back(points[a]);
            if (!check_layering_properties(points, layers)) {
                throw Error(ErrorKind::internal_inconsistency, "oracle and check_layering_properties disagree");
            }
            out.push_back(std::move(layers));
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return out;
}

std::vector<std::vector<std::vector<ExponentPoint>>> admissible_tilde_partitions(
    const std::vector<std::vector<ExponentPoint>>& image_layers, std::vector<ExponentPoint> tilde) {
    dedupe_points(tilde);
    const std::size_t n = tilde.size();
    const int parts = static_cast<int>(image_layers.size()) + 1;

    // below[a][i]: tilde[a] precedes some element of image layer i.
    std::vector<std::vector<bool>> below(n, std::vector<bool>(image_layers.size(), false));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < image_layers.size(); ++i) {
            for (const auto& z : image_layers[i]) {
                if (compare_points(tilde[a], z) == Order::precedes) below[a][i] = true;
            }
        }
    }

    std::vector<std::vector<std::vector<ExponentPoint>>> out;
    std::vector<int> part(n, 0);
    auto rec = [&](auto& self, std::size_t a) -> void {
        if (a == n) {
            std::vector<std::vector<ExponentPoint>> result(static_cast<std::size_t>(parts));
            for (std::size_t b = 0; b < n; ++b) result[static_cast<std::size_t>(part[b])].push_back(tilde[b]);
            out.push_back(std::move(result));
            return;
        }
        for (int p = 0; p < parts; ++p) {
            bool ok = true;
            // (i): nothing in part p precedes an image layer with smaller index.
            for (int i0 = 0; i0 < p && ok; ++i0) ok = !below[a][static_cast<std::size_t>(i0)];
            // (ii): it precedes something in every image layer from p on.
            for (int i = p; i + 1 < parts && ok; ++i) ok = below[a][static_cast<std::size_t>(i)];
            if (!ok) continue;
            part[a] = p;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::size_t longest_chain_by_subsets(std::vector<ExponentPoint> points) {
    dedupe_points(points);
    const std::size_t n = points.size();
    if (n > 20) throw Error(ErrorKind::bound_exceeded, "subset oracle limited to 20 points");
    const auto gt = succession_matrix(points);
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) continue;
        bool chain = true;
        for (std::size_t a = 0; a < n && chain; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (std::size_t b = a + 1; b < n && chain; ++b) {
                if (mask >> b & 1u) chain = gt[a][b] || gt[b][a];
            }
        }
        if (chain) best = size;
    }
    return best;
}

}  // namespace jlf::oracle
