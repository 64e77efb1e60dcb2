#include "jlf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "jlf/error.hpp"
#include "jlf/filtration.hpp"
#include "jlf/oracles.hpp"
#include "jlf/report_json.hpp"
#include "jlf/transfer.hpp"
#include "jlf/triples.hpp"

namespace jlf::verify {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& from) {
    return from[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(from.size()) - 1))];
}

std::string show(const std::vector<Rational>& v) { return format_rationals(v); }

std::string show(const Support& s) { return format_support(s) + " [d=" + std::to_string(s.degree()) + "]"; }

// Thrown by a case to record its counterexample.
struct Failure {
    std::string what;
};

void expect(bool ok, const std::function<std::string()>& what) {
    if (!ok) throw Failure{what()};
}

// Runs `body(rng, i)` for `cases` iterations and stops at the first failure.
SuiteResult run_cases(std::size_t cases, std::uint64_t seed, const std::function<void(Rng&, std::size_t)>& body) {
    SuiteResult result;
    result.cases = cases;
    Rng rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        try {
            body(rng, i);
            ++result.passed;
        } catch (const Failure& f) {
            result.counterexample = "case " + std::to_string(i) + ": " + f.what;
            break;
        } catch (const std::exception& e) {
            result.counterexample = "case " + std::to_string(i) + ": unexpected error: " + e.what();
            break;
        }
    }
    return result;
}

// Points with small integer coordinates make comparabilities frequent.
std::vector<ExponentPoint> random_point_set(Rng& rng, std::size_t max_points) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 5));
    const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_points)));
    std::vector<ExponentPoint> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Rational> c;
        Rational sum(0);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            c.emplace_back(uniform(rng, -2, 2));
            sum += c.back();
        }
        c.push_back(-sum);
        out.emplace_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ExponentPoint> inner_points(const Support& inner, std::size_t max_size) {
    std::set<ExponentPoint> pts;
    for (const auto& o : enumerate_triples(inner, max_size)) pts.insert(triple_point(o.canonical));
    return {pts.begin(), pts.end()};
}

Support shuffled(Rng& rng, Support s) {
    std::shuffle(s.factors.begin(), s.factors.end(), rng);
    return s;
}

// ---------------------------------------------------------------- suites

SuiteResult support_normalize(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t) {
        const Support s = random_inner_support(rng, cfg.max_size);
        const Support again = normalize_support(s);
        expect(again == s, [&] { return "normalize is not idempotent on " + show(s); });
        const Support perm = shuffled(rng, s);
        expect(normalize_support(perm) == s, [&] { return "permutation changes normal form: " + show(perm); });
        std::size_t total = 0;
        for (const auto& l : s.labels.labels()) {
            total += exponent_multiset(s, l.name).size();
            expect(l.inner_size * s.degree() == l.split_size * l.k,
                   [&] { return "label arithmetic fails for " + l.name; });
        }
        expect(total == s.factors.size(), [&] { return "exponent multisets miss factors of " + show(s); });
    });
}

SuiteResult poset_order(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t) {
        const auto pts = random_point_set(rng, 6);
        for (const auto& a : pts) {
            expect(compare_points(a, a) == Order::equal, [&] { return "not reflexive-equal at " + format_point(a); });
            for (const auto& b : pts) {
                const auto ab = compare_points(a, b), ba = compare_points(b, a);
                expect((ab == Order::succeeds) == (ba == Order::precedes),
                       [&] { return "asymmetric verdicts for " + format_point(a) + ", " + format_point(b); });
                expect(!(a != b && ab == Order::equal), [&] { return "distinct points compare equal"; });
                for (const auto& c : pts) {
                    expect(!(succeeds(a, b) && succeeds(b, c)) || succeeds(a, c), [&] {
                        return "transitivity fails on " + format_point(a) + ", " + format_point(b) + ", " +
                               format_point(c);
                    });
                }
            }
        }
        // Linearity of the embeddings.
        const int r = uniform(rng, 1, 4);
        std::vector<int> sizes;
        for (int j = 0; j < r; ++j) sizes.push_back(uniform(rng, 1, 3));
        auto random_z = [&] {
            std::vector<Rational> z;
            Rational sum(0);
            for (int j = 0; j + 1 < r; ++j) {
                z.emplace_back(uniform(rng, -6, 6), uniform(rng, 1, 4));
                sum += z.back() * Rational(sizes[static_cast<std::size_t>(j)]);
            }
            z.push_back(-sum / Rational(sizes.back()));
            return z;
        };
        const auto x = random_z(), y = random_z();
        const Rational a(uniform(rng, -5, 5), uniform(rng, 1, 5)), b(uniform(rng, -5, 5), uniform(rng, 1, 5));
        std::vector<Rational> comb;
        for (int j = 0; j < r; ++j) comb.push_back(a * x[static_cast<std::size_t>(j)] + b * y[static_cast<std::size_t>(j)]);
        auto lin = [&](const ExponentPoint& fx, const ExponentPoint& fy) {
            std::vector<Rational> c;
            for (std::size_t i = 0; i < fx.size(); ++i) c.push_back(a * fx.coords()[i] + b * fy.coords()[i]);
            return ExponentPoint(std::move(c));
        };
        const auto ex = embed_blocks(sizes, x), ey = embed_blocks(sizes, y);
        expect(embed_blocks(sizes, comb) == lin(ex, ey), [&] { return "embed_blocks is not linear at " + show(x); });
        const int d = uniform(rng, 1, 5);
        expect(expand_by_degree(lin(ex, ey), d) == lin(expand_by_degree(ex, d), expand_by_degree(ey, d)),
               [&] { return "expand_by_degree is not linear"; });
    });
}

// Weakly decreasing z with denominators dividing q and sum_j b_j z_j = 0;
// the last block has size 1 so that it can absorb the center condition.
std::vector<Rational> random_chamber_vector(Rng& rng, const std::vector<int>& sizes, int q) {
    while (true) {
        std::vector<int> num;
        for (std::size_t j = 0; j + 1 < sizes.size(); ++j) num.push_back(uniform(rng, -2 * q, 3 * q));
        std::sort(num.begin(), num.end(), std::greater<>());
        int last = 0;
        for (std::size_t j = 0; j + 1 < sizes.size(); ++j) last -= sizes[j] * num[j];
        if (!num.empty() && last > num.back()) continue;
        num.push_back(last);
        std::vector<Rational> z;
        for (int v : num) z.emplace_back(v, q);
        return z;
    }
}

bool order_preserved(const std::vector<int>& sizes, const std::vector<Rational>& z1, const std::vector<Rational>& z2,
                     int d) {
    const auto a = embed_blocks(sizes, z1), b = embed_blocks(sizes, z2);
    return compare_points(a, b) == compare_points(expand_by_degree(a, d), expand_by_degree(b, d));
}

SuiteResult order_preservation_random(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t) {
        const int r = uniform(rng, 1, 6);
        std::vector<int> sizes;
        for (int j = 0; j + 1 < r; ++j) sizes.push_back(uniform(rng, 1, 3));
        sizes.push_back(1);
        const int q = uniform(rng, 1, 12);
        const auto z1 = random_chamber_vector(rng, sizes, q), z2 = random_chamber_vector(rng, sizes, q);
        for (int d : {1, 2, 3, 5}) {
            expect(order_preserved(sizes, z1, z2, d), [&] {
                return "verdict changes under d=" + std::to_string(d) + " for " + show(z1) + " vs " + show(z2);
            });
        }
    });
}

// Every weakly decreasing integer vector in [-2,2]^r with sum_j b_j z_j = 0.
std::vector<std::vector<Rational>> grid_vectors(const std::vector<int>& sizes) {
    std::vector<std::vector<Rational>> out;
    std::vector<int> z(sizes.size());
    auto rec = [&](auto& self, std::size_t j, int cap) -> void {
        if (j == sizes.size()) {
            int sum = 0;
            for (std::size_t i = 0; i < sizes.size(); ++i) sum += sizes[i] * z[i];
            if (sum == 0) out.emplace_back(z.begin(), z.end());
            return;
        }
        for (int v = cap; v >= -2; --v) {
            z[j] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 0, 2);
    return out;
}

SuiteResult order_preservation_grid(const VerifyConfig&) {
    std::vector<std::vector<int>> shapes;
    for (int r = 1; r <= 4; ++r) {
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> sizes;
            for (int j = 0; j < r; ++j) sizes.push_back(mask >> j & 1 ? 2 : 1);
            shapes.push_back(sizes);
        }
    }
    SuiteResult result;
    for (const auto& sizes : shapes) {
        const auto vs = grid_vectors(sizes);
        for (const auto& z1 : vs) {
            for (const auto& z2 : vs) {
                for (int d : {1, 2, 3, 5}) {
                    ++result.cases;
                    if (order_preserved(sizes, z1, z2, d)) {
                        ++result.passed;
                    } else if (!result.counterexample) {
                        result.counterexample = "verdict changes under d=" + std::to_string(d) + " for " + show(z1) +
                                                " vs " + show(z2);
                    }
                }
            }
        }
    }
    return result;
}

SuiteResult layering(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t i) {
        // Alternate between synthetic point sets and inner point sets of supports.
        std::vector<ExponentPoint> pts =
            i % 2 ? random_point_set(rng, 7) : inner_points(random_inner_support(rng, cfg.max_size), cfg.max_size);
        const auto layers = layer_antichains(pts);
        const auto check = check_layering_properties(pts, layers.layers);
        expect(check.ok, [&] { return "layering fails (" + check.property + "): " + check.detail; });
        expect(layers.size() == longest_chain_length(pts),
               [&] { return "layer count differs from longest chain on " + std::to_string(pts.size()) + " points"; });
        if (pts.size() <= 12) {
            expect(longest_chain_length(pts) == oracle::longest_chain_by_subsets(pts),
                   [&] { return "longest chain disagrees with the subset oracle"; });
        }
    });
}

SuiteResult layering_uniqueness(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t i) {
        std::vector<ExponentPoint> pts;
        do {
            pts = i % 2 ? random_point_set(rng, 7) : inner_points(random_inner_support(rng, cfg.max_size), cfg.max_size);
        } while (pts.size() > 7);
        const auto found = oracle::admissible_layerings(pts);
        expect(found.size() == 1, [&] {
            return std::to_string(found.size()) + " admissible layerings of " + std::to_string(pts.size()) + " points";
        });
        expect(found.front() == layer_antichains(pts).layers,
               [&] { return "the admissible layering differs from layer_antichains"; });
    });
}

SuiteResult segments_roundtrip(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t) {
        const Segment seg{"rho", uniform(rng, 1, static_cast<int>(std::min<std::size_t>(cfg.max_size, 5))), Rational(uniform(rng, -6, 6), 2), Rational(uniform(rng, 1, 3))};
        const auto exps = segment_exponents(seg);
        const auto parts = enumerate_progression_partitions(exps, seg.step, seg.label, cfg.max_size);
        expect(std::find(parts.begin(), parts.end(), SegmentPartition{seg}) != parts.end(),
               [&] { return format_segment(seg) + " is not recovered from its exponents"; });

        // Random multiset: compare with the brute-force oracle and check conservation.
        const auto size = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(std::min<std::size_t>(cfg.max_size, 7))));
        const Rational offset(uniform(rng, 0, 1), 2);
        std::vector<Rational> e;
        for (std::size_t j = 0; j < size; ++j) e.push_back(offset + Rational(uniform(rng, -2, 2)));
        const ExponentMultiset m(e);
        const auto lib = enumerate_progression_partitions(m, Rational(1), "rho", cfg.max_size);
        expect(lib == oracle::progression_partitions(m, Rational(1), "rho"),
               [&] { return "enumeration differs from the set-partition oracle on " + show(m.entries()); });
        for (const auto& p : lib) {
            ExponentMultiset sum;
            for (const auto& s : p) sum = sum + segment_exponents(s);
            expect(sum == m, [&] { return "partition does not conserve " + show(m.entries()); });
        }
    });
}

SuiteResult fixed_length_uniqueness(const VerifyConfig& cfg) {
    return run_cases(cfg.cases * 2 / 5, cfg.seed, [&](Rng& rng, std::size_t) {
        const int k = uniform(rng, 1, 4);
        const auto size = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(cfg.max_size)));
        const Rational offset(uniform(rng, -1, 1), 2);
        std::vector<Rational> e;
        // Bias toward decomposable multisets by sometimes drawing whole segments.
        while (e.size() < size) {
            const Rational top = offset + Rational(uniform(rng, -2, 3));
            const int len = uniform(rng, 0, 1) ? k : 1;
            for (int j = 0; j < len && e.size() < size; ++j) e.push_back(top - Rational(j));
        }
        const ExponentMultiset m(e);
        const auto all = enumerate_progression_partitions(m, Rational(1), "", cfg.max_size);
        std::vector<SegmentPartition> fixed;
        std::copy_if(all.begin(), all.end(), std::back_inserter(fixed), [k](const SegmentPartition& p) {
            return std::all_of(p.begin(), p.end(), [k](const Segment& s) { return s.length == k; });
        });
        const auto brute = oracle::count_fixed_length_partitions(m, k);
        expect(fixed.size() <= 1, [&] { return std::to_string(fixed.size()) + " length-k partitions of " + show(e); });
        expect(fixed.size() == brute, [&] { return "enumeration and oracle counts differ on " + show(e); });
        const auto greedy = greedy_decompose_fixed_length(m, k);
        const bool ok = std::holds_alternative<std::vector<Segment>>(greedy);
        expect(ok == (fixed.size() == 1), [&] { return "greedy outcome disagrees with enumeration on " + show(e); });
        if (ok) {
            auto segs = std::get<std::vector<Segment>>(greedy);
            std::sort(segs.begin(), segs.end(), canonical_less);
            expect(segs == fixed.front(), [&] { return "greedy decomposition differs on " + show(e); });
        }
    });
}

SuiteResult support_transfer_roundtrip(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t) {
        const Support p = random_inner_support(rng, cfg.max_size);
        const auto t = transfer_support(p);
        const auto back = invert_support(t.sigma);
        expect(std::holds_alternative<Support>(back) && std::get<Support>(back) == p,
               [&] { return "invert(transfer(p)) != p for " + show(p); });
        expect(transfer_support(normalize_support(shuffled(rng, p))).sigma == t.sigma,
               [&] { return "factor order changes sigma for " + show(p); });
    });
}

SuiteResult triples_enumeration(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t i) {
        const Support inner = random_inner_support(rng, cfg.max_size);
        const Support s = i % 2 ? transfer_support(inner).sigma : inner;
        const auto orbits = enumerate_triples(s, cfg.max_size);
        std::size_t product = 1;
        for (const auto& l : s.labels.labels()) {
            const auto e = exponent_multiset(s, l.name);
            if (!e.empty()) {
                product *= enumerate_progression_partitions(e, s.labels.step_on(s.side, l.name), l.name, cfg.max_size)
                               .size();
            }
        }
        expect(orbits.size() == product, [&] { return "orbit count is not the product for " + show(s); });
        for (const auto& o : orbits) {
            const auto& t = o.canonical;
            const auto c = t.centers();
            expect(std::is_sorted(c.begin(), c.end(), std::greater<>()),
                   [&] { return format_triple(t) + " is outside the closed chamber"; });
            Rational sum(0);
            ExponentMultiset all;
            for (std::size_t j = 0; j < c.size(); ++j) {
                sum += c[j] * Rational(t.block_sizes[j]);
                all = all + segment_exponents(t.blocks[j]);
            }
            expect(sum == Rational(0), [&] { return format_triple(t) + " violates the center condition"; });
            ExponentMultiset want;
            for (const auto& l : s.labels.labels()) want = want + exponent_multiset(s, l.name);
            expect(all == want, [&] { return format_triple(t) + " does not conserve the support"; });
            expect(canonicalize_triple(t) == t, [&] { return "canonicalize is not idempotent"; });

            // Permute blocks within runs of equal centers: an isomorphic triple.
            Triple perm = t;
            std::vector<std::size_t> idx(perm.blocks.size());
            std::iota(idx.begin(), idx.end(), 0);
            for (std::size_t a = 0; a < idx.size();) {
                std::size_t b = a;
                while (b < idx.size() && c[b] == c[a]) ++b;
                std::shuffle(idx.begin() + static_cast<long>(a), idx.begin() + static_cast<long>(b), rng);
                a = b;
            }
            for (std::size_t j = 0; j < idx.size(); ++j) {
                perm.blocks[j] = t.blocks[idx[j]];
                perm.block_sizes[j] = t.block_sizes[idx[j]];
            }
            expect(canonicalize_triple(perm) == t, [&] { return "isomorphic triples canonicalize differently"; });
            if (s.side == Side::split) {
                expect(triple_in_image(perm, s.labels) == o.in_image,
                       [&] { return "in_image is not constant on the orbit of " + format_triple(t); });
            }
        }
    });
}

SuiteResult triple_transfer(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed, [&](Rng& rng, std::size_t) {
        const Support inner = random_inner_support(rng, cfg.max_size);
        const auto sigma = transfer_support(inner).sigma;
        const auto inner_orbits = enumerate_triples(inner, cfg.max_size);
        const auto split_orbits = enumerate_triples(sigma, cfg.max_size);
        std::map<Triple, Triple, decltype(&triple_less)> images(&triple_less);
        for (const auto& o : inner_orbits) {
            const auto t = transfer_triple(o.canonical, inner.labels);
            expect(triple_in_image(t, inner.labels), [&] { return format_triple(t) + " reported outside the image"; });
            expect(images.emplace(t, o.canonical).second,
                   [&] { return "transfer is not injective at " + format_triple(o.canonical); });
            // Canonical forms commute with transfer.
            Triple raw = o.canonical;
            std::reverse(raw.blocks.begin(), raw.blocks.end());
            std::reverse(raw.block_sizes.begin(), raw.block_sizes.end());
            expect(canonicalize_triple(transfer_triple(raw, inner.labels)) == t,
                   [&] { return "canonicalization does not commute with transfer at " + format_triple(o.canonical); });
        }
        std::size_t in_image = 0;
        for (const auto& o : split_orbits) {
            const auto pre = preimage_triple(o.canonical, sigma.labels);
            expect(pre.has_value() == o.in_image, [&] { return "preimage existence disagrees for " + format_triple(o.canonical); });
            if (!pre) continue;
            ++in_image;
            auto it = images.find(o.canonical);
            expect(it != images.end() && it->second == *pre,
                   [&] { return "preimage of " + format_triple(o.canonical) + " is not among the inner triples"; });
        }
        expect(in_image == inner_orbits.size(), [&] { return "image orbits are not in bijection for " + show(inner); });
    });
}

void structure_case(const Support& inner, const VerifyConfig& cfg) {
    const BuildOptions opts{cfg.max_size};
    const auto report = correspondence_report(inner, opts);
    const auto inner_orbits = enumerate_triples(inner, cfg.max_size);
    const auto split_orbits = enumerate_triples(report.transfer.sigma, cfg.max_size);
    auto bad = check_report_structure(report.inner, inner_orbits);
    expect(!bad, [&] { return "inner report: " + *bad + " for " + show(inner); });
    bad = check_report_structure(report.split, split_orbits);
    expect(!bad, [&] { return "split report: " + *bad + " for " + show(inner); });

    const auto& split = report.split;
    for (std::size_t i = 0; i < report.inner.layers.size(); ++i) {
        const auto& target = split.layers[static_cast<std::size_t>(split.Lhat_indices[i])];
        expect(std::all_of(target.orbits.begin(), target.orbits.end(), [](const auto& o) { return o.in_image; }),
               [&] { return "layer Lhat_" + std::to_string(i) + " holds a non-image orbit"; });
        if (split.epsilons[i] == 1) {
            const auto& next = split.layers[static_cast<std::size_t>(split.Lhat_indices[i] + 1)];
            expect(std::none_of(next.orbits.begin(), next.orbits.end(), [](const auto& o) { return o.in_image; }),
                   [&] { return "layer Lhat_" + std::to_string(i) + "+1 holds an image orbit"; });
        }
        std::vector<Triple> mapped, present;
        for (const auto& o : report.inner.layers[i].orbits) mapped.push_back(transfer_triple(o.canonical, inner.labels));
        for (const auto& o : target.orbits) present.push_back(o.canonical);
        std::sort(mapped.begin(), mapped.end(), triple_less);
        expect(std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end() && mapped == present,
               [&] { return "transfer is not a bijection from inner layer " + std::to_string(i); });
    }
    // Index identities recomputed from scratch.
    const int top = split.ell_prime;
    int ell = 0, eps = 0;
    for (int i = 0; i <= top; ++i) {
        ell += split.ell_list[static_cast<std::size_t>(i)];
        expect(split.L_indices[static_cast<std::size_t>(i)] == 1 + 2 * i + ell, [&] { return "L_i identity fails"; });
        expect(split.Lhat_indices[static_cast<std::size_t>(i)] == split.L_indices[static_cast<std::size_t>(i)] + eps,
               [&] { return "Lhat_i identity fails"; });
        eps += split.epsilons[static_cast<std::size_t>(i)];
    }
    expect(split.total_length == 3 + 2 * top + ell + split.ell_list.back(), [&] { return "L+1 identity fails"; });
    expect(split.refined_length == split.total_length + eps, [&] { return "Lhat+1 identity fails"; });
    expect(static_cast<int>(split.layers.size()) == split.refined_length, [&] { return "layer count mismatch"; });
}

SuiteResult filtration_structure(const VerifyConfig& cfg) {
    return run_cases(cfg.cases * 2 / 5, cfg.seed,
                     [&](Rng& rng, std::size_t) { structure_case(random_inner_support(rng, cfg.max_size), cfg); });
}

void tilde_case(const Support& inner, const VerifyConfig& cfg) {
    const auto sigma = transfer_support(inner).sigma;
    const auto partition = build_split_partition(sigma, BuildOptions{cfg.max_size});
    std::vector<ExponentPoint> tilde;
    for (const auto& part : partition.tilde_parts) tilde.insert(tilde.end(), part.begin(), part.end());
    if (tilde.size() > 6) return;
    const auto found = oracle::admissible_tilde_partitions(partition.image_layers, tilde);
    expect(found.size() == 1, [&] {
        return std::to_string(found.size()) + " admissible tilde partitions for " + show(inner);
    });
    auto built = partition.tilde_parts;
    for (auto& part : built) std::sort(part.begin(), part.end());
    expect(found.front() == built, [&] { return "constructed tilde partition differs from the oracle for " + show(inner); });
    if (inner_points(inner, cfg.max_size).size() <= 7) {
        const auto pts = inner_points(inner, cfg.max_size);
        const auto layerings = oracle::admissible_layerings(pts);
        expect(layerings.size() == 1 && layerings.front() == layer_antichains(pts).layers,
               [&] { return "inner layering is not the unique admissible one for " + show(inner); });
    }
}

SuiteResult tilde_uniqueness(const VerifyConfig& cfg) {
    return run_cases(cfg.cases, cfg.seed,
                     [&](Rng& rng, std::size_t) { tilde_case(random_inner_support(rng, cfg.max_size), cfg); });
}

}  // namespace

// Two labels of split size d with distinct k and small symmetric exponent
// multisets. Shared image points are common here and rare in random supports.
std::vector<Support> small_symmetric_family(std::size_t max_split) {
    const std::vector<std::vector<Rational>> shapes = {
        {},
        {Rational(0)},
        {Rational(1, 2), Rational(-1, 2)},
        {Rational(1), Rational(-1)},
        {Rational(0), Rational(1, 2), Rational(-1, 2)},
        {Rational(0), Rational(1), Rational(-1)},
        {Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)},
    };
    std::vector<Support> out;
    for (int d : {2, 3, 4}) {
        for (int ka = 1; ka <= d; ++ka) {
            for (int kb = 1; kb <= d; ++kb) {
                if (d % ka || d % kb || ka == kb) continue;
                const LabelTable table(d, {make_label("rho", ka, ka, d), make_label("tau", kb, kb, d)});
                for (const auto& ea : shapes) {
                    for (const auto& eb : shapes) {
                        if (ea.empty() && eb.empty()) continue;
                        if (ea.size() * static_cast<std::size_t>(ka) + eb.size() * static_cast<std::size_t>(kb) > max_split) continue;
                        Support s;
                        s.side = Side::inner;
                        s.labels = table;
                        for (const auto& e : ea) s.factors.push_back(Factor{"rho", e});
                        for (const auto& e : eb) s.factors.push_back(Factor{"tau", e});
                        out.push_back(normalize_support(s));
                    }
                }
            }
        }
    }
    return out;
}

namespace {

SuiteResult filtration_exhaustive(const VerifyConfig& cfg) {
    const auto family = small_symmetric_family(cfg.max_size);
    return run_cases(family.size(), cfg.seed, [&](Rng&, std::size_t i) {
        structure_case(family[i], cfg);
        tilde_case(family[i], cfg);
    });
}

SuiteResult report_roundtrip(const VerifyConfig& cfg) {
    return run_cases(std::max<std::size_t>(1, cfg.cases / 10), cfg.seed, [&](Rng& rng, std::size_t) {
        const Support inner = random_inner_support(rng, cfg.max_size);
        const auto report = correspondence_report(inner, BuildOptions{cfg.max_size});
        const auto doc = correspondence_to_json(report, inner);
        const auto text = doc.dump(2);
        expect(correspondence_from_json(nlohmann::json::parse(text)) == report,
               [&] { return "correspondence report does not round-trip for " + show(inner); });
        expect(correspondence_to_json(correspondence_report(inner, BuildOptions{cfg.max_size}), inner).dump(2) == text,
               [&] { return "report is not deterministic for " + show(inner); });
        expect(support_from_json(support_to_json(inner)) == inner, [&] { return "support does not round-trip"; });
    });
}

struct SuiteEntry {
    const char* name;
    const char* description;
    SuiteResult (*run)(const VerifyConfig&);
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries = {
        {"support_normalize", "normal form is idempotent and permutation invariant", support_normalize},
        {"poset_order", "dominance is a strict partial order; embeddings are linear", poset_order},
        {"order_preservation_random", "comparability survives d-fold expansion (random)", order_preservation_random},
        {"order_preservation_grid", "comparability survives d-fold expansion (integer grid)", order_preservation_grid},
        {"layering", "antichain layering is admissible and as short as the longest chain", layering},
        {"layering_uniqueness", "exactly one admissible layering (<= 7 points)", layering_uniqueness},
        {"segments_roundtrip", "segment enumeration matches the set-partition oracle", segments_roundtrip},
        {"fixed_length_uniqueness", "length-k decompositions are unique and greedy finds them", fixed_length_uniqueness},
        {"support_transfer_roundtrip", "invert(transfer(p)) = p", support_transfer_roundtrip},
        {"triples_enumeration", "orbit counts, chamber, center and canonical forms", triples_enumeration},
        {"triple_transfer", "triple transfer is injective onto the image orbits", triple_transfer},
        {"tilde_uniqueness", "exactly one admissible tilde partition (<= 6 points)", tilde_uniqueness},
        {"filtration_structure", "refined filtration structure and correspondence", filtration_structure},
        {"filtration_exhaustive", "structure and uniqueness on all small two-label symmetric supports",
         filtration_exhaustive},
        {"report_roundtrip", "reports re-parse and are deterministic", report_roundtrip},
    };
    return entries;
}

std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return seed ^ h;
}

}  // namespace

Support random_inner_support(std::mt19937_64& rng, std::size_t max_split_factors, std::size_t max_inner_factors) {
    static const std::vector<std::string> names = {"rho", "sigma", "tau"};
    // Half the supports are symmetric (pairs +-s) over labels of one common
    // split size and at least two distinct k: exponents of different labels
    // then line up, which is what makes image and non-image triples share points.
    bool symmetric = uniform(rng, 0, 1) == 1;
    const int d = symmetric ? uniform(rng, 2, 4) : uniform(rng, 1, 4);
    std::vector<int> divisors;
    for (int k = 1; k <= d; ++k) {
        if (d % k == 0 && static_cast<std::size_t>(k) <= max_split_factors) divisors.push_back(k);
    }
    if (divisors.size() < 2) symmetric = false;
    std::vector<CuspidalLabel> labels;
    if (symmetric) {
        const int label_count = uniform(rng, 2, 3);
        std::vector<int> ks;
        do {
            ks.clear();
            for (int i = 0; i < label_count; ++i) ks.push_back(pick(rng, divisors));
        } while (std::adjacent_find(ks.begin(), ks.end(), std::not_equal_to<>()) == ks.end());
        // Split size d for every label: inner size k.
        for (int i = 0; i < label_count; ++i) {
            const int k = ks[static_cast<std::size_t>(i)];
            labels.push_back(make_label(names[static_cast<std::size_t>(i)], k, k, d));
        }
    } else {
        const int label_count = uniform(rng, 1, 3);
        for (int i = 0; i < label_count; ++i) {
            labels.push_back(make_label(names[static_cast<std::size_t>(i)], uniform(rng, 1, 2), pick(rng, divisors), d));
        }
    }
    Support s;
    s.side = Side::inner;
    s.labels = LabelTable(d, labels);

    const std::size_t target = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_inner_factors)));
    std::size_t split_count = 0;
    auto fits = [&](const CuspidalLabel& l, std::size_t copies) {
        return s.factors.size() + copies <= target && split_count + copies * static_cast<std::size_t>(l.k) <= max_split_factors;
    };
    for (int attempt = 0; attempt < 32 && s.factors.size() < target; ++attempt) {
        const auto& l = pick(rng, labels);
        if (symmetric) {
            const Rational e(uniform(rng, 0, 3), 2);
            const std::size_t copies = e == Rational(0) ? 1 : 2;
            if (!fits(l, copies)) continue;
            split_count += copies * static_cast<std::size_t>(l.k);
            s.factors.push_back(Factor{l.name, e});
            if (copies == 2) s.factors.push_back(Factor{l.name, -e});
        } else {
            if (!fits(l, 1)) continue;
            split_count += static_cast<std::size_t>(l.k);
            s.factors.push_back(Factor{l.name, Rational(uniform(rng, -4, 4), 2)});
        }
    }
    if (s.factors.empty()) {
        const auto& l = *std::min_element(labels.begin(), labels.end(),
                                          [](const auto& a, const auto& b) { return a.k < b.k; });
        s.factors.push_back(Factor{l.name, Rational(0)});
    }
    // Shift by the weighted mean to meet the center condition.
    Rational weighted(0);
    int total = 0;
    for (const auto& f : s.factors) {
        const int m = s.labels.at(f.label).inner_size;
        weighted += Rational(m) * f.exponent;
        total += m;
    }
    const Rational mean = weighted / Rational(total);
    for (auto& f : s.factors) f.exponent -= mean;
    return normalize_support(s);
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
    for (const auto& e : registry()) {
        if (name != e.name) continue;
        VerifyConfig local = config;
        local.seed = suite_seed(config.seed, name);
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r = e.run(local);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.name = e.name;
        r.description = e.description;
        return r;
    }
    throw Error(ErrorKind::malformed_input, "unknown verify suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const VerifyConfig& config) {
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto& name : suite_names()) {
        jobs.push_back(std::async(std::launch::async, [name, config] { return run_suite(name, config); }));
    }
    std::vector<SuiteResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace jlf::verify
