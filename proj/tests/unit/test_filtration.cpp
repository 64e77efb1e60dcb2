#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "jlf/error.hpp"
#include "jlf/filtration.hpp"
#include "jlf/oracles.hpp"
#include "jlf/verify.hpp"

using namespace jlf;
using fixtures::q;

namespace {

ExponentPoint golden_point() {
    return ExponentPoint({q(1, 2), q(1, 2), q(0), q(0), q(0), q(0), q(-1, 2), q(-1, 2)});
}

ExponentPoint half_point() {
    return ExponentPoint({q(1, 2), q(1, 2), q(1, 2), q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2), q(-1, 2)});
}

std::vector<ExponentPoint> inner_points(const Support& inner) {
    std::vector<ExponentPoint> pts;
    for (const auto& o : enumerate_triples(inner)) pts.push_back(triple_point(o.canonical));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<std::string> orbit_names(const FiltrationLayer& layer) {
    std::vector<std::string> out;
    for (const auto& o : layer.orbits) out.push_back(format_triple(o.canonical));
    return out;
}

}  // namespace

TEST_CASE("quaternion inner filtration") {
    const Support inner = fixtures::quaternion();
    const auto r = build_inner_filtration(inner);
    REQUIRE(r.layers.size() == 2);
    CHECK(r.ell_prime == 1);
    CHECK(r.layers[0].points == std::vector<ExponentPoint>{ExponentPoint({q(1, 2), q(0), q(0), q(-1, 2)})});
    CHECK(r.layers[1].points == std::vector<ExponentPoint>{ExponentPoint::zero(4)});
    CHECK(orbit_names(r.layers[0]) == std::vector<std::string>{"[tau'@1/2, rho'@0, tau'@-1/2]"});
    CHECK(orbit_names(r.layers[1]) == std::vector<std::string>{"[rho'@0, MW'(tau',2)@0]"});

    const auto pts = inner_points(inner);
    const auto oracle = oracle::admissible_layerings(pts);
    REQUIRE(oracle.size() == 1);
    for (std::size_t i = 0; i < r.layers.size(); ++i) {
        auto mine = r.layers[i].points;
        auto ref = oracle.front()[i];
        std::sort(mine.begin(), mine.end());
        std::sort(ref.begin(), ref.end());
        CHECK(mine == ref);
    }
    CHECK(oracle::longest_chain_by_subsets(pts) == r.layers.size());
}

TEST_CASE("quaternion split partition") {
    const auto sigma = transfer_support(fixtures::quaternion()).sigma;
    const auto p = build_split_partition(sigma);
    CHECK(p.ell_prime == 1);
    REQUIRE(p.image_layers.size() == 2);
    CHECK(p.image_layers[0] == std::vector<ExponentPoint>{golden_point()});
    CHECK(p.image_layers[1] == std::vector<ExponentPoint>{ExponentPoint::zero(8)});
    REQUIRE(p.tilde_parts.size() == 3);
    CHECK(p.tilde_parts[0] == std::vector<ExponentPoint>{half_point()});
    CHECK(p.tilde_parts[1].empty());
    CHECK(p.tilde_parts[2].empty());
    CHECK(p.ell_list == std::vector<int>{0, -1, -1});
    CHECK(p.L_indices == std::vector<int>{1, 2});
    CHECK(p.total_length == 3);

    const auto oracle = oracle::admissible_tilde_partitions(p.image_layers, {half_point()});
    REQUIRE(oracle.size() == 1);
    CHECK(oracle.front() == p.tilde_parts);

    const auto naive = naive_split_filtration(p);
    CHECK(naive.layers.size() == 3);
    CHECK(naive.total_length == 3);
}

TEST_CASE("quaternion refined split filtration") {
    const auto sigma = transfer_support(fixtures::quaternion()).sigma;
    const auto r = build_refined_filtration(sigma);
    REQUIRE(r.layers.size() == 4);
    CHECK(r.refined);
    CHECK(r.epsilons == std::vector<int>{1, 0});
    CHECK(r.L_indices == std::vector<int>{1, 2});
    CHECK(r.Lhat_indices == std::vector<int>{1, 3});
    CHECK(r.total_length == 3);
    CHECK(r.refined_length == 4);

    CHECK(r.layers[0].kind == LayerKind::split_nonimage_only);
    CHECK(r.layers[0].points == std::vector<ExponentPoint>{half_point()});
    CHECK(r.layers[1].kind == LayerKind::split_image_only);
    CHECK(orbit_names(r.layers[1]) == std::vector<std::string>{"[tau@1/2, MW(rho,2)@0, tau@-1/2]"});
    CHECK(r.layers[2].kind == LayerKind::split_nonimage_only);
    CHECK(orbit_names(r.layers[2]) == std::vector<std::string>{"[rho@1/2, MW(tau,2)@0, rho@-1/2]"});
    CHECK(r.layers[3].kind == LayerKind::split_image_only);
    CHECK(r.layers[3].points == std::vector<ExponentPoint>{ExponentPoint::zero(8)});
    CHECK(!check_report_structure(r, enumerate_triples(sigma)).has_value());
}

TEST_CASE("quaternion correspondence") {
    const auto c = correspondence_report(fixtures::quaternion());
    CHECK(c.quotient_map == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
    CHECK(c.unmatched_split_indices == std::vector<int>{0, 2});
    REQUIRE(c.orbit_bijections.size() == 2);
    CHECK(c.orbit_bijections[0].size() == 1);
    CHECK(format_triple(c.orbit_bijections[0][0].second) == "[tau@1/2, MW(rho,2)@0, tau@-1/2]");
    CHECK(c.inner.layers.size() == 2);
    CHECK(c.split.layers.size() == 4);
}

TEST_CASE("single factor with k = 1") {
    const auto c = correspondence_report(fixtures::single_factor(1, 1, 1));
    REQUIRE(c.split.layers.size() == 1);
    CHECK(c.split.layers[0].kind == LayerKind::split_image_only);
    CHECK(c.split.epsilons == std::vector<int>{0});
    CHECK(c.quotient_map == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(c.unmatched_split_indices.empty());

    const auto d2 = correspondence_report(fixtures::single_factor(1, 1, 2));
    CHECK(d2.split.layers.size() == 1);
    CHECK(d2.quotient_map == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("single factor with k = d = 2") {
    // rho'@0 transfers to rho@1/2 (x) rho@-1/2, which also carries the
    // two-singleton triple at a point of its own below the zero vector.
    const Support inner = fixtures::single_factor(1, 2, 2);
    const auto sigma = transfer_support(inner).sigma;
    const auto orbits = enumerate_triples(sigma);
    REQUIRE(orbits.size() == 2);
    const auto c = correspondence_report(inner);
    REQUIRE(c.split.layers.size() == 2);
    CHECK(c.split.layers[0].kind == LayerKind::split_nonimage_only);
    CHECK(c.split.layers[0].points == std::vector<ExponentPoint>{ExponentPoint({q(1, 2), q(-1, 2)})});
    CHECK(c.split.layers[1].kind == LayerKind::split_image_only);
    CHECK(c.split.epsilons == std::vector<int>{0});
    CHECK(c.quotient_map == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(c.unmatched_split_indices == std::vector<int>{0});
}

TEST_CASE("all k = 1, d = 1: every filtration is the inner one") {
    Support s;
    s.labels = LabelTable(1, {make_label("a", 1, 1, 1), make_label("b", 1, 1, 1)});
    s.factors = {{"a", q(1)}, {"b", q(0)}, {"a", q(0)}, {"b", q(-1)}};
    s = normalize_support(s);
    const auto inner = build_inner_filtration(s);
    const auto sigma = transfer_support(s).sigma;
    const auto naive = build_naive_filtration(sigma);
    const auto refined = build_refined_filtration(sigma);
    REQUIRE(naive.layers.size() == inner.layers.size());
    REQUIRE(refined.layers.size() == inner.layers.size());
    for (std::size_t i = 0; i < inner.layers.size(); ++i) {
        CHECK(naive.layers[i].points == inner.layers[i].points);
        CHECK(refined.layers[i].points == inner.layers[i].points);
        CHECK(refined.layers[i].orbits.size() == inner.layers[i].orbits.size());
    }
    CHECK(std::all_of(refined.epsilons.begin(), refined.epsilons.end(), [](int e) { return e == 0; }));
    const auto c = correspondence_report(s);
    for (std::size_t i = 0; i < c.quotient_map.size(); ++i) {
        CHECK(c.quotient_map[i] == std::pair<int, int>(static_cast<int>(i), static_cast<int>(i)));
    }
    CHECK(c.unmatched_split_indices.empty());
}

TEST_CASE("split inputs outside the image are rejected") {
    Support bad;
    bad.side = Side::split;
    bad.labels = fixtures::quaternion().labels;
    bad.factors = {{"rho", q(1)}, {"rho", q(-1)}};
    bad = normalize_support(bad);
    CHECK_THROWS_AS(build_split_partition(bad), Error);
}

TEST_CASE("layer kinds round trip through their names") {
    for (auto k : {LayerKind::inner, LayerKind::split_mixed, LayerKind::split_image_only, LayerKind::split_nonimage_only}) {
        CHECK(parse_layer_kind(to_string(k)) == k);
    }
}

TEST_CASE("structure on the exhaustive symmetric family") {
    for (const auto& inner : verify::small_symmetric_family(8)) {
        CAPTURE(format_support(inner));
        const auto c = correspondence_report(inner);
        const auto sigma = c.transfer.sigma;
        CHECK(!check_report_structure(c.split, enumerate_triples(sigma)).has_value());
        CHECK(c.split.layers.size() == static_cast<std::size_t>(c.split.refined_length));
        CHECK(c.quotient_map.size() == c.inner.layers.size());
        CHECK(c.quotient_map.size() + c.unmatched_split_indices.size() == c.split.layers.size());
        for (int u : c.unmatched_split_indices) {
            for (const auto& o : c.split.layers[u].orbits) CHECK(!o.in_image);
        }
    }
}
