#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "jlf/oracles.hpp"
#include "jlf/transfer.hpp"
#include "jlf/triples.hpp"
#include "jlf/verify.hpp"

using namespace jlf;
using fixtures::q;

namespace {

std::size_t oracle_orbit_count(const Support& s) {
    std::size_t n = 1;
    for (const auto& l : s.labels.labels()) {
        const auto e = exponent_multiset(s, l.name);
        if (e.empty()) continue;
        n *= oracle::progression_partitions(e, s.labels.step_on(s.side, l.name), l.name).size();
    }
    return n;
}

Triple triple(Side side, std::vector<Segment> blocks) {
    return make_triple(side, std::move(blocks), fixtures::quaternion().labels);
}

ExponentPoint golden_point() {
    return ExponentPoint({q(1, 2), q(1, 2), q(0), q(0), q(0), q(0), q(-1, 2), q(-1, 2)});
}

}  // namespace

TEST_CASE("quaternion inner orbits") {
    const Support s = fixtures::quaternion();
    const auto orbits = enumerate_triples(s);
    CHECK(orbits.size() == 2);
    CHECK(orbits.size() == oracle_orbit_count(s));

    const auto singles = triple(Side::inner, {{"tau", 1, q(1, 2), q(2)}, {"rho", 1, q(0), q(2)}, {"tau", 1, q(-1, 2), q(2)}});
    const auto joined = triple(Side::inner, {{"rho", 1, q(0), q(2)}, {"tau", 2, q(0), q(2)}});
    std::set<std::string> got;
    for (const auto& o : orbits) {
        CHECK(o.in_image);
        CHECK(o.automorphisms == 1);
        got.insert(format_triple(o.canonical));
    }
    CHECK(got == std::set<std::string>{format_triple(canonicalize_triple(singles)), format_triple(canonicalize_triple(joined))});
    CHECK(singles.block_sizes == std::vector<int>{1, 2, 1});
    CHECK(triple_point(singles) == ExponentPoint({q(1, 2), q(0), q(0), q(-1, 2)}));
    CHECK(triple_point(canonicalize_triple(joined)) == ExponentPoint::zero(4));
}

TEST_CASE("quaternion split orbits") {
    const Support sigma = transfer_support(fixtures::quaternion()).sigma;
    const auto orbits = enumerate_triples(sigma);
    CHECK(orbits.size() == 4);
    CHECK(orbits.size() == oracle_orbit_count(sigma));
    int image = 0;
    for (const auto& o : orbits) image += o.in_image ? 1 : 0;
    CHECK(image == 2);
}

TEST_CASE("the two triples sharing a point") {
    const auto image = canonicalize_triple(triple(Side::split, {{"tau", 1, q(1, 2)}, {"rho", 2, q(0)}, {"tau", 1, q(-1, 2)}}));
    const auto other = canonicalize_triple(triple(Side::split, {{"rho", 1, q(1, 2)}, {"tau", 2, q(0)}, {"rho", 1, q(-1, 2)}}));
    CHECK(image.block_sizes == std::vector<int>{2, 4, 2});
    CHECK(triple_point(image) == golden_point());
    CHECK(triple_point(other) == golden_point());
    const auto labels = fixtures::quaternion().labels;
    CHECK(triple_in_image(image, labels));
    CHECK(!triple_in_image(other, labels));
}

TEST_CASE("canonicalize_triple") {
    const auto t = triple(Side::split, {{"tau", 2, q(0)}, {"rho", 2, q(0)}});
    const auto c = canonicalize_triple(t);
    CHECK(c.blocks[0].label == "rho");
    CHECK(c.blocks[1].label == "tau");
    CHECK(c.block_sizes == std::vector<int>{4, 4});
    CHECK(canonicalize_triple(c) == c);
    const auto single = triple(Side::split, {{"rho", 1, q(0)}});
    CHECK(canonicalize_triple(single) == single);
    CHECK(single.symmetric_algebra_dim() == 0);
}

TEST_CASE("automorphism_count") {
    CHECK(automorphism_count(canonicalize_triple(
              triple(Side::inner, {{"tau", 1, q(1, 2), q(2)}, {"rho", 1, q(0), q(2)}, {"tau", 1, q(-1, 2), q(2)}}))) == 1);
    CHECK(automorphism_count(triple(Side::split, {{"tau", 1, q(0)}, {"tau", 1, q(0)}})) == 2);
    CHECK(automorphism_count(triple(Side::split, {{"tau", 1, q(0)}, {"tau", 1, q(0)}, {"tau", 1, q(0)}})) == 6);
    CHECK(automorphism_count(triple(Side::split, {{"tau", 1, q(0)}, {"rho", 1, q(0)}})) == 1);
}

TEST_CASE("single factor support has one orbit") {
    CHECK(enumerate_triples(fixtures::single_factor(1, 1, 1)).size() == 1);
    CHECK(enumerate_triples(fixtures::single_factor(2, 2, 2)).size() == 1);
}

TEST_CASE("random supports: orbit counts and canonical forms") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        const Support inner = verify::random_inner_support(rng, 8);
        for (const Support& s : {inner, transfer_support(inner).sigma}) {
            const auto orbits = enumerate_triples(s);
            CHECK(orbits.size() == oracle_orbit_count(s));
            for (std::size_t j = 0; j < orbits.size(); ++j) {
                const auto& t = orbits[j].canonical;
                CHECK(canonicalize_triple(t) == t);
                CHECK(orbits[j].automorphisms == automorphism_count(t));
                int total = 0;
                for (int b : t.block_sizes) total += b;
                CHECK(total == s.ambient_rank());
                if (j) CHECK(triple_less(orbits[j - 1].canonical, t));
            }
        }
    }
}
