#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "jlf/error.hpp"
#include "jlf/oracles.hpp"
#include "jlf/poset.hpp"

using namespace jlf;
using fixtures::q;

namespace {

ExponentPoint pt(std::vector<Rational> c) { return ExponentPoint(std::move(c)); }

const ExponentPoint kX = pt({q(1, 2), q(1, 2), q(0), q(0), q(0), q(0), q(-1, 2), q(-1, 2)});
const ExponentPoint kInner = pt({q(1, 2), q(0), q(0), q(-1, 2)});

// Independent reading of the order: every proper prefix sum of s is <= that of t.
bool prefix_dominates(const std::vector<Rational>& s, const std::vector<Rational>& t) {
    Rational a(0), b(0);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        a += s[i];
        b += t[i];
        if (a > b) return false;
    }
    return s != t;
}

}  // namespace

TEST_CASE("compare_points") {
    const auto zero = ExponentPoint::zero(8);
    CHECK(prefix_dominates(zero.coords(), kX.coords()));
    CHECK(compare_points(zero, kX) == Order::succeeds);
    CHECK(compare_points(kX, zero) == Order::precedes);
    CHECK(compare_points(kX, kX) == Order::equal);

    const auto s = pt({q(1, 2), q(-1, 2), q(0), q(0)});
    const auto t = pt({q(0), q(0), q(1, 2), q(-1, 2)});
    CHECK(!prefix_dominates(s.coords(), t.coords()));
    CHECK(!prefix_dominates(t.coords(), s.coords()));
    CHECK(compare_points(s, t) == Order::incomparable);

    CHECK_THROWS_AS(compare_points(zero, kInner), Error);
}

TEST_CASE("compare_points agrees with prefix sums on random points") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int i = 0; i < 300; ++i) {
        std::vector<Rational> a, b;
        Rational sa(0), sb(0);
        for (int j = 0; j < 4; ++j) {
            a.emplace_back(coord(rng), 2);
            b.emplace_back(coord(rng), 2);
            sa += a.back();
            sb += b.back();
        }
        a.push_back(-sa);
        b.push_back(-sb);
        const auto o = compare_points(pt(a), pt(b));
        CHECK((o == Order::succeeds) == prefix_dominates(a, b));
        CHECK((o == Order::precedes) == prefix_dominates(b, a));
    }
}

TEST_CASE("points must be centered") {
    CHECK_THROWS_AS(pt({q(1), q(0)}), Error);
}

TEST_CASE("embed_blocks") {
    const std::vector<Rational> z{q(1, 2), q(0), q(-1, 2)};
    CHECK(embed_blocks(std::vector<int>{2, 4, 2}, z) == kX);
    CHECK(embed_blocks(std::vector<int>{1, 2, 1}, z) == kInner);
    CHECK(embed_blocks(std::vector<int>{5}, std::vector<Rational>{q(0)}) == ExponentPoint::zero(5));
    try {
        embed_blocks(std::vector<int>{1, 1}, std::vector<Rational>{q(1), q(0)});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::center_condition_violated);
    }
}

TEST_CASE("expand_by_degree") {
    CHECK(expand_by_degree(kInner, 2) == kX);
    CHECK(expand_by_degree(kInner, 1) == kInner);
    CHECK(expand_by_degree(ExponentPoint::zero(4), 3) == ExponentPoint::zero(12));
}

TEST_CASE("layer_antichains") {
    const auto zero = ExponentPoint::zero(4);
    SUBCASE("two comparable points") {
        const auto l = layer_antichains({zero, kInner});
        REQUIRE(l.size() == 2);
        CHECK(l.layers[0] == std::vector<ExponentPoint>{kInner});
        CHECK(l.layers[1] == std::vector<ExponentPoint>{zero});
        const auto oracle = oracle::admissible_layerings({zero, kInner});
        REQUIRE(oracle.size() == 1);
        CHECK(oracle.front() == l.layers);
    }
    SUBCASE("singleton") {
        CHECK(layer_antichains({kInner}).layers == std::vector<std::vector<ExponentPoint>>{{kInner}});
    }
    SUBCASE("antichain") {
        const auto a = pt({q(1), q(-1), q(0), q(0)});
        const auto b = pt({q(0), q(0), q(1), q(-1)});
        const auto c = pt({q(0), q(1), q(-1), q(0)});
        REQUIRE(compare_points(a, b) == Order::incomparable);
        REQUIRE(compare_points(a, c) == Order::incomparable);
        REQUIRE(compare_points(b, c) == Order::incomparable);
        const auto l = layer_antichains({a, b, c});
        CHECK(l.size() == 1);
        CHECK(l.layers[0].size() == 3);
        CHECK(longest_chain_length(std::vector<ExponentPoint>{a, b, c}) == 1);
    }
    SUBCASE("empty input") {
        try {
            layer_antichains({});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::empty_input);
        }
        CHECK(layer_antichains({}, EmptyInput::allow).size() == 0);
    }
}

TEST_CASE("longest_chain_length") {
    const std::vector<ExponentPoint> two{ExponentPoint::zero(4), kInner};
    CHECK(longest_chain_length(two) == 2);
    CHECK(oracle::longest_chain_by_subsets(two) == 2);
    CHECK(longest_chain_length(std::vector<ExponentPoint>{}) == 0);
}

TEST_CASE("check_layering_properties") {
    const auto zero = ExponentPoint::zero(4);
    const std::vector<ExponentPoint> pts{zero, kInner};
    CHECK(check_layering_properties(pts, layer_antichains(pts).layers).ok);

    const auto swapped = check_layering_properties(pts, {{zero}, {kInner}});
    CHECK(!swapped.ok);
    CHECK(swapped.property == "ii'");
    CHECK(swapped.witness.size() == 2);

    const auto merged = check_layering_properties(pts, {{zero, kInner}});
    CHECK(!merged.ok);
    CHECK(merged.property == "i'");

    try {
        check_layering_properties(pts, {{zero}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_partition);
    }
}

TEST_CASE("order is strict and transitive on a grid") {
    std::vector<ExponentPoint> pts;
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) pts.push_back(pt({q(a), q(b), q(-a - b)}));
    }
    for (const auto& x : pts) {
        CHECK(!succeeds(x, x));
        for (const auto& y : pts) {
            CHECK(!(succeeds(x, y) && succeeds(y, x)));
            for (const auto& z : pts) {
                if (succeeds(x, y) && succeeds(y, z)) CHECK(succeeds(x, z));
            }
        }
    }
}
