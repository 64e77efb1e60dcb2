#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "jlf/error.hpp"
#include "jlf/support.hpp"
#include "jlf/verify.hpp"

using namespace jlf;
using fixtures::q;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::internal_inconsistency;
}

std::string problem(const std::string& cuspidals, const std::string& support) {
    return R"({"degree_d": 2, "cuspidals": [)" + cuspidals + R"(], "support": [)" + support + "]}";
}

const std::string kRhoTau = R"({"name": "rho", "inner_size": 2, "k": 2}, {"name": "tau", "inner_size": 1, "k": 1})";

}  // namespace

TEST_CASE("rationals parse exactly and print canonically") {
    CHECK(parse_rational("1/2") == q(1, 2));
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK(parse_rational("+4") == q(4));
    CHECK(format_rational(q(4, 2)) == "2");
    CHECK(format_rational(q(-1, 2)) == "-1/2");
    CHECK(format_rationals({q(1, 2), q(0), q(-1, 2)}) == "(1/2,0,-1/2)");
    for (const char* bad : {"", "1.5", "1/", "/2", "a", "1/0", "1//2", "0x10"}) {
        CAPTURE(bad);
        CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::malformed_rational);
    }
}

TEST_CASE("zero denominator names the invariant") {
    try {
        parse_support(problem(kRhoTau, R"({"cuspidal": "tau", "exponent": "1/0"})"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::malformed_rational);
        CHECK(std::string(e.what()).rfind("malformed rational", 0) == 0);
    }
}

TEST_CASE("quaternion problem file") {
    const Support s = fixtures::quaternion();
    CHECK(s.side == Side::inner);
    CHECK(s.degree() == 2);
    CHECK(s.factors.size() == 3);
    CHECK(s.ambient_rank() == 4);
    CHECK(s.labels.at("rho").split_size == 2);
    CHECK(s.labels.at("tau").split_size == 2);
    CHECK(exponent_multiset(s, "tau") == ExponentMultiset({q(1, 2), q(-1, 2)}));
    CHECK(exponent_multiset(s, "rho") == ExponentMultiset({q(0)}));
    CHECK(exponent_multiset(s, "absent").empty());
    CHECK(format_support(s) == "tau'@1/2 (x) rho'@0 (x) tau'@-1/2");
}

TEST_CASE("single factor support") {
    const Support s = fixtures::single_factor(2, 2, 2);
    CHECK(s.factors.size() == 1);
    CHECK(s.ambient_rank() == 2);
}

TEST_CASE("normalization sorts by exponent then label") {
    Support s = fixtures::quaternion();
    s.factors = {{"tau", q(-1, 2)}, {"tau", q(1, 2)}, {"rho", q(0)}};
    const Support n = normalize_support(s);
    REQUIRE(n.factors.size() == 3);
    CHECK(n.factors[0] == Factor{"tau", q(1, 2)});
    CHECK(n.factors[1] == Factor{"rho", q(0)});
    CHECK(n.factors[2] == Factor{"tau", q(-1, 2)});
    CHECK(normalize_support(n) == n);
    CHECK(n == fixtures::quaternion());
}

TEST_CASE("ties break by label name") {
    Support s;
    s.labels = LabelTable(1, {make_label("b", 1, 1, 1), make_label("a", 1, 1, 1)});
    s.factors = {{"b", q(0)}, {"a", q(0)}};
    const Support n = normalize_support(s);
    CHECK(n.factors[0].label == "a");
    CHECK(n.factors[1].label == "b");
}

TEST_CASE("normalization is permutation invariant") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Support s = verify::random_inner_support(rng, 8);
        Support p = s;
        std::shuffle(p.factors.begin(), p.factors.end(), rng);
        CHECK(normalize_support(p) == s);
        std::size_t total = 0;
        for (const auto& l : s.labels.labels()) total += exponent_multiset(s, l.name).size();
        CHECK(total == s.factors.size());
    }
}

TEST_CASE("validation errors") {
    SUBCASE("center condition") {
        Support s;
        s.labels = LabelTable(2, {make_label("tau", 1, 1, 2)});
        s.factors = {{"tau", q(1, 2)}, {"tau", q(1, 2)}};
        try {
            normalize_support(s);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::center_condition_violated);
            CHECK(std::string(e.what()).find("center condition violated") != std::string::npos);
        }
    }
    SUBCASE("k must divide d") {
        CHECK(kind_of([] { make_label("rho", 1, 3, 2); }) == ErrorKind::k_does_not_divide_d);
    }
    SUBCASE("split size is derived") {
        CHECK(make_label("rho", 1, 2, 4).split_size == 2);
        CHECK(make_label("rho", 3, 3, 3).split_size == 3);
        CHECK(kind_of([] { make_label("rho", 1, 4, 2); }) == ErrorKind::k_does_not_divide_d);
    }
    SUBCASE("non-positive sizes") {
        CHECK(kind_of([] { make_label("rho", 0, 1, 2); }) == ErrorKind::non_positive_size);
        CHECK(kind_of([] { make_label("rho", 1, 0, 2); }) == ErrorKind::non_positive_size);
        CHECK(kind_of([] { make_label("rho", 1, 1, 0); }) == ErrorKind::non_positive_size);
    }
    SUBCASE("unknown and duplicate labels") {
        CHECK(kind_of([] { parse_support(problem(kRhoTau, R"({"cuspidal": "pi", "exponent": "0"})")); }) ==
              ErrorKind::unknown_label);
        CHECK(kind_of([] {
                  parse_support(problem(kRhoTau + R"(, {"name": "rho", "inner_size": 1, "k": 1})",
                                        R"({"cuspidal": "rho", "exponent": "0"})"));
              }) == ErrorKind::duplicate_label);
    }
    SUBCASE("floating point exponents are rejected") {
        CHECK(kind_of([] { parse_support(problem(kRhoTau, R"({"cuspidal": "rho", "exponent": 0.5})")); }) ==
              ErrorKind::malformed_rational);
    }
    SUBCASE("integer exponents are accepted") {
        const auto s = parse_support(problem(kRhoTau, R"({"cuspidal": "rho", "exponent": 0})"));
        CHECK(s.factors.front().exponent == q(0));
    }
    SUBCASE("malformed documents") {
        CHECK(kind_of([] { parse_support("{"); }) == ErrorKind::malformed_input);
        CHECK(kind_of([] { parse_support("[]"); }) == ErrorKind::malformed_input);
        CHECK(kind_of([] { parse_support(problem(kRhoTau, "")); }) == ErrorKind::empty_input);
    }
}

TEST_CASE("split-side problem files") {
    const auto s = parse_support(R"({"side": "split", "degree_d": 2,
        "cuspidals": [{"name": "rho", "inner_size": 2, "k": 2}],
        "support": [{"cuspidal": "rho", "exponent": "1/2"}, {"cuspidal": "rho", "exponent": "-1/2"}]})");
    CHECK(s.side == Side::split);
    CHECK(s.ambient_rank() == 4);
    CHECK(normalize_support(s) == s);
}

TEST_CASE("label arithmetic holds for every label") {
    for (int d = 1; d <= 6; ++d) {
        for (int k = 1; k <= d; ++k) {
            if (d % k) continue;
            for (int m = 1; m <= 4; ++m) {
                if (m * d % k) continue;
                const auto l = make_label("x", m, k, d);
                CHECK(l.inner_size * d == l.split_size * l.k);
            }
        }
    }
}
