#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jlf/support.hpp"

namespace jlf::verify {

struct VerifyConfig {
    std::uint64_t seed = 0;
    std::size_t max_size = 8;
    std::size_t cases = 500;
};

struct SuiteResult {
    std::string name;
    std::string description;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::optional<std::string> counterexample;
    double seconds = 0.0;

    bool ok() const { return passed == cases && !counterexample; }
};

/// Names of all suites, in report order.
std::vector<std::string> suite_names();

/// Runs one suite. Throws Error{malformed_input} for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

/// Runs every suite on worker threads; results come back in suite_names() order.
std::vector<SuiteResult> run_all(const VerifyConfig& config);

/// Random normalized inner support: degree 1..4, up to 3 labels with k | d,
/// inner sizes 1..2, at most `max_split_factors` factors after transfer and
/// at most `max_inner_factors` before.
Support random_inner_support(std::mt19937_64& rng, std::size_t max_split_factors, std::size_t max_inner_factors = 6);

/// Deterministic family: two labels of split size d in {2,3,4} with distinct
/// k and small symmetric exponent shapes, at most `max_split` split factors.
std::vector<Support> small_symmetric_family(std::size_t max_split);

}  // namespace jlf::verify
