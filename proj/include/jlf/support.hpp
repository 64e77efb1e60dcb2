#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jlf/rational.hpp"

namespace jlf {

/// Which group a datum lives on: the inner form G'_n or the split group G_{nd}.
enum class Side { inner, split };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

/// An opaque cuspidal representation rho' (inner) / rho (split).
/// inner_size * degree == split_size * k always holds for a constructed label.
struct CuspidalLabel {
    std::string name;
    int inner_size = 0;
    int k = 0;
    int split_size = 0;

    bool operator==(const CuspidalLabel&) const = default;
};

/// Validates sizes against the division-algebra degree and derives split_size.
CuspidalLabel make_label(std::string name, int inner_size, int k, int degree);

/// The label set of one problem instance, sorted by name, names unique.
class LabelTable {
public:
    LabelTable() = default;
    LabelTable(int degree, std::vector<CuspidalLabel> labels);

    int degree() const noexcept { return degree_; }
    const std::vector<CuspidalLabel>& labels() const noexcept { return labels_; }

    bool contains(std::string_view name) const;
    const CuspidalLabel& at(std::string_view name) const;

    /// m' on the inner side, m on the split side.
    int size_on(Side side, std::string_view name) const;
    /// Exponent spacing inside a segment: k on the inner side, 1 on the split side.
    Rational step_on(Side side, std::string_view name) const;

    bool operator==(const LabelTable&) const = default;

private:
    int degree_ = 1;
    std::vector<CuspidalLabel> labels_;
};

struct Factor {
    std::string label;
    Rational exponent;

    bool operator==(const Factor&) const = default;
};

/// A cuspidal support rho_1 nu^{s_1} (x) ... (x) rho_l nu^{s_l} on one side.
struct Support {
    Side side = Side::inner;
    LabelTable labels;
    std::vector<Factor> factors;

    int degree() const noexcept { return labels.degree(); }
    int ambient_rank() const;
    /// Sum of size_j * s_j; zero for a valid support.
    Rational center_sum() const;

    bool operator==(const Support&) const = default;
};

/// Multiset of exact rationals, stored sorted in descending order.
class ExponentMultiset {
public:
    ExponentMultiset() = default;
    explicit ExponentMultiset(std::vector<Rational> entries);

    const std::vector<Rational>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    ExponentMultiset operator+(const ExponentMultiset& other) const;

    bool operator==(const ExponentMultiset&) const = default;

private:
    std::vector<Rational> entries_;
};

/// Parses a problem document (JSON) into an unnormalized Support.
/// Document: {"degree_d", "cuspidals": [{name, inner_size, k}], "support":
/// [{cuspidal, exponent}], optional "side": "inner"|"split"}.
Support parse_support(std::string_view text);

/// Checks the center condition and label arithmetic, then sorts factors by
/// (exponent descending, label name ascending). Idempotent.
Support normalize_support(const Support& support);

ExponentMultiset exponent_multiset(const Support& support, std::string_view label);

/// Canonical factor order used by normalize_support.
bool factor_less(const Factor& a, const Factor& b);

std::string format_support(const Support& support);

}  // namespace jlf
