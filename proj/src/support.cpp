#include "jlf/support.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "jlf/error.hpp"

namespace jlf {

using nlohmann::json;

std::string_view to_string(Side side) { return side == Side::inner ? "inner" : "split"; }

Side parse_side(std::string_view text) {
    if (text == "inner") return Side::inner;
    if (text == "split") return Side::split;
    throw Error(ErrorKind::malformed_input, "side must be 'inner' or 'split', got '" + std::string(text) + "'");
}

CuspidalLabel make_label(std::string name, int inner_size, int k, int degree) {
    if (degree <= 0) {
        throw Error(ErrorKind::non_positive_size, "degree_d = " + std::to_string(degree), std::to_string(degree));
    }
    if (inner_size <= 0) {
        throw Error(ErrorKind::non_positive_size, "inner_size of '" + name + "' = " + std::to_string(inner_size), name);
    }
    if (k <= 0) {
        throw Error(ErrorKind::non_positive_size, "k of '" + name + "' = " + std::to_string(k), name);
    }
    if (degree % k != 0) {
        throw Error(ErrorKind::k_does_not_divide_d,
                    "k = " + std::to_string(k) + " of '" + name + "' does not divide d = " + std::to_string(degree),
                    name);
    }
    if ((inner_size * degree) % k != 0) {
        throw Error(ErrorKind::split_size_not_integral,
                    "inner_size * d / k is not an integer for '" + name + "'", name);
    }
    return CuspidalLabel{std::move(name), inner_size, k, inner_size * degree / k};
}

LabelTable::LabelTable(int degree, std::vector<CuspidalLabel> labels) : degree_(degree), labels_(std::move(labels)) {
    if (degree_ <= 0) {
        throw Error(ErrorKind::non_positive_size, "degree_d = " + std::to_string(degree_), std::to_string(degree_));
    }
    std::sort(labels_.begin(), labels_.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i > 0 && labels_[i].name == labels_[i - 1].name) {
            throw Error(ErrorKind::duplicate_label, "'" + labels_[i].name + "'", labels_[i].name);
        }
        const auto& l = labels_[i];
        // Re-derive so a hand-built label cannot smuggle in inconsistent sizes.
        if (make_label(l.name, l.inner_size, l.k, degree_) != l) {
            throw Error(ErrorKind::split_size_not_integral,
                        "inner_size * d != split_size * k for '" + l.name + "'", l.name);
        }
    }
}

bool LabelTable::contains(std::string_view name) const {
    return std::any_of(labels_.begin(), labels_.end(), [&](const auto& l) { return l.name == name; });
}

const CuspidalLabel& LabelTable::at(std::string_view name) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), name,
                               [](const CuspidalLabel& l, std::string_view n) { return l.name < n; });
    if (it == labels_.end() || it->name != name) {
        throw Error(ErrorKind::unknown_label, "'" + std::string(name) + "'", std::string(name));
    }
    return *it;
}

int LabelTable::size_on(Side side, std::string_view name) const {
    const auto& l = at(name);
    return side == Side::inner ? l.inner_size : l.split_size;
}

Rational LabelTable::step_on(Side side, std::string_view name) const {
    return side == Side::inner ? Rational(at(name).k) : Rational(1);
}

int Support::ambient_rank() const {
    int rank = 0;
    for (const auto& f : factors) rank += labels.size_on(side, f.label);
    return rank;
}

Rational Support::center_sum() const {
    Rational sum(0);
    for (const auto& f : factors) sum += Rational(labels.size_on(side, f.label)) * f.exponent;
    return sum;
}

ExponentMultiset::ExponentMultiset(std::vector<Rational> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<>{});
}

ExponentMultiset ExponentMultiset::operator+(const ExponentMultiset& other) const {
    std::vector<Rational> merged = entries_;
    merged.insert(merged.end(), other.entries_.begin(), other.entries_.end());
    return ExponentMultiset(std::move(merged));
}

namespace {

int read_int(const json& obj, const char* key, const std::string& context) {
    if (!obj.contains(key)) {
        throw Error(ErrorKind::malformed_input, context + ": missing '" + key + "'");
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw Error(ErrorKind::malformed_input, context + ": '" + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string read_string(const json& obj, const char* key, const std::string& context) {
    if (!obj.contains(key) || !obj.at(key).is_string()) {
        throw Error(ErrorKind::malformed_input, context + ": '" + key + "' must be a string");
    }
    return obj.at(key).get<std::string>();
}

Rational read_exponent(const json& obj, const std::string& context) {
    if (!obj.contains("exponent")) {
        throw Error(ErrorKind::malformed_input, context + ": missing 'exponent'");
    }
    const auto& v = obj.at("exponent");
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    // Floats are refused outright: a decimal literal is already lossy.
    throw Error(ErrorKind::malformed_rational, context + ": exponent must be a string \"p/q\" or an integer",
                v.dump());
}

}  // namespace

Support parse_support(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::malformed_input, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::malformed_input, "document must be a JSON object");

    const int degree = read_int(doc, "degree_d", "problem");
    if (degree <= 0) {
        throw Error(ErrorKind::non_positive_size, "degree_d = " + std::to_string(degree), std::to_string(degree));
    }
    if (!doc.contains("cuspidals") || !doc.at("cuspidals").is_array()) {
        throw Error(ErrorKind::malformed_input, "problem: 'cuspidals' must be an array");
    }
    std::vector<CuspidalLabel> labels;
    std::set<std::string> seen;
    for (const auto& entry : doc.at("cuspidals")) {
        const std::string name = read_string(entry, "name", "cuspidal");
        if (!seen.insert(name).second) throw Error(ErrorKind::duplicate_label, "'" + name + "'", name);
        labels.push_back(make_label(name, read_int(entry, "inner_size", "cuspidal '" + name + "'"),
                                    read_int(entry, "k", "cuspidal '" + name + "'"), degree));
    }

    Support support;
    support.side = doc.contains("side") ? parse_side(read_string(doc, "side", "problem")) : Side::inner;
    support.labels = LabelTable(degree, std::move(labels));

    if (!doc.contains("support") || !doc.at("support").is_array()) {
        throw Error(ErrorKind::malformed_input, "problem: 'support' must be an array");
    }
    for (const auto& entry : doc.at("support")) {
        const std::string name = read_string(entry, "cuspidal", "support factor");
        if (!support.labels.contains(name)) {
            throw Error(ErrorKind::unknown_label, "support references '" + name + "'", name);
        }
        support.factors.push_back(Factor{name, read_exponent(entry, "factor '" + name + "'")});
    }
    if (support.factors.empty()) throw Error(ErrorKind::empty_input, "support has no factors");
    return support;
}

bool factor_less(const Factor& a, const Factor& b) {
    if (a.exponent != b.exponent) return a.exponent > b.exponent;
    return a.label < b.label;
}

Support normalize_support(const Support& support) {
    // Rebuilding the table re-runs the k | d and integrality checks.
    LabelTable checked(support.degree(), support.labels.labels());
    for (const auto& f : support.factors) checked.at(f.label);
    const Rational sum = support.center_sum();
    if (sum != Rational(0)) {
        throw Error(ErrorKind::center_condition_violated, "sum of size * exponent = " + format_rational(sum),
                    format_rational(sum));
    }
    Support out = support;
    out.labels = std::move(checked);
    std::stable_sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

ExponentMultiset exponent_multiset(const Support& support, std::string_view label) {
    std::vector<Rational> entries;
    for (const auto& f : support.factors) {
        if (f.label == label) entries.push_back(f.exponent);
    }
    return ExponentMultiset(std::move(entries));
}

std::string format_support(const Support& support) {
    std::string out;
    for (std::size_t i = 0; i < support.factors.size(); ++i) {
        if (i) out += " (x) ";
        out += support.factors[i].label;
        if (support.side == Side::inner) out += "'";
        out += "@" + format_rational(support.factors[i].exponent);
    }
    return out;
}

}  // namespace jlf
