#include "jlf/rational.hpp"

#include <charconv>
#include <system_error>

#include "jlf/error.hpp"

namespace jlf {

namespace {

bool parse_digits(std::string_view digits, std::int64_t& out) {
    if (digits.empty()) return false;
    for (char c : digits) {
        if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    return ec == std::errc{} && ptr == digits.data() + digits.size();
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_digits(text, num)) {
            throw Error(ErrorKind::malformed_rational, "'" + original + "'", original);
        }
    } else {
        if (!parse_digits(text.substr(0, slash), num) || !parse_digits(text.substr(slash + 1), den)) {
            throw Error(ErrorKind::malformed_rational, "'" + original + "'", original);
        }
        if (den == 0) {
            throw Error(ErrorKind::malformed_rational, "zero denominator in '" + original + "'", original);
        }
    }
    return Rational(negative ? -num : num, den);
}

std::string format_rational(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string format_rationals(const std::vector<Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_rational(values[i]);
    }
    out += ")";
    return out;
}

}  // namespace jlf
