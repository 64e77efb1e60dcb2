#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jlf {

enum class ErrorKind {
    malformed_input,
    malformed_rational,
    unknown_label,
    duplicate_label,
    non_positive_size,
    k_does_not_divide_d,
    split_size_not_integral,
    center_condition_violated,
    length_mismatch,
    not_in_image,
    bound_exceeded,
    invalid_partition,
    empty_input,
    internal_inconsistency,
};

std::string_view to_string(ErrorKind kind);

// Domain error. The message always starts with the violated invariant
// (to_string(kind) with underscores replaced by spaces); witness names the
// offending value.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string_view detail, std::string witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

}  // namespace jlf
