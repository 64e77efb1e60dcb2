#include "jlf/error.hpp"

#include <algorithm>

namespace jlf {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_input: return "malformed_input";
        case ErrorKind::malformed_rational: return "malformed_rational";
        case ErrorKind::unknown_label: return "unknown_label";
        case ErrorKind::duplicate_label: return "duplicate_label";
        case ErrorKind::non_positive_size: return "non_positive_size";
        case ErrorKind::k_does_not_divide_d: return "k_does_not_divide_d";
        case ErrorKind::split_size_not_integral: return "split_size_not_integral";
        case ErrorKind::center_condition_violated: return "center_condition_violated";
        case ErrorKind::length_mismatch: return "length_mismatch";
        case ErrorKind::not_in_image: return "not_in_image";
        case ErrorKind::bound_exceeded: return "bound_exceeded";
        case ErrorKind::invalid_partition: return "invalid_partition";
        case ErrorKind::empty_input: return "empty_input";
        case ErrorKind::internal_inconsistency: return "internal_inconsistency";
    }
    return "unknown";
}

namespace {

std::string compose(ErrorKind kind, std::string_view detail) {
    std::string head(to_string(kind));
    std::replace(head.begin(), head.end(), '_', ' ');
    if (detail.empty()) return head;
    return head + ": " + std::string(detail);
}

}  // namespace

Error::Error(ErrorKind kind, std::string_view detail, std::string witness)
    : std::runtime_error(compose(kind, detail)), kind_(kind), witness_(std::move(witness)) {}

}  // namespace jlf
