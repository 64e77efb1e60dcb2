#pragma once

#include <iosfwd>

namespace jlf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. Reports go to `out`; in text mode errors go to
/// `err`, in json mode the error record goes to `out`. `in` is read when no
/// --input file is given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace jlf::cli
