#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "jlf/support.hpp"

namespace fixtures {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(JLF_TEST_DATA_DIR) + "/" + name; }

inline jlf::Support quaternion() {
    return jlf::normalize_support(jlf::parse_support(read_file(data_path("quaternion.json"))));
}

/// One factor rho'@0 with inner size m', transfer integer k and degree d.
inline jlf::Support single_factor(int inner_size, int k, int d) {
    jlf::Support s;
    s.side = jlf::Side::inner;
    s.labels = jlf::LabelTable(d, {jlf::make_label("rho", inner_size, k, d)});
    s.factors = {{"rho", jlf::Rational(0)}};
    return jlf::normalize_support(s);
}

inline jlf::Rational q(std::int64_t n, std::int64_t d = 1) { return jlf::Rational(n, d); }

}  // namespace fixtures
