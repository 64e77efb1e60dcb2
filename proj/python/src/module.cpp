#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jlf/filtration.hpp"
#include "jlf/report_json.hpp"
#include "jlf/transfer.hpp"
#include "jlf/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

jlf::Support load(const std::string& text) { return jlf::normalize_support(jlf::parse_support(text)); }

jlf::Support inner_of(const jlf::Support& s) {
    return s.side == jlf::Side::inner ? s : jlf::require_preimage(s);
}

jlf::Support on_side(const jlf::Support& s, jlf::Side side) {
    if (s.side == side) return s;
    return side == jlf::Side::split ? jlf::transfer_support(s).sigma : jlf::require_preimage(s);
}

jlf::ExponentPoint point(const std::vector<std::string>& coords) {
    std::vector<jlf::Rational> v;
    for (const auto& c : coords) v.push_back(jlf::parse_rational(c));
    return jlf::ExponentPoint(std::move(v));
}

std::string validate(const std::string& text) { return jlf::support_to_json(load(text)).dump(); }

std::string transfer(const std::string& text) {
    const auto inner = inner_of(load(text));
    json doc = jlf::transfer_to_json(jlf::transfer_support(inner));
    doc["inner"] = jlf::factors_to_json(inner);
    return doc.dump();
}

std::string triples(const std::string& text, const std::string& side) {
    const auto s = on_side(load(text), jlf::parse_side(side));
    json arr = json::array();
    for (const auto& o : jlf::enumerate_triples(s)) {
        arr.push_back({{"blocks", jlf::triple_to_json(o.canonical)},
                       {"block_sizes", o.canonical.block_sizes},
                       {"point", jlf::point_to_json(jlf::triple_point(o.canonical))},
                       {"in_image", o.in_image},
                       {"automorphisms", o.automorphisms}});
    }
    return json{{"side", side}, {"orbits", std::move(arr)}}.dump();
}

std::string filtration(const std::string& text, const std::string& side, bool refined) {
    const auto s = on_side(load(text), jlf::parse_side(side));
    jlf::FiltrationReport r;
    if (s.side == jlf::Side::inner) {
        r = jlf::build_inner_filtration(s);
    } else {
        const auto p = jlf::build_split_partition(s);
        r = refined ? jlf::refined_split_filtration(p) : jlf::naive_split_filtration(p);
    }
    return jlf::report_to_json(r, s.labels).dump();
}

std::string correspond(const std::string& text) {
    const auto inner = inner_of(load(text));
    return jlf::correspondence_to_json(jlf::correspondence_report(inner), inner).dump();
}

std::vector<std::tuple<std::string, std::size_t, std::size_t, bool>> verify(std::uint64_t seed, std::size_t max_size) {
    jlf::verify::VerifyConfig cfg;
    cfg.seed = seed;
    cfg.max_size = max_size;
    std::vector<std::tuple<std::string, std::size_t, std::size_t, bool>> out;
    {
        py::gil_scoped_release release;
        for (const auto& r : jlf::verify::run_all(cfg)) out.emplace_back(r.name, r.passed, r.cases, r.ok());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Filtration transfer between inner forms and GL(nd)";

    // args = (message, kind, witness)
    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
    error.call_once_and_store_result([&] { return py::exception<jlf::Error>(m, "JlfError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const jlf::Error& e) {
            const auto args = py::make_tuple(e.what(), std::string(jlf::to_string(e.kind())), e.witness());
            PyErr_SetObject(error.get_stored().ptr(), args.ptr());
        }
    });

    m.def("validate", &validate, py::arg("problem"));
    m.def("transfer", &transfer, py::arg("problem"));
    m.def("triples", &triples, py::arg("problem"), py::arg("side"));
    m.def("filtration", &filtration, py::arg("problem"), py::arg("side"), py::arg("refined") = false);
    m.def("correspond", &correspond, py::arg("problem"));
    m.def(
        "compare_points",
        [](const std::vector<std::string>& s, const std::vector<std::string>& t) {
            return std::string(jlf::to_string(jlf::compare_points(point(s), point(t))));
        },
        py::arg("s"), py::arg("t"));
    m.def("verify", &verify, py::arg("seed") = 0, py::arg("max_size") = 8);
}
