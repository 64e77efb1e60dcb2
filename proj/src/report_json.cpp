#include "jlf/report_json.hpp"

namespace jlf {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw Error(ErrorKind::malformed_input, std::string("report is missing '") + key + "'");
    }
    return doc.at(key);
}

std::vector<int> ints(const json& doc, const char* key) {
    if (!doc.contains(key)) return {};
    return doc.at(key).get<std::vector<int>>();
}

}  // namespace

json labels_to_json(const LabelTable& labels) {
    json arr = json::array();
    for (const auto& l : labels.labels()) {
        arr.push_back({{"name", l.name}, {"inner_size", l.inner_size}, {"k", l.k}, {"split_size", l.split_size}});
    }
    return arr;
}

LabelTable labels_from_json(const json& doc) {
    const int degree = field(doc, "degree_d").get<int>();
    std::vector<CuspidalLabel> labels;
    for (const auto& l : field(doc, "cuspidals")) {
        labels.push_back(make_label(l.at("name").get<std::string>(), l.at("inner_size").get<int>(),
                                    l.at("k").get<int>(), degree));
    }
    return LabelTable(degree, std::move(labels));
}

json factors_to_json(const Support& support) {
    json arr = json::array();
    for (const auto& f : support.factors) {
        arr.push_back({{"cuspidal", f.label}, {"exponent", format_rational(f.exponent)}});
    }
    return arr;
}

json support_to_json(const Support& support) {
    return {{"side", std::string(to_string(support.side))},
            {"degree_d", support.degree()},
            {"cuspidals", labels_to_json(support.labels)},
            {"support", factors_to_json(support)}};
}

Support support_from_json(const json& doc) {
    // split_size is informative only; parse_support ignores unknown keys.
    return parse_support(doc.dump());
}

json point_to_json(const ExponentPoint& point) {
    json arr = json::array();
    for (const auto& c : point.coords()) arr.push_back(format_rational(c));
    return arr;
}

ExponentPoint point_from_json(const json& doc) {
    std::vector<Rational> coords;
    for (const auto& c : doc) coords.push_back(parse_rational(c.get<std::string>()));
    return ExponentPoint(std::move(coords));
}

json triple_to_json(const Triple& triple) {
    json arr = json::array();
    for (const auto& b : triple.blocks) {
        arr.push_back({{"label", b.label}, {"length", b.length}, {"center", format_rational(b.center)}});
    }
    return arr;
}

Triple triple_from_json(const json& blocks, Side side, const LabelTable& labels) {
    std::vector<Segment> segs;
    for (const auto& b : blocks) {
        segs.push_back(Segment{b.at("label").get<std::string>(), b.at("length").get<int>(),
                               parse_rational(b.at("center").get<std::string>()), Rational(1)});
    }
    return make_triple(side, std::move(segs), labels);
}

json orbits_to_json(const std::vector<TripleOrbit>& orbits) {
    json arr = json::array();
    for (const auto& o : orbits) arr.push_back(triple_to_json(o.canonical));
    return arr;
}

namespace {

json layer_to_json(const FiltrationLayer& layer) {
    json points = json::array();
    for (const auto& p : layer.points) points.push_back(point_to_json(p));
    json sizes = json::array(), autos = json::array(), image = json::array();
    for (const auto& o : layer.orbits) {
        sizes.push_back(o.canonical.block_sizes);
        autos.push_back(o.automorphisms);
        image.push_back(o.in_image);
    }
    return {{"index", layer.index},
            {"kind", std::string(to_string(layer.kind))},
            {"points", std::move(points)},
            {"orbits", orbits_to_json(layer.orbits)},
            {"block_sizes", std::move(sizes)},
            {"automorphisms", std::move(autos)},
            {"in_image", std::move(image)}};
}

FiltrationLayer layer_from_json(const json& doc, Side side, const LabelTable& labels) {
    FiltrationLayer layer;
    layer.index = field(doc, "index").get<int>();
    layer.kind = parse_layer_kind(field(doc, "kind").get<std::string>());
    for (const auto& p : field(doc, "points")) layer.points.push_back(point_from_json(p));
    const auto& orbits = field(doc, "orbits");
    const auto& autos = field(doc, "automorphisms");
    const auto& image = field(doc, "in_image");
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        TripleOrbit o;
        o.canonical = triple_from_json(orbits[i], side, labels);
        o.automorphisms = autos.at(i).get<std::uint64_t>();
        o.in_image = image.at(i).get<bool>();
        layer.orbits.push_back(std::move(o));
    }
    return layer;
}

}  // namespace

json transfer_to_json(const TransferredSupport& transfer) {
    return {{"sigma", factors_to_json(transfer.representative)},
            {"sigma_normalized", factors_to_json(transfer.sigma)},
            {"q_partition", transfer.q_partition},
            {"ambient_rank", transfer.sigma.ambient_rank()}};
}

json report_to_json(const FiltrationReport& report, const LabelTable& labels) {
    json layers = json::array();
    for (const auto& l : report.layers) layers.push_back(layer_to_json(l));
    json doc = {{"side", std::string(to_string(report.side))},
                {"refined", report.refined},
                {"degree_d", labels.degree()},
                {"cuspidals", labels_to_json(labels)},
                {"ell_prime", report.ell_prime},
                {"layers", std::move(layers)}};
    if (report.side == Side::split) {
        doc["ell_list"] = report.ell_list;
        doc["epsilons"] = report.epsilons;
        doc["L_indices"] = report.L_indices;
        doc["Lhat_indices"] = report.Lhat_indices;
        doc["L"] = report.total_length - 1;
        doc["Lhat"] = report.refined_length - 1;
    }
    return doc;
}

FiltrationReport report_from_json(const json& doc) {
    const LabelTable labels = labels_from_json(doc);
    FiltrationReport report;
    report.side = parse_side(field(doc, "side").get<std::string>());
    report.refined = field(doc, "refined").get<bool>();
    report.ell_prime = field(doc, "ell_prime").get<int>();
    for (const auto& l : field(doc, "layers")) report.layers.push_back(layer_from_json(l, report.side, labels));
    report.ell_list = ints(doc, "ell_list");
    report.epsilons = ints(doc, "epsilons");
    report.L_indices = ints(doc, "L_indices");
    report.Lhat_indices = ints(doc, "Lhat_indices");
    if (report.side == Side::split) {
        report.total_length = field(doc, "L").get<int>() + 1;
        report.refined_length = field(doc, "Lhat").get<int>() + 1;
    } else {
        report.total_length = report.ell_prime + 1;
        report.refined_length = report.total_length;
    }
    return report;
}

json correspondence_to_json(const CorrespondenceReport& report, const Support& inner) {
    json doc = report_to_json(report.split, inner.labels);
    doc["problem"] = support_to_json(inner);
    const json transfer = transfer_to_json(report.transfer);
    for (const auto& [key, value] : transfer.items()) doc[key] = value;
    doc["inner"] = report_to_json(report.inner, inner.labels);
    json qmap = json::array();
    for (const auto& [i, k] : report.quotient_map) qmap.push_back({i, k});
    doc["quotient_map"] = std::move(qmap);
    doc["unmatched"] = report.unmatched_split_indices;
    json bij = json::array();
    for (const auto& pairs : report.orbit_bijections) {
        json arr = json::array();
        for (const auto& [a, b] : pairs) arr.push_back({{"inner", triple_to_json(a)}, {"split", triple_to_json(b)}});
        bij.push_back(std::move(arr));
    }
    doc["orbit_bijections"] = std::move(bij);
    return doc;
}

CorrespondenceReport correspondence_from_json(const json& doc) {
    CorrespondenceReport report;
    const Support inner = normalize_support(support_from_json(field(doc, "problem")));
    report.transfer = transfer_support(inner);
    report.inner = report_from_json(field(doc, "inner"));
    report.split = report_from_json(doc);
    for (const auto& pair : field(doc, "quotient_map")) {
        report.quotient_map.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    }
    report.unmatched_split_indices = field(doc, "unmatched").get<std::vector<int>>();
    for (const auto& pairs : field(doc, "orbit_bijections")) {
        std::vector<std::pair<Triple, Triple>> row;
        for (const auto& p : pairs) {
            row.emplace_back(triple_from_json(p.at("inner"), Side::inner, inner.labels),
                             triple_from_json(p.at("split"), Side::split, inner.labels));
        }
        report.orbit_bijections.push_back(std::move(row));
    }
    return report;
}

json error_to_json(const Error& error) {
    return {{"error",
             {{"kind", std::string(to_string(error.kind()))}, {"message", error.what()}, {"witness", error.witness()}}}};
}

}  // namespace jlf
