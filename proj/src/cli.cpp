#include "jlf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "jlf/error.hpp"
#include "jlf/filtration.hpp"
#include "jlf/report_json.hpp"
#include "jlf/transfer.hpp"
#include "jlf/triples.hpp"
#include "jlf/verify.hpp"

namespace jlf::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Options {
    Format format = Format::text;
    std::string input;
    std::string side = "inner";
    bool refined = false;
    verify::VerifyConfig verify;
};

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

std::string read_all(std::istream& is) {
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

Support load_problem(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        text = read_all(in);
    } else {
        std::ifstream file(opt.input);
        if (!file) throw CLI::ValidationError("--input", "cannot open '" + opt.input + "'");
        text = read_all(file);
    }
    return normalize_support(parse_support(text));
}

// The support on the requested side, transferring or inverting as needed.
Support on_side(const Support& problem, Side side) {
    if (problem.side == side) return problem;
    return side == Side::split ? transfer_support(problem).sigma : require_preimage(problem);
}

Support inner_of(const Support& problem) {
    return problem.side == Side::inner ? problem : require_preimage(problem);
}

void print_layers(std::ostream& out, const FiltrationReport& r) {
    const Side side = r.side;
    for (const auto& layer : r.layers) {
        out << "layer " << layer.index << " [" << to_string(layer.kind) << "]\n";
        for (const auto& p : layer.points) out << "  point " << format_point(p) << "\n";
        for (const auto& o : layer.orbits) {
            out << "  orbit " << format_triple(o.canonical);
            if (side == Side::split) out << (o.in_image ? "  image" : "  non-image");
            out << "\n";
        }
    }
}

void print_indices(std::ostream& out, const FiltrationReport& r) {
    out << "l' = " << r.ell_prime << "\n";
    if (r.side != Side::split) return;
    out << "l_i = " << join(r.ell_list) << "\n"
        << "L_i = " << join(r.L_indices) << "   L+1 = " << r.total_length << "\n"
        << "eps_i = " << join(r.epsilons) << "\n"
        << "Lhat_i = " << join(r.Lhat_indices) << "   Lhat+1 = " << r.refined_length << "\n";
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
    const Support s = load_problem(opt, in);
    if (opt.format == Format::json) {
        json doc = support_to_json(s);
        doc["valid"] = true;
        doc["ambient_rank"] = s.ambient_rank();
        out << doc.dump(2) << "\n";
    } else {
        out << "valid " << to_string(s.side) << " support, degree " << s.degree() << ", ambient rank "
            << s.ambient_rank() << "\n"
            << format_support(s) << "\n";
    }
    return kExitOk;
}

int cmd_transfer(const Options& opt, std::istream& in, std::ostream& out) {
    const Support problem = load_problem(opt, in);
    const Support inner = inner_of(problem);
    const auto t = transfer_support(inner);
    if (opt.format == Format::json) {
        json doc = transfer_to_json(t);
        doc["inner"] = factors_to_json(inner);
        out << doc.dump(2) << "\n";
    } else {
        out << "pi'   = " << format_support(inner) << "\n"
            << "sigma = " << format_support(t.representative) << "\n"
            << "Q     = " << join(t.q_partition) << "\n"
            << "normalized sigma = " << format_support(t.sigma) << "\n";
    }
    return kExitOk;
}

int cmd_triples(const Options& opt, std::istream& in, std::ostream& out) {
    const Support s = on_side(load_problem(opt, in), parse_side(opt.side));
    const auto orbits = enumerate_triples(s);
    if (opt.format == Format::json) {
        json arr = json::array();
        for (const auto& o : orbits) {
            arr.push_back({{"blocks", triple_to_json(o.canonical)},
                           {"block_sizes", o.canonical.block_sizes},
                           {"point", point_to_json(triple_point(o.canonical))},
                           {"in_image", o.in_image},
                           {"automorphisms", o.automorphisms}});
        }
        out << json{{"side", std::string(to_string(s.side))}, {"orbits", std::move(arr)}}.dump(2) << "\n";
    } else {
        out << orbits.size() << " orbits on the " << to_string(s.side) << " side\n";
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const auto& o = orbits[i];
            out << std::setw(3) << i << "  " << format_triple(o.canonical) << "  " << format_point(triple_point(o.canonical));
            if (s.side == Side::split) out << (o.in_image ? "  image" : "  non-image");
            if (o.automorphisms > 1) out << "  |Aut| = " << o.automorphisms;
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_filtration(const Options& opt, std::istream& in, std::ostream& out) {
    const Support s = on_side(load_problem(opt, in), parse_side(opt.side));
    FiltrationReport report;
    if (s.side == Side::inner) {
        report = build_inner_filtration(s);
    } else {
        const auto partition = build_split_partition(s);
        report = opt.refined ? refined_split_filtration(partition) : naive_split_filtration(partition);
    }
    if (opt.format == Format::json) {
        out << report_to_json(report, s.labels).dump(2) << "\n";
    } else {
        out << (s.side == Side::inner ? "inner" : opt.refined ? "refined split" : "split") << " filtration of "
            << format_support(s) << "\n";
        print_indices(out, report);
        print_layers(out, report);
    }
    return kExitOk;
}

int cmd_correspond(const Options& opt, std::istream& in, std::ostream& out) {
    const Support inner = inner_of(load_problem(opt, in));
    const auto report = correspondence_report(inner);
    if (opt.format == Format::json) {
        out << correspondence_to_json(report, inner).dump(2) << "\n";
        return kExitOk;
    }
    out << "pi'   = " << format_support(inner) << "\n"
        << "sigma = " << format_support(report.transfer.representative) << "\n"
        << "Q     = " << join(report.transfer.q_partition) << "\n\n"
        << "inner filtration\n";
    print_indices(out, report.inner);
    print_layers(out, report.inner);
    out << "\nrefined split filtration\n";
    print_indices(out, report.split);
    print_layers(out, report.split);
    out << "\nquotient map\n";
    for (std::size_t i = 0; i < report.quotient_map.size(); ++i) {
        const auto [from, to] = report.quotient_map[i];
        out << "  " << from << " -> " << to << "\n";
        for (const auto& [a, b] : report.orbit_bijections[i]) {
            out << "    " << format_triple(a) << "  |->  " << format_triple(b) << "\n";
        }
    }
    out << "unmatched split layers " << join(report.unmatched_split_indices) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const auto results = verify::run_all(opt.verify);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.ok();
        if (opt.format == Format::json) {
            json entry = {{"suite", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"ok", r.ok()}};
            entry["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
            arr.push_back(std::move(entry));
            continue;
        }
        out << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.name << std::right << std::setw(7)
            << r.passed << "/" << r.cases << "  " << r.description << "\n";
        if (r.counterexample) out << "     counterexample: " << *r.counterexample << "\n";
    }
    if (opt.format == Format::json) {
        out << json{{"seed", opt.verify.seed}, {"max_size", opt.verify.max_size}, {"ok", all}, {"suites", arr}}.dump(2)
            << "\n";
    }
    return all ? kExitOk : kExitDomainError;
}

void report_error(const Options& opt, const Error& e, std::ostream& out, std::ostream& err) {
    if (opt.format == Format::json) {
        out << error_to_json(e).dump(2) << "\n";
        return;
    }
    err << "error: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Franke filtrations and their transfer between inner forms and GL(nd)", "jlf"};
    app.fallthrough();
    app.require_subcommand(1);
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    const auto sides = CLI::IsMember({"inner", "split"});
    app.add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--input", opt.input, "Problem file (default: stdin)");

    auto* validate = app.add_subcommand("validate", "Parse and validate a problem file");
    auto* transfer = app.add_subcommand("transfer", "Transfer the cuspidal support to the split group");
    auto* triples = app.add_subcommand("triples", "Enumerate triple orbits");
    triples->add_option("--side", opt.side)->required()->check(sides);
    auto* filtration = app.add_subcommand("filtration", "Build the filtration on one side");
    filtration->add_option("--side", opt.side)->required()->check(sides);
    filtration->add_flag("--refined", opt.refined, "Split the shared layers (split side)");
    auto* correspond = app.add_subcommand("correspond", "Match inner quotients with refined split quotients");
    auto* verify_cmd = app.add_subcommand("verify", "Run the property and oracle suites");
    verify_cmd->add_option("--seed", opt.verify.seed, "Random seed");
    verify_cmd->add_option("--max-size", opt.verify.max_size, "Enumeration bound")->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(opt, in, out);
        if (*transfer) return cmd_transfer(opt, in, out);
        if (*triples) return cmd_triples(opt, in, out);
        if (*filtration) return cmd_filtration(opt, in, out);
        if (*correspond) return cmd_correspond(opt, in, out);
        if (*verify_cmd) return cmd_verify(opt, out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        report_error(opt, e, out, err);
        return kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace jlf::cli
