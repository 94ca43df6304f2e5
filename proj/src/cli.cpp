#include "dtroots/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dtroots/bounds.hpp"
#include "dtroots/enumeration.hpp"
#include "dtroots/notation.hpp"
#include "dtroots/pairing.hpp"
#include "dtroots/reports.hpp"

namespace dtroots::cli {

namespace {

struct CommandConfig {
    std::string format = "text";
    int jobs = -1;  // -1: not given on the command line
    std::string output;

    std::string literal;
    std::int64_t n = 0;
    std::int64_t g = 0;
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;
    std::int64_t N = 11;
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::int64_t g_max = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned resolve_width(const CommandConfig& cfg) {
    if (cfg.jobs >= 0) return static_cast<unsigned>(cfg.jobs);
    if (const char* env = std::getenv("DTROOTS_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 0;  // all cores
}

void require_format(const CommandConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (cfg.format == f) return;
    }
    throw UsageError("format '" + cfg.format + "' is not supported by this command");
}

std::string read_literal(const CommandConfig& cfg, std::istream& in) {
    if (!cfg.literal.empty()) return cfg.literal;
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

nlohmann::ordered_json report_json(const ValidationReport& r) {
    auto failures = nlohmann::ordered_json::array();
    for (auto c : r.failures) failures.push_back(std::string(to_string(c)));
    return {{"overall", r.overall}, {"failures", failures}};
}

std::string report_text(const ValidationReport& r) {
    if (r.overall) return "valid";
    std::string out = "invalid:";
    for (auto c : r.failures) out += " " + std::string(to_string(c));
    return out;
}

std::string pair_line(const RootClass& rc) {
    return "(" + to_text(rc.d1()) + ", " + to_text(rc.d2()) + ") degree " + std::to_string(rc.degree());
}

int run_validate(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const auto raw = parse_literal(read_literal(cfg, in));
    const auto report = validate(raw);
    if (cfg.format == "json") out << report_json(report).dump() << "\n";
    else out << report_text(report) << "\n";
    return report.overall ? kOk : kFailed;
}

int run_genus(const CommandConfig& cfg, std::istream& in, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    const auto raw = parse_literal(read_literal(cfg, in));
    const auto report = validate(raw);
    if (!report.overall) {
        if (cfg.format == "json") out << report_json(report).dump() << "\n";
        else out << report_text(report) << "\n";
        return kFailed;
    }
    const auto d = canonical_form(raw);
    if (cfg.format == "json") {
        nlohmann::ordered_json j{{"data_set", to_json(d)}, {"genus", genus(d)}};
        out << j.dump() << "\n";
    } else {
        out << genus(d) << "\n";
    }
    return kOk;
}

int run_enumerate(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"text", "json"});
    if (cfg.g < 1) throw UsageError("enumerate needs --g >= 1");
    const unsigned width = resolve_width(cfg);
    std::vector<DataSet> all;
    if (cfg.n != 0) {
        const EnumerationQuery q{cfg.n, cfg.g};
        if (q.n < 1) throw UsageError("enumerate needs --n >= 1");
        if (q.above_order_bound()) {
            err << "warning: degree " << q.n << " exceeds 4g+2 = " << 4 * q.g + 2
                << "; no data sets can exist\n";
        }
        all = enumerate_data_sets(q, width);
    } else {
        for (auto& [n, list] : enumerate_for_genus(cfg.g, width)) {
            all.insert(all.end(), list.begin(), list.end());
        }
    }
    for (const auto& d : all) {
        if (cfg.format == "json") out << to_json(d).dump() << "\n";
        else out << to_text(d) << "\n";
    }
    return kOk;
}

void check_split(const CommandConfig& cfg) {
    if (cfg.g2 < 1 || cfg.g1 < cfg.g2) throw UsageError("need --g1 >= --g2 >= 1");
}

int run_pairs(const CommandConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    check_split(cfg);
    for (const auto& rc : enumerate_root_classes(cfg.g1, cfg.g2, resolve_width(cfg))) {
        if (cfg.format == "json") out << to_json(rc).dump() << "\n";
        else out << pair_line(rc) << "\n";
    }
    return kOk;
}

int run_max_degree(const CommandConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    MaxDegree m;
    nlohmann::ordered_json j;
    if (cfg.g != 0) {
        if (cfg.g < 2) throw UsageError("max-degree needs --g >= 2");
        m = max_degree_for_genus(cfg.g, resolve_width(cfg));
        j["g"] = cfg.g;
    } else {
        check_split(cfg);
        m = max_root_degree(cfg.g1, cfg.g2, resolve_width(cfg));
    }
    if (cfg.format == "json") {
        j["g1"] = m.g1;
        j["g2"] = m.g2;
        j["max_degree"] = m.degree;
        if (m.witness) j["witness"] = to_json(*m.witness);
        out << j.dump() << "\n";
    } else {
        out << m.degree << "\n";
    }
    return kOk;
}

int run_witness(const CommandConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.g1 < 1 || cfg.g2 < 1) throw UsageError("witness needs --g1, --g2 >= 1");
    const auto rc = witness_pair(cfg.g1, cfg.g2);
    if (cfg.format == "json") out << to_json(rc).dump() << "\n";
    else out << pair_line(rc) << "\n";
    return kOk;
}

void print_rows(const CommandConfig& cfg, const std::vector<BoundRow>& rows, std::ostream& out) {
    if (cfg.format == "md") out << rows_to_markdown(rows);
    else if (cfg.format == "csv") out << rows_to_csv(rows);
    else if (cfg.format == "json") out << rows_to_json(rows).dump(1) << "\n";
    else out << rows_to_text(rows);
}

int run_table1(const CommandConfig& cfg, std::ostream& out) {
    if (cfg.from < 2 || cfg.to < cfg.from) throw UsageError("table1 needs 2 <= --from <= --to");
    print_rows(cfg, table1(cfg.from, cfg.to, resolve_width(cfg)), out);
    return kOk;
}

int run_table2(const CommandConfig& cfg, std::ostream& out) {
    if (cfg.N < 1 || cfg.N % 2 == 0) throw UsageError("table2 needs an odd positive --N");
    if (cfg.from < 2 || cfg.to < cfg.from) throw UsageError("table2 needs 2 <= --from <= --to");
    print_rows(cfg, table2(cfg.N, cfg.from, cfg.to, resolve_width(cfg)), out);
    return kOk;
}

int run_classify(const CommandConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    check_split(cfg);
    const auto report = classification_report(cfg.g1, cfg.g2, resolve_width(cfg));
    if (cfg.format == "json") out << report_to_json(report).dump(1) << "\n";
    else out << report_to_text(report);
    return kOk;
}

int run_verify(const CommandConfig& cfg, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.g_max < 2) throw UsageError("verify needs --g-max >= 2");
    const auto report = verify_theorems(cfg.g_max, resolve_width(cfg));
    if (cfg.format == "json") {
        out << to_json(report).dump(1) << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.theorem << " [" << c.cases << " cases, "
                << c.range << "]\n";
            for (const auto& w : c.witnesses) out << "     witness: " << w << "\n";
        }
    }
    return report.all_passed() ? kOk : kFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CommandConfig cfg;
    CLI::App app{"Enumerate and verify roots of Dehn twists about separating curves", "dtroots"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "md"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores; env DTROOTS_JOBS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");

    auto* validate_cmd = app.add_subcommand("validate", "Check a data set literal");
    validate_cmd->add_option("literal", cfg.literal, "Text or JSON literal (default: stdin)");
    auto* genus_cmd = app.add_subcommand("genus", "Genus of a data set literal");
    genus_cmd->add_option("literal", cfg.literal, "Text or JSON literal (default: stdin)");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List data sets of a genus");
    enumerate_cmd->add_option("--n", cfg.n, "Degree (default: every degree up to 4g+2)");
    enumerate_cmd->add_option("--g", cfg.g, "Genus")->required();

    auto* pairs_cmd = app.add_subcommand("pairs", "List root classes for a genus split");
    pairs_cmd->add_option("--g1", cfg.g1)->required();
    pairs_cmd->add_option("--g2", cfg.g2)->required();

    auto* max_cmd = app.add_subcommand("max-degree", "Largest root degree");
    auto* max_g = max_cmd->add_option("--g", cfg.g, "Total genus");
    auto* max_g1 = max_cmd->add_option("--g1", cfg.g1);
    auto* max_g2 = max_cmd->add_option("--g2", cfg.g2);
    max_g->excludes(max_g1)->excludes(max_g2);
    max_g1->needs(max_g2);
    max_g2->needs(max_g1);

    auto* witness_cmd = app.add_subcommand("witness", "Root of degree lcm(4g1, 4g2+2)");
    witness_cmd->add_option("--g1", cfg.g1)->required();
    witness_cmd->add_option("--g2", cfg.g2)->required();

    auto* table1_cmd = app.add_subcommand("table1", "m(g) against U(g)");
    table1_cmd->add_option("--from", cfg.from)->required();
    table1_cmd->add_option("--to", cfg.to)->required();

    auto* table2_cmd = app.add_subcommand("table2", "M(g1, g2) against the stable bound");
    table2_cmd->add_option("--N", cfg.N)->required();
    table2_cmd->add_option("--from", cfg.from)->required();
    table2_cmd->add_option("--to", cfg.to)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Root classes grouped by degree");
    classify_cmd->add_option("--g1", cfg.g1)->required();
    classify_cmd->add_option("--g2", cfg.g2)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check bounds and non-existence results");
    verify_cmd->add_option("--g-max", cfg.g_max)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }
    if (max_cmd->parsed() && cfg.g == 0 && max_g1->count() == 0) {
        err << "error: max-degree needs --g or --g1/--g2\n";
        return kUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << "\n";
            return kUsage;
        }
        sink = &file;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(cfg, in, *sink);
        if (genus_cmd->parsed()) return run_genus(cfg, in, *sink);
        if (enumerate_cmd->parsed()) return run_enumerate(cfg, *sink, err);
        if (pairs_cmd->parsed()) return run_pairs(cfg, *sink);
        if (max_cmd->parsed()) return run_max_degree(cfg, *sink);
        if (witness_cmd->parsed()) return run_witness(cfg, *sink);
        if (table1_cmd->parsed()) return run_table1(cfg, *sink);
        if (table2_cmd->parsed()) return run_table2(cfg, *sink);
        if (classify_cmd->parsed()) return run_classify(cfg, *sink);
        if (verify_cmd->parsed()) return run_verify(cfg, *sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace dtroots::cli
