#include "supel/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "supel/error.hpp"
#include "supel/level3.hpp"
#include "supel/symplectic.hpp"
#include "supel/verify.hpp"

namespace supel {

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

std::pair<unsigned, unsigned> parse_genus_range(const std::string& text) {
    const auto bad = [&text]() {
        return Error(ErrorKind::BadRange,
                     "genus must be A or A..B with 1 <= A <= B <= 40, got '" + text + "'");
    };
    std::string lo = text;
    std::string hi = text;
    const std::size_t sep = text.find("..");
    if (sep != std::string::npos) {
        lo = text.substr(0, sep);
        hi = text.substr(sep + 2);
    }
    const auto parse_part = [&bad](const std::string& part) {
        if (part.empty() || part.size() > 2) {
            throw bad();
        }
        unsigned value = 0;
        for (const char c : part) {
            if (c < '0' || c > '9') {
                throw bad();
            }
            value = value * 10 + static_cast<unsigned>(c - '0');
        }
        return value;
    };
    const unsigned a = parse_part(lo);
    const unsigned b = parse_part(hi);
    if (a < 1 || a > b || b > 40) {
        throw bad();
    }
    return {a, b};
}

std::string row_label(const CensusRow& row) {
    return row.m.str() + (row.flagged ? "*" : "");
}

std::string pad(const std::string& text, std::size_t width) {
    return text + std::string(width - text.size(), ' ');
}

void render_census_text(const CensusReport& report, std::ostream& out) {
    const BigCount sp = sp_group_order(report.g, 3);
    out << "g=" << report.g << "  m=" << report.g + 2 << "  |Sp(" << 2 * report.g
        << ", F_3)| = " << sp.str() << " (" << sp.scientific() << ")\n";

    std::size_t label_width = std::string("m-vector").size();
    std::size_t aut_width = std::string("|Aut|").size();
    for (const CensusRow& row : report.rows) {
        label_width = std::max(label_width, row_label(row).size());
        aut_width = std::max(aut_width, row.aut_order.str().size());
    }
    out << "  " << pad("m-vector", label_width) << "  " << pad("|Aut|", aut_width)
        << "  components\n";
    for (const CensusRow& row : report.rows) {
        out << "  " << pad(row_label(row), label_width) << "  "
            << pad(row.aut_order.str(), aut_width) << "  " << row.components.str() << "\n";
    }
    out << "  " << pad("total", label_width) << "  " << pad("", aut_width) << "  "
        << report.total.str() << "\n";
    out << "  " << pad("formula", label_width) << "  " << pad("", aut_width) << "  "
        << report.formula_total.str() << (report.matches ? "  [ok]" : "  [MISMATCH]")
        << "\n";
}

nlohmann::ordered_json census_json(const CensusReport& report) {
    const std::string sp = sp_group_order(report.g, 3).str();
    nlohmann::ordered_json j;
    j["g"] = report.g;
    j["sp_order"] = sp;
    j["rows"] = nlohmann::ordered_json::array();
    for (const CensusRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["m"] = {row.m.count_for_exponent(1), row.m.count_for_exponent(2)};
        r["flagged"] = row.flagged;
        r["aut_order"] = row.aut_order.str();
        r["sp_order"] = sp;
        r["components"] = row.components.str();
        j["rows"].push_back(std::move(r));
    }
    j["total"] = report.total.str();
    j["formula_total"] = report.formula_total.str();
    j["agreement"] = report.matches;
    return j;
}

void render_table1(std::ostream& out) {
    out << " g   m  M\n";
    for (unsigned g = 1; g <= 12; ++g) {
        std::string labels;
        for (const MultiplicityVector& m : trigonal_indexing_set(g)) {
            if (!labels.empty()) {
                labels += ", ";
            }
            labels += m.str() + (m.stabilizer_nontrivial() ? "*" : "");
        }
        out << std::setw(2) << g << "  " << std::setw(2) << g + 2 << "  {" << labels
            << "}\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact component census of superelliptic moduli with level structure"};
    app.require_subcommand(1);

    std::string genus_arg;
    bool as_json = false;
    CLI::App* census = app.add_subcommand("census", "Per-genus component census");
    census->add_option("--genus", genus_arg, "Genus or range A..B within 1..40")->required();
    census->add_flag("--json", as_json, "Emit one JSON object per genus");

    std::string suite_name = "all";
    std::uint64_t seed = kDefaultSeed;
    CLI::App* verify = app.add_subcommand("verify", "Run self-check suites");
    verify->add_option("suite,--suite", suite_name, "weil|psi|embedding|formula|all");
    verify->add_option("--seed", seed, "Seed for the randomized suites");

    CLI::App* table1 = app.add_subcommand("table1", "Indexing sets for g = 1..12");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("supel");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (census->parsed()) {
            const auto [lo, hi] = parse_genus_range(genus_arg);
            bool all_match = true;
            for (unsigned g = lo; g <= hi; ++g) {
                const CensusReport report = census_report(g);
                all_match = all_match && report.matches;
                if (as_json) {
                    out << census_json(report).dump() << "\n";
                } else {
                    render_census_text(report, out);
                }
            }
            return all_match ? 0 : 1;
        }
        if (verify->parsed()) {
            bool all_pass = true;
            for (const SuiteResult& result : run_suite(suite_name, seed)) {
                out << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << ": "
                    << result.detail << "\n";
                all_pass = all_pass && result.passed;
            }
            return all_pass ? 0 : 1;
        }
        if (table1->parsed()) {
            render_table1(out);
            return 0;
        }
        err << "no command selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const bool usage =
            e.kind() == ErrorKind::BadRange || e.kind() == ErrorKind::UnknownSuite;
        return usage ? 2 : 1;
    }
}

}  // namespace supel
