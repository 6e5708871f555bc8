// Command-line front end: central-value tables, single L-value runs,
// quaternion class-set dumps, and the reference check suites.
//
// Exit codes: 0 ok, 1 usage, 2 invariant failure, 3 oracle disagreement.

#include <CLI11.hpp>
#include <json.hpp>

#include "central.hpp"
#include "checks.hpp"
#include "tables.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hecke;
using nlohmann::json;

namespace {

struct RunConfig {
    long N = -7;
    long d = 0;
    long dmax = 0;
    std::string dlist;
    unsigned prec = 64;
    bool conjugate_d = false;
    std::string format = "text";
    std::string out;
    int jobs = 1;
};

std::ostream& output_stream(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot open output file " + cfg.out);
    return file;
}

std::vector<Int> resolve_d_list(const RunConfig& cfg) {
    std::vector<Int> ds;
    if (!cfg.dlist.empty()) {
        std::stringstream ss(cfg.dlist);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                ds.push_back(Int(tok));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--dlist", "cannot parse '" + tok + "'");
            }
        }
        std::sort(ds.begin(), ds.end());
    } else if (cfg.dmax > 0) {
        ds = split_prime_norms(Int(cfg.N), Int(cfg.dmax));
    } else if (cfg.d > 0) {
        ds.push_back(Int(cfg.d));
    }
    for (const auto& d : ds) {
        if (!(is_prime(d) && mod_positive(d, Int(4)) == 3 && kronecker(Int(cfg.N), d) == 1))
            throw CLI::ValidationError("--d/--dlist", d.str() + " is not an admissible split prime for N=" +
                                                         std::to_string(cfg.N));
    }
    return ds;
}

json complex_json(const Complex& c, unsigned digits) {
    return json{{"re", c.re.str(int(digits))}, {"im", c.im.str(int(digits))}, {"err", c.err}};
}

json summary_json(const CentralValueReport& rep, unsigned digits) {
    return json{{"L_formula", complex_json(rep.L_formula, digits)},
                {"L_oracle", complex_json(rep.L_oracle, digits)},
                {"w_psi", complex_json(rep.w_psi, digits)},
                {"oracle_gap", rep.oracle_gap},
                {"parity", rep.parity},
                {"nonvanishing", rep.nonvanishing}};
}

json config_json(const RunConfig& cfg) {
    return json{{"N", cfg.N},        {"prec", cfg.prec},       {"conjugate_d", cfg.conjugate_d},
                {"format", cfg.format}, {"jobs", cfg.jobs}};
}

void print_rows_text(std::ostream& os, const std::vector<CentralValueReport>& reports) {
    os << std::left << std::setw(6) << "D" << std::setw(16) << "form" << std::setw(8) << "n"
       << std::setw(8) << "class" << "residual\n";
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            os << std::left << std::setw(6) << row.absD.str() << std::setw(16) << row.form.str()
               << std::setw(8) << row.n.str() << std::setw(8) << row.class_label << std::scientific
               << std::setprecision(2) << row.residual << "\n";
}

void print_rows_csv(std::ostream& os, const std::vector<CentralValueReport>& reports) {
    os << "D,form,reduced_form,n,class,residual\n";
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            os << row.absD << ",\"" << row.form.str() << "\",\"" << row.form.str() << "\"," << row.n
               << "," << row.class_label << "," << std::scientific << std::setprecision(3)
               << row.residual << "\n";
}

json rows_json(const std::vector<CentralValueReport>& reports) {
    json rows = json::array();
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            rows.push_back(json{{"D", row.absD.str()},
                                {"form", row.form.str()},
                                {"reduced_form", row.form.str()},
                                {"n", row.n.str()},
                                {"class", row.class_label},
                                {"residual", row.residual}});
    return rows;
}

int cmd_table(const RunConfig& cfg) {
    Prec pr{cfg.prec, 10};
    auto ds = resolve_d_list(cfg);
    if (ds.empty()) throw CLI::ValidationError("--dmax/--dlist", "no admissible D selected");
    QuatBundle bundle = make_quat_bundle(Int(cfg.N));
    auto reports = central_values(Int(cfg.N), ds, bundle, pr, cfg.jobs, cfg.conjugate_d);
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == "csv") {
        print_rows_csv(os, reports);
    } else if (cfg.format == "json") {
        json doc{{"schema", 1}, {"config", config_json(cfg)}, {"rows", rows_json(reports)}};
        json summaries = json::object();
        for (const auto& rep : reports) summaries[rep.absD.str()] = summary_json(rep, cfg.prec);
        doc["summary"] = summaries;
        os << doc.dump(2) << "\n";
    } else {
        print_rows_text(os, reports);
    }
    return 0;
}

int cmd_lvalue(const RunConfig& cfg) {
    if (cfg.d <= 0) throw CLI::ValidationError("--d", "lvalue needs a single D");
    Prec pr{cfg.prec, 10};
    auto ds = resolve_d_list(cfg);
    QuatBundle bundle = make_quat_bundle(Int(cfg.N));
    HeckeCharCtx ctx = canonical_ideal_above(Int(cfg.N), ds.at(0), cfg.conjugate_d);
    CentralValueReport rep = central_value(ctx, bundle, pr);
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == "json") {
        json doc{{"schema", 1},
                 {"config", config_json(cfg)},
                 {"rows", rows_json({rep})},
                 {"summary", summary_json(rep, cfg.prec)}};
        os << doc.dump(2) << "\n";
    } else {
        int digits = int(cfg.prec);
        os << "N = " << cfg.N << ", |D| = " << rep.absD << ", b = " << rep.b << "\n";
        for (const auto& row : rep.rows)
            os << "  n[" << row.form.str() << "] = " << row.n << "  (class " << row.class_label
               << ", residual " << std::scientific << std::setprecision(2) << row.residual
               << ")\n";
        os << "L_formula = " << rep.L_formula.str(digits) << "\n";
        os << "L_oracle  = " << rep.L_oracle.str(digits) << "\n";
        os << "|formula - oracle| = " << std::scientific << std::setprecision(3) << rep.oracle_gap
           << "\n";
        os << "w_psi = " << rep.w_psi.str(digits) << "\n";
        os << "parity = " << rep.parity << ", nonvanishing = "
           << (rep.nonvanishing ? "true" : "false") << "\n";
    }
    return rep.oracle_ok ? 0 : 3;
}

int cmd_classset(const RunConfig& cfg) {
    QuatBundle bundle = make_quat_bundle(Int(cfg.N));
    const ClassSet& cs = bundle.classes;
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    auto lattice_rows = [](const QuatLattice& l) {
        json rows = json::array();
        auto b = l.basis();
        for (const auto& w : b) {
            json row = json::array();
            for (int s = 0; s < 4; ++s) row.push_back(w.c[size_t(s)].str());
            rows.push_back(row);
        }
        return rows;
    };
    if (cfg.format == "json") {
        json doc{{"schema", 1}, {"N", cfg.N}, {"h", cs.size()}, {"t", cs.type_number()}};
        json classes = json::array();
        for (int i = 0; i < cs.size(); ++i)
            classes.push_back(json{{"label", cs.labels[size_t(i)]},
                                   {"units", cs.unit_counts[size_t(i)].str()},
                                   {"type", cs.type_index[size_t(i)]},
                                   {"basis", lattice_rows(cs.reps[size_t(i)])}});
        doc["classes"] = classes;
        json groups = json::array();
        for (const auto& g : cs.type_groups) {
            json grp = json::array();
            for (int i : g) grp.push_back(cs.labels[size_t(i)]);
            groups.push_back(grp);
        }
        doc["type_groups"] = groups;
        os << doc.dump(2) << "\n";
    } else {
        os << "N = " << cfg.N << ": h = " << cs.size() << ", t = " << cs.type_number() << "\n";
        Rat mass(0);
        for (int i = 0; i < cs.size(); ++i) {
            os << "  " << std::left << std::setw(4) << cs.labels[size_t(i)]
               << " units = " << cs.unit_counts[size_t(i)] << "  type = " << cs.type_index[size_t(i)]
               << "  basis = " << cs.reps[size_t(i)].str() << "\n";
            mass += Rat(1) / Rat(cs.unit_counts[size_t(i)]);
        }
        os << "mass = " << mass << " (expected " << Rat(Int(-cfg.N - 1), Int(24)) << ")\n";
        os << "type groups:";
        for (const auto& g : cs.type_groups) {
            os << " {";
            for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << cs.labels[size_t(g[i])];
            os << "}";
        }
        os << "\n";
    }
    return 0;
}

int cmd_check(const std::string& suite, const RunConfig& cfg, bool prec_given) {
    std::vector<CheckResult> results;
    if (suite == "paper-tables") {
        results = run_table_checks(prec_given ? std::optional<unsigned>(cfg.prec) : std::nullopt,
                                   cfg.jobs);
    } else if (suite == "properties") {
        results = run_property_checks(Prec{cfg.prec, 10});
    } else {
        throw CLI::ValidationError("--suite", "unknown suite " + suite);
    }
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    bool all_ok = true;
    json jr = json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        if (cfg.format == "json") {
            jr.push_back(json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail},
                              {"seconds", r.seconds}});
        } else {
            os << (r.ok ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) os << "  [" << r.detail << "]";
            os << std::fixed << std::setprecision(1) << "  (" << r.seconds << "s)\n";
        }
    }
    if (cfg.format == "json") {
        os << json{{"schema", 1}, {"suite", suite}, {"ok", all_ok}, {"results", jr}}.dump(2)
           << "\n";
    } else {
        os << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central values of quadratic-twist Hecke L-series via quaternion ideal classes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_d) {
        sub->add_option("--n", cfg.N, "negative prime discriminant (one of -7,-11,-19,-43,-67,-163)")
            ->check(CLI::IsMember({-7, -11, -19, -43, -67, -163}));
        if (with_d) {
            sub->add_option("--d", cfg.d, "single split prime |D|");
            sub->add_option("--dmax", cfg.dmax, "all split primes up to this bound");
            sub->add_option("--dlist", cfg.dlist, "comma-separated list of split primes");
        }
        sub->add_option("--prec", cfg.prec, "working precision in decimal digits")
            ->check(CLI::Range(32u, 4096u));
        sub->add_flag("--conjugate-d", cfg.conjugate_d, "use the complementary prime above |D|");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads over D values")->check(CLI::Range(1, 64));
        sub->add_option("--out", cfg.out, "write output to this file");
    };

    auto* table = app.add_subcommand("table", "n-value table rows for a range of D");
    add_common(table, true);
    auto* lvalue = app.add_subcommand("lvalue", "central value for a single D, both routes");
    add_common(lvalue, true);
    lvalue->add_flag("--verify-oracle", "kept for compatibility; the oracle always runs");
    auto* classset = app.add_subcommand("classset", "left-ideal class set of the maximal order");
    add_common(classset, false);
    auto* check = app.add_subcommand("check", "reference data and property suites");
    std::string suite = "paper-tables";
    check->add_option("--suite", suite, "paper-tables or properties")
        ->check(CLI::IsMember({"paper-tables", "properties"}));
    add_common(check, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(table)) return cmd_table(cfg);
        if (app.got_subcommand(lvalue)) return cmd_lvalue(cfg);
        if (app.got_subcommand(classset)) return cmd_classset(cfg);
        if (app.got_subcommand(check))
            return cmd_check(suite, cfg, check->count("--prec") > 0);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle disagreement: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 1;
}
