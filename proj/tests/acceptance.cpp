// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtime limits are part of the criteria and enforced here.

#include "checks.hpp"
#include "tables.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace hecke;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail,
            double seconds) {
    std::printf("criterion %d: %s  %-55s (%.1fs)%s%s\n", criterion, ok ? "PASS" : "FAIL",
                what.c_str(), seconds, detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void report_timed(int criterion, const std::string& what, const CheckResult& r,
                  double time_limit) {
    bool ok = r.ok && r.seconds < time_limit;
    std::string detail = r.detail;
    if (r.ok && r.seconds >= time_limit)
        detail = "runtime " + std::to_string(r.seconds) + "s exceeds " +
                 std::to_string(time_limit) + "s";
    report(criterion, what, ok, detail, r.seconds);
}

}  // namespace

int main() {
    int jobs = 4;

    // criteria 1-6 and 9 share the three table runs
    auto table_results = run_table_checks(std::nullopt, jobs);
    // order: table -7, table -11, table -163, structure, hurwitz, oracle, cross-D
    report_timed(1, "published table N=-7 (13 rows, P=64)", table_results[0], 60.0);
    report_timed(2, "published table N=-11 (11 rows, P=64)", table_results[1], 60.0);
    report_timed(3, "published table N=-163 (32 rows, P=80)", table_results[2], 600.0);
    report(4, "structure counts (h,t), mass, type pairing", table_results[3].ok,
           table_results[3].detail, table_results[3].seconds);
    report(5, "Hurwitz class number table", table_results[4].ok, table_results[4].detail,
           table_results[4].seconds);
    report(6, "oracle agreement and construction identity", table_results[5].ok,
           table_results[5].detail, table_results[5].seconds);

    auto cert = run_certificate_check(Int(499), Prec{64, 10}, jobs);
    report_timed(7, "non-vanishing parity certificate |D| < 500", cert, 900.0);

    {
        auto props = run_property_checks(Prec{64, 10});
        bool ok = true;
        std::string detail;
        double secs = 0;
        for (const auto& p : props) {
            secs += p.seconds;
            if (!p.ok) {
                ok = false;
                detail += p.name + ": " + p.detail + "; ";
            }
        }
        auto st7 = run_stability_check(-7, golden_d_list(-7), Prec{64, 10}, jobs);
        auto st11 = run_stability_check(-11, golden_d_list(-11), Prec{64, 10}, jobs);
        auto st163 = run_stability_check(-163, golden_d_list(-163), Prec{80, 10}, jobs);
        for (const auto& st : {st7, st11, st163}) {
            secs += st.seconds;
            if (!st.ok) {
                ok = false;
                detail += st.name + ": " + st.detail + "; ";
            }
        }
        report(8, "property suites and precision-doubling stability", ok, detail, secs);
    }

    report(9, "cross-D consistency of |m| per ideal class", table_results[6].ok,
           table_results[6].detail, table_results[6].seconds);

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
