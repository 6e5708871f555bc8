#ifndef HECKECV_CHECKS_HPP
#define HECKECV_CHECKS_HPP

// Reference-data and property suites shared by the CLI check command and the
// acceptance test binary.

#include "central.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hecke {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail;
    double seconds;
};

// reproduction of the published tables for N = -7, -11, -163 plus structure
// counts, oracle agreement, Hurwitz values, and cross-D consistency; when
// prec_override is empty the stated per-N precisions (64, 64, 80) are used
std::vector<CheckResult> run_table_checks(std::optional<unsigned> prec_override, int jobs);

// analytic and quaternion property suites at pipeline points
std::vector<CheckResult> run_property_checks(const Prec& pr);

// the N = -7 parity certificate over split |D| <= dmax
CheckResult run_certificate_check(const Int& dmax, const Prec& pr, int jobs);

// precision-doubling stability of the emitted integers for a table run
CheckResult run_stability_check(long N, const std::vector<Int>& ds, const Prec& pr, int jobs);

}  // namespace hecke

#endif
