#ifndef HECKECV_TABLES_HPP
#define HECKECV_TABLES_HPP

// Reference central-value tables for N = -7, -11, -163 (forms exactly as
// published, with the published class assignments), plus the comparison that
// the check suite and acceptance tests run: row values must match up to one
// global sign per D, and class assignments up to a relabeling that respects
// the right-order pairing, with the principal class pinned.

#include "central.hpp"

#include <string>
#include <vector>

namespace hecke {

struct GoldenRow {
    long absD;
    long fa, fb, fc;  // form as published (not necessarily reduced)
    long n;
    const char* label;  // published class label ("" for N = -7, class number one)
};

const std::vector<GoldenRow>& golden_rows(long N);
std::vector<Int> golden_d_list(long N);

// published pairing structure of class labels: pairs share a right order
struct GoldenStructure {
    long N;
    long h;
    long t;
    std::vector<std::vector<std::string>> label_groups;  // singletons and pairs
};
const GoldenStructure& golden_structure(long N);

struct GoldenCheck {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// reports must cover exactly the golden D list of this N
GoldenCheck check_against_golden(long N, const std::vector<CentralValueReport>& reports,
                                 const QuatBundle& bundle);

// Hurwitz reference values H(3), H(4), H(7), H(8), H(11), H(12), H(15), H(16)
const std::vector<std::pair<long, Rat>>& golden_hurwitz();

}  // namespace hecke

#endif
