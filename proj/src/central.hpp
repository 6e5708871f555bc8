#ifndef HECKECV_CENTRAL_HPP
#define HECKECV_CENTRAL_HPP

// Assembly of the central-value reports: n-table rows with quaternion ideal
// class labels, the m and r integers, both L-routes, and the parity
// certificate.

#include "analytic.hpp"
#include "quatalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

struct TableRow {
    Int absD;
    QuadForm form;      // reduced representative (canonical row key)
    Int n;
    std::string class_label;
    double residual;
};

struct CentralValueReport {
    Int N, absD, b;
    bool conjugate_d = false;
    std::vector<TableRow> rows;
    std::map<std::string, Int> m_values;  // class label -> nonnegative m
    std::map<std::string, Int> r_values;  // class label -> r
    Complex omega, L_formula, L_oracle, w_psi;
    double oracle_gap = 0.0;
    bool oracle_ok = false;  // gap < 10^(-P/2)
    int parity = 0;          // sum of n mod 2
    bool nonvanishing = false;
};

// the two L-routes disagreed beyond 10^(-P/2): a convention error, reported
// with its own exit code by the CLI
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// per-N quaternion data shared by every D
struct QuatBundle {
    QuatLattice order;  // standard maximal order for B = (-1, N)
    ClassSet classes;
};
QuatBundle make_quat_bundle(const Int& N);

// full report for one (N, |D|); the bundle must belong to the same N
CentralValueReport central_value(const HeckeCharCtx& ctx, const QuatBundle& bundle,
                                 const Prec& pr);

// reports for several D, optionally in parallel, output in ascending |D|
std::vector<CentralValueReport> central_values(const Int& N, const std::vector<Int>& absDs,
                                               const QuatBundle& bundle, const Prec& pr,
                                               int jobs, bool conjugate_d = false);

struct ParityCertificate {
    Int absD;
    int parity;
    double l_abs;
    double oracle_gap;
    bool ok;
};

// N = -7 non-vanishing certificate over all split |D| <= dmax
std::vector<ParityCertificate> nonvanishing_certificate(const Int& dmax, const QuatBundle& bundle,
                                                        const Prec& pr, int jobs);

struct CrossDReport {
    // class label -> set of |m| values observed at D where the class is hit
    std::map<std::string, std::vector<Int>> observed;
    std::vector<std::string> violations;
    bool consistent() const { return violations.empty(); }
};

// each ideal class must receive one |m| value across all D where it is hit;
// classes sharing a right order must receive equal m within each D
CrossDReport cross_d_consistency(const std::vector<CentralValueReport>& reports,
                                 const QuatBundle& bundle);

}  // namespace hecke

#endif
