#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "central.hpp"
#include "tables.hpp"

using namespace hecke;

namespace {
const Prec P64{64, 10};
}

TEST_CASE("central value report for N=-11, D=23") {
    QuatBundle bundle = make_quat_bundle(Int(-11));
    auto ctx = canonical_ideal_above(Int(-11), Int(23));
    CentralValueReport rep = central_value(ctx, bundle, P64);

    REQUIRE(rep.rows.size() == 3);
    // {0 <-> principal class, +-2 <-> non-principal}
    for (const auto& row : rep.rows) {
        if (abs(row.n) == 2) CHECK(row.class_label != "O");
        if (row.n == 0) CHECK(row.class_label == "O");
    }
    CHECK(rep.m_values.at("O") == 0);
    CHECK(rep.m_values.at("I1") == 2);
    CHECK(abs(rep.r_values.at("I1")) == 1);
    CHECK(rep.r_values.at("O") == 0);
    CHECK(rep.oracle_ok);
    CHECK(rep.parity == 0);
    CHECK(rep.nonvanishing);

    // construction identity: L = Omega * sum n exactly
    Int total(0);
    for (const auto& row : rep.rows) total += row.n;
    CHECK(cdist(rep.L_formula, rep.omega.scaled_int(total)) == 0.0);
}

TEST_CASE("r coefficients for N=-11, D=47 and N=-7, D=23") {
    QuatBundle b11 = make_quat_bundle(Int(-11));
    auto rep47 = central_value(canonical_ideal_above(Int(-11), Int(47)), b11, P64);
    CHECK(abs(rep47.r_values.at("I1")) == 2);  // (2+2)/2
    CHECK(rep47.r_values.at("O") == 0);
    CHECK(rep47.m_values.at("I1") == 2);

    QuatBundle b7 = make_quat_bundle(Int(-7));
    auto rep23 = central_value(canonical_ideal_above(Int(-7), Int(23)), b7, P64);
    CHECK(rep23.m_values.at("O") == 1);
    CHECK(abs(rep23.r_values.at("O")) == 1);  // 1 - 1 - 1 up to the global sign
    CHECK(rep23.parity == 1);
}

TEST_CASE("published tables reproduce for N=-7 and N=-11") {
    for (long N : {-7L, -11L}) {
        QuatBundle bundle = make_quat_bundle(Int(N));
        auto reports = central_values(Int(N), golden_d_list(N), bundle, P64, 2);
        auto gc = check_against_golden(N, reports, bundle);
        for (const auto& f : gc.failures) MESSAGE(f);
        CHECK(gc.ok);
    }
}

TEST_CASE("cross-D consistency for N=-11") {
    QuatBundle bundle = make_quat_bundle(Int(-11));
    auto reports = central_values(Int(-11), golden_d_list(-11), bundle, P64, 2);
    auto cr = cross_d_consistency(reports, bundle);
    for (const auto& v : cr.violations) MESSAGE(v);
    CHECK(cr.consistent());
    REQUIRE(cr.observed.count("I1"));
    CHECK(cr.observed.at("I1") == std::vector<Int>{Int(2)});
    CHECK(cr.observed.at("O") == std::vector<Int>{Int(0)});
}

TEST_CASE("conjugate-d run gives identical |n| and parity") {
    QuatBundle bundle = make_quat_bundle(Int(-7));
    auto ctx = canonical_ideal_above(Int(-7), Int(23));
    auto ctx_conj = canonical_ideal_above(Int(-7), Int(23), true);
    CHECK(mod_positive(ctx.b - ctx_conj.b, 2 * ctx.absD) != 0);
    auto rep = central_value(ctx, bundle, P64);
    auto repc = central_value(ctx_conj, bundle, P64);
    REQUIRE(rep.rows.size() == repc.rows.size());
    for (size_t i = 0; i < rep.rows.size(); ++i) CHECK(abs(rep.rows[i].n) == abs(repc.rows[i].n));
    CHECK(rep.parity == repc.parity);
}

TEST_CASE("fields without published tables run end to end against the oracle") {
    // N = -19 has no reference rows; the smoothed-sum route is the oracle
    QuatBundle bundle = make_quat_bundle(Int(-19));
    auto ds = split_prime_norms(Int(-19), Int(60));
    REQUIRE(!ds.empty());
    for (const auto& d : ds) {
        auto rep = central_value(canonical_ideal_above(Int(-19), d), bundle, P64);
        CHECK(rep.oracle_ok);
        for (const auto& row : rep.rows) CHECK(row.residual < 1e-20);
    }
}

TEST_CASE("parity certificate over a small range") {
    QuatBundle bundle = make_quat_bundle(Int(-7));
    auto certs = nonvanishing_certificate(Int(80), bundle, P64, 2);
    REQUIRE(certs.size() == 6);  // 11, 23, 43, 67, 71, 79
    for (const auto& c : certs) {
        CHECK(c.parity == 1);
        CHECK(c.ok);
        CHECK(c.l_abs > 1e-10);
    }
}

TEST_CASE("reports are identical across job counts") {
    QuatBundle bundle = make_quat_bundle(Int(-11));
    auto serial = central_values(Int(-11), golden_d_list(-11), bundle, P64, 1);
    auto parallel = central_values(Int(-11), golden_d_list(-11), bundle, P64, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].absD == parallel[i].absD);
        REQUIRE(serial[i].rows.size() == parallel[i].rows.size());
        for (size_t r = 0; r < serial[i].rows.size(); ++r) {
            CHECK(serial[i].rows[r].n == parallel[i].rows[r].n);
            CHECK(serial[i].rows[r].class_label == parallel[i].rows[r].class_label);
        }
        // bit-identical analytic output regardless of scheduling
        CHECK(serial[i].L_formula.re.str(60) == parallel[i].L_formula.re.str(60));
        CHECK(serial[i].L_formula.im.str(60) == parallel[i].L_formula.im.str(60));
        CHECK(serial[i].L_oracle.re.str(60) == parallel[i].L_oracle.re.str(60));
    }
}

TEST_CASE("golden comparison rejects corrupted data") {
    QuatBundle bundle = make_quat_bundle(Int(-11));
    auto reports = central_values(Int(-11), golden_d_list(-11), bundle, P64, 2);
    // flip one n: the sign consistency within D=47 must break
    for (auto& row : reports[2].rows)
        if (abs(row.n) == 2) { row.n = -row.n; break; }
    auto gc = check_against_golden(-11, reports, bundle);
    CHECK(!gc.ok);
}
