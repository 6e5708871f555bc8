#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "analytic.hpp"

using namespace hecke;

namespace {

const Prec P64{64, 10};

Complex make_c(const char* re, const char* im, mpfr_prec_t bits) {
    Complex c = Complex::zero(bits);
    mpfr_set_str(c.re.raw(), re, 10, MPFR_RNDN);
    mpfr_set_str(c.im.raw(), im, 10, MPFR_RNDN);
    return c;
}

}  // namespace

TEST_CASE("eta at i matches the gamma closed form") {
    mpfr_prec_t bits = P64.bits();
    Complex tau(Real(bits), Real::from_long(1, bits));
    Complex e = eta(tau, P64);
    Real expected = Real::from_rat(Rat(1, 4), bits).gamma() /
                    (Real::from_long(2, bits) *
                     (Real::pi(bits) * Real::pi(bits) * Real::pi(bits)).sqrt().sqrt());
    CHECK((e.re - expected).abs().to_double() < 1e-60);
    CHECK(e.im.abs().to_double() < 1e-60);
    // Gamma(1/4) / (2 pi^(3/4)) = 0.7682254223260566...
    CHECK(e.re.str(10).substr(0, 11) == std::string("0.768225422"));
}

TEST_CASE("eta functional equations") {
    mpfr_prec_t bits = P64.bits();
    double tol = P64.identity_tol();
    Complex tau(Real::from_rat(Rat(3, 7), bits), Real::from_rat(Rat(2, 5), bits));
    Complex e0 = eta(tau, P64);

    Complex e1 = eta(Complex(tau.re + Real::from_long(1, bits), tau.im), P64);
    Complex phase = cexp(Complex(Real(bits), Real::pi(bits) / Real::from_long(12, bits)));
    CHECK(cdist(e1, phase * e0) < tol);

    Complex minus_inv = -(Complex::one(bits) / tau);
    Complex e2 = eta(minus_inv, P64);
    Complex tau_over_i(tau.im, -tau.re);
    CHECK(cdist(e2, csqrt(tau_over_i) * e0) < tol);

    CHECK_THROWS(eta(Complex(Real(bits), -Real::from_long(1, bits)), P64));
}

TEST_CASE("theta series basics") {
    mpfr_prec_t bits = P64.bits();
    double tol = P64.identity_tol();
    QuadForm f(Int(1), Int(1), Int(6));  // disc -23

    // constant term: theta -> 1 as Im -> infinity
    Complex far(Real(bits), Real::from_long(9, bits));
    Complex th = theta_form(f, far, P64);
    CHECK((th - Complex::one(bits)).abs_double() < 3 * std::exp(-2 * M_PI * 9.0));

    // equivalent forms give equal values ([13,17,6] reduces into the same class)
    Complex tau(Real::from_rat(Rat(1, 3), bits), Real::from_rat(Rat(1, 4), bits));
    Complex a = theta_form(QuadForm(Int(13), Int(17), Int(6)), tau, P64);
    QuadForm red = reduce_form(QuadForm(Int(13), Int(17), Int(6))).form;
    Complex b = theta_form(red, tau, P64);
    CHECK(cdist(a, b) < tol);

    // inversion: theta(0, -(Q tau)^(-1)) = sqrt(det Q) (-i) tau theta(0, Q tau)
    Complex tau2 = -(Complex::one(bits) / tau.scaled(Real::from_long(23, bits)));
    Complex lhs = theta_form(QuadForm(f.c, -f.b, f.a), tau2, P64);
    Complex rhs = theta_form(f, tau, P64) * tau;
    rhs = Complex(rhs.im, -rhs.re, rhs.err);
    rhs = rhs.scaled(Real::sqrt_int(Int(23), bits));
    CHECK(cdist(lhs, rhs) < tol);
}

TEST_CASE("Dirichlet L(eps, 1) exact data") {
    auto v11 = dirichlet_L1(Int(11));
    CHECK(v11.coeff == Rat(1));  // pi / sqrt(11)
    auto v23 = dirichlet_L1(Int(23));
    CHECK(v23.coeff == Rat(3));  // 3 pi / sqrt(23)
    CHECK_THROWS(dirichlet_L1(Int(3)));  // w = 6 case is out of the pipeline
}

TEST_CASE("Eisenstein value against the theta decomposition") {
    mpfr_prec_t bits = P64.bits();
    double tol = P64.identity_tol();
    Complex tau(Real(bits), Real::from_rat(Rat(1, 5), bits));
    CHECK(theta_decomp_residual(Int(23), tau, P64) < tol);

    // q -> 0: E_1 approaches 2 L(eps, 1)
    Complex far(Real(bits), Real::from_long(40, bits));
    Complex e = eisenstein_value(Int(11), far, P64);
    Real expected = Real::from_long(2, bits) * dirichlet_L1(Int(11)).value(P64);
    CHECK((e.re - expected).abs().to_double() < 1e-40);
}

TEST_CASE("n values reproduce the published integers") {
    auto ctx7 = canonical_ideal_above(Int(-7), Int(11));
    QuadIdeal ok7(Int(1), ctx7.b, Int(-7));
    NValue n1 = n_value(ok7, QuadForm(Int(1), Int(1), Int(3)), ctx7, P64);
    CHECK(abs(n1.rounded) == 1);
    CHECK(n1.residual < 1e-40);

    auto ctx23 = canonical_ideal_above(Int(-7), Int(23));
    QuadIdeal ok23(Int(1), ctx23.b, Int(-7));
    // the three reduced classes carry {+1, -1, -1} up to one global sign
    Int a = n_value(ok23, QuadForm(Int(1), Int(1), Int(6)), ctx23, P64).rounded;
    Int b = n_value(ok23, QuadForm(Int(2), Int(-1), Int(3)), ctx23, P64).rounded;
    Int c = n_value(ok23, QuadForm(Int(2), Int(1), Int(3)), ctx23, P64).rounded;
    CHECK(abs(a) == 1);
    CHECK(b == c);
    CHECK(a == -b);

    // published non-reduced representative maps to the same class value
    QuadForm published = reduce_form(QuadForm(Int(13), Int(17), Int(6))).form;
    CHECK(n_value(ok23, published, ctx23, P64).rounded == b);

    auto ctx163 = canonical_ideal_above(Int(-163), Int(151));
    QuadIdeal ok163(Int(1), ctx163.b, Int(-163));
    Prec p80{80, 10};
    CHECK(abs(n_value(ok163, QuadForm(Int(1), Int(1), Int(38)), ctx163, p80).rounded) == 20);
}

TEST_CASE("root number is unimodular and oracle matches the formula route") {
    mpfr_prec_t bits = P64.bits();
    auto ctx = canonical_ideal_above(Int(-7), Int(11));
    Complex w = root_number_numeric(ctx, P64);
    CHECK(std::abs(w.abs_double() - 1.0) < 1e-40);
    // independently computed anchors (45 digits)
    Complex w_want = make_c("-0.797724035217465641855126209765119050988716075",
                            "0.603022689155527245293624133940124851623107008", bits);
    CHECK(cdist(w, w_want) < 1e-42);

    Complex lf = l_value_formula(ctx, P64);
    Complex lo = l_value_oracle(ctx, P64);
    CHECK(cdist(lf, lo) < 1e-32);
    Complex l_want = make_c("0.274571443118882176773796635661125938286608703",
                            "0.818549105292210686866295903424887201830383151", bits);
    CHECK(cdist(lf, l_want) < 1e-42);

    auto ctx11 = canonical_ideal_above(Int(-11), Int(23));
    Complex lf2 = l_value_formula(ctx11, P64);
    Complex l_want2 = make_c("0.987762408493500104994391119354801574927959302",
                             "0.68869410015579412115804065319929262919340317", bits);
    CHECK(cdist(lf2, l_want2) < 1e-42);
    Complex w2 = root_number_numeric(ctx11, P64);
    Complex w_want2 = make_c("0.345782037404062312037945170229142585578123781",
                             "0.938314863256836432051672664727483593042833986", bits);
    CHECK(cdist(w2, w_want2) < 1e-42);
}

TEST_CASE("oracle truncation is stable") {
    // doubling the working precision (hence the truncation length) moves the
    // value by less than the agreement tolerance
    auto ctx = canonical_ideal_above(Int(-7), Int(23));
    Complex a = l_value_oracle(ctx, P64);
    Complex b = l_value_oracle(ctx, Prec{96, 10});
    CHECK(cdist(a, b) < 1e-32);
}

TEST_CASE("theta action under a principal prime") {
    auto ctx = canonical_ideal_above(Int(-7), Int(11));
    QuadIdeal ok(Int(1), ctx.b, Int(-7));
    QuadForm f(Int(1), Int(1), Int(3));
    // p = 11 splits in Q(sqrt(-7)) and is prime to 6|D|? |D| = 11 -> pick 23
    double r = theta_action_residual(ctx, ok, f, Int(23), P64);
    CHECK(r < P64.identity_tol());
    double r2 = theta_action_residual(ctx, ok, f, Int(29), P64);
    CHECK(r2 < P64.identity_tol());
    CHECK_THROWS(theta_action_residual(ctx, ok, f, Int(3), P64));  // divides 6
}

TEST_CASE("n_value refuses at starved precision but never rounds wrongly") {
    auto ctx = canonical_ideal_above(Int(-163), Int(199));
    QuadIdeal ok(Int(1), ctx.b, Int(-163));
    // P=32 still resolves these integers or throws; it must not silently give
    // a different integer than the P=80 run
    Prec p80{80, 10};
    for (const auto& f : reduced_forms(Int(-199))) {
        Int want = n_value(ok, f, ctx, p80).rounded;
        try {
            Int got = n_value(ok, f, ctx, Prec{32, 10}).rounded;
            CHECK(got == want);
        } catch (const std::domain_error&) {
            // refusing to round is acceptable at low precision
        }
    }
}
