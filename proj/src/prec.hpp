#ifndef HECKECV_PREC_HPP
#define HECKECV_PREC_HPP

// Fixed-precision real/complex arithmetic on MPFR with a conservatively
// propagated scalar error bound. Values carry their precision explicitly;
// binary operations require matching precision (one precision per pipeline
// run, chosen from the Prec context).

#include "arith.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace hecke {

// Precision context: P decimal digits of working precision plus g guard
// digits. Identities are certified to 10^(-P+g); integers are recognized at
// a fixed 10^-20 gate.
struct Prec {
    unsigned digits = 64;
    unsigned guard = 10;

    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>((digits + 2 * guard) * 3.3219280948873623) + 16;
    }
    double identity_tol() const;   // 10^(-P+g)
    double integer_tol() const { return 1e-20; }
    double series_target() const;  // truncation target 10^-(P+g)
};

class Real {
  public:
    Real() : Real(mpfr_prec_t(64)) {}
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    static Real from_int(const Int& n, mpfr_prec_t prec);
    static Real from_rat(const Rat& q, mpfr_prec_t prec);
    static Real from_long(long n, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);
    static Real sqrt_int(const Int& n, mpfr_prec_t prec);  // n >= 0

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string str(int digits) const;

    // nearest integer and |x - nearest|
    Int round_to_int() const;

    friend Real operator+(const Real& a, const Real& b) { return Real::op2(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return Real::op2(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return Real::op2(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return Real::op2(a, b, mpfr_div); }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }

    Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Real sqrt() const { Real r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Real exp() const { Real r(prec()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    Real log() const { Real r(prec()); mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    Real gamma() const { Real r(prec()); mpfr_gamma(r.v_, v_, MPFR_RNDN); return r; }
    void sin_cos(Real& s, Real& c) const {
        mpfr_set_prec(s.v_, prec());
        mpfr_set_prec(c.v_, prec());
        mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    using mpfr_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real op2(const Real& a, const Real& b, mpfr_fn f) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

// Complex value with a conservative absolute error bound. The bound covers
// series truncation added explicitly by callers plus rounding accumulated by
// arithmetic.
struct Complex {
    Real re, im;
    double err = 0.0;

    Complex() = default;
    Complex(Real r, Real i, double e = 0.0) : re(std::move(r)), im(std::move(i)), err(e) {}
    static Complex zero(mpfr_prec_t prec) { return Complex(Real(prec), Real(prec)); }
    static Complex one(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re.prec(); }
    double abs_double() const;
    Real abs() const { return (re * re + im * im).sqrt(); }
    Complex conj() const { return Complex(re, -im, err); }

    Complex operator+(const Complex& o) const;
    Complex operator-(const Complex& o) const;
    Complex operator*(const Complex& o) const;
    Complex operator/(const Complex& o) const;
    Complex operator-() const { return Complex(-re, -im, err); }
    Complex scaled(const Real& s) const;      // multiply by exact nonneg real
    Complex scaled_int(const Int& n) const;   // multiply by exact integer

    std::string str(int digits) const;
};

// exp(z)
Complex cexp(const Complex& z);
// z^n for n >= 0 by binary powering
Complex cpow(const Complex& z, unsigned long n);
// principal square root
Complex csqrt(const Complex& z);

// |a - b| as double (for tolerance checks)
double cdist(const Complex& a, const Complex& b);

// machine epsilon contribution at the given magnitude/precision
double ulp_bound(double magnitude, mpfr_prec_t prec);

}  // namespace hecke

#endif
