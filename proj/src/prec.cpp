#include "prec.hpp"

#include <cmath>

namespace hecke {

double Prec::identity_tol() const { return std::pow(10.0, -double(digits) + double(guard)); }
double Prec::series_target() const { return std::pow(10.0, -double(digits) - double(guard)); }

Real Real::from_int(const Int& n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, n.backend().data(), MPFR_RNDN);
    return r;
}

Real Real::from_rat(const Rat& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.backend().data(), MPFR_RNDN);
    return r;
}

Real Real::from_long(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt_int(const Int& n, mpfr_prec_t prec) {
    require(n >= 0, "sqrt_int: negative argument");
    return from_int(n, prec).sqrt();
}

std::string Real::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Int Real::round_to_int() const {
    Real r(prec());
    mpfr_round(r.v_, v_);
    Int n;
    mpfr_get_z(n.backend().data(), r.v_, MPFR_RNDN);
    return n;
}

Complex Complex::one(mpfr_prec_t prec) {
    Complex c = zero(prec);
    mpfr_set_si(c.re.raw(), 1, MPFR_RNDN);
    return c;
}

double Complex::abs_double() const {
    double x = re.to_double(), y = im.to_double();
    return std::hypot(x, y);
}

double ulp_bound(double magnitude, mpfr_prec_t prec) {
    return (std::abs(magnitude) + 1e-300) * std::ldexp(4.0, -int(prec));
}

Complex Complex::operator+(const Complex& o) const {
    Complex r(re + o.re, im + o.im);
    r.err = err + o.err + ulp_bound(r.abs_double(), r.prec());
    return r;
}

Complex Complex::operator-(const Complex& o) const {
    Complex r(re - o.re, im - o.im);
    r.err = err + o.err + ulp_bound(r.abs_double(), r.prec());
    return r;
}

Complex Complex::operator*(const Complex& o) const {
    Complex r(re * o.re - im * o.im, re * o.im + im * o.re);
    double a = abs_double(), b = o.abs_double();
    r.err = a * o.err + b * err + err * o.err + ulp_bound(a * b, r.prec()) * 8;
    return r;
}

Complex Complex::operator/(const Complex& o) const {
    Real n2 = o.re * o.re + o.im * o.im;
    Complex r((re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2);
    double a = abs_double(), b = o.abs_double();
    require(b > o.err * 4, "Complex division: divisor indistinguishable from zero");
    double binv = 1.0 / (b - o.err);
    r.err = (err + (a * binv) * o.err) * binv + ulp_bound(a * binv, r.prec()) * 8;
    return r;
}

Complex Complex::scaled(const Real& s) const {
    Complex r(re * s, im * s);
    r.err = err * std::abs(s.to_double()) * (1 + 1e-14) + ulp_bound(r.abs_double(), r.prec()) * 4;
    return r;
}

Complex Complex::scaled_int(const Int& n) const {
    return scaled(Real::from_int(n, prec()));
}

std::string Complex::str(int digits) const {
    return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + im.abs().str(digits) + "i";
}

Complex cexp(const Complex& z) {
    Real mag = z.re.exp();
    Real s(z.prec()), c(z.prec());
    z.im.sin_cos(s, c);
    Complex r(mag * c, mag * s);
    double m = std::abs(mag.to_double());
    r.err = m * z.err * (1 + z.err) + ulp_bound(m, r.prec()) * 8;
    return r;
}

Complex cpow(const Complex& z, unsigned long n) {
    Complex acc = Complex::one(z.prec());
    Complex base = z;
    while (n > 0) {
        if (n & 1UL) acc = acc * base;
        n >>= 1UL;
        if (n) base = base * base;
    }
    return acc;
}

Complex csqrt(const Complex& z) {
    // principal branch: sqrt((|z|+re)/2) + i sign(im) sqrt((|z|-re)/2)
    Real m = z.abs();
    Real two = Real::from_long(2, z.prec());
    Real rr = ((m + z.re) / two).abs().sqrt();
    Real ri = ((m - z.re) / two).abs().sqrt();
    if (z.im.sign() < 0) ri = -ri;
    Complex r(rr, ri);
    double md = std::sqrt(std::abs(m.to_double()) + 1e-300);
    r.err = z.err / (md + 1e-300) + ulp_bound(md, r.prec()) * 8;
    return r;
}

double cdist(const Complex& a, const Complex& b) {
    return (a - b).abs_double();
}

}  // namespace hecke
