#ifndef HECKECV_QUADFIELD_HPP
#define HECKECV_QUADFIELD_HPP

// Imaginary quadratic orders: elements, ideals, binary forms, class numbers,
// Hurwitz class numbers, and the quadratic Hecke character data attached to
// a split prime.

#include "arith.hpp"

#include <string>
#include <vector>

namespace hecke {

// (x + y*sqrt(disc))/2 with x = y*disc mod 2, an integral element of the
// order of discriminant disc.
struct QuadElem {
    Int x, y, disc;

    QuadElem(Int x_, Int y_, Int disc_) : x(std::move(x_)), y(std::move(y_)), disc(std::move(disc_)) {
        require(mod_positive(x - y * disc, Int(2)) == 0, "QuadElem: parity constraint violated");
    }
    static QuadElem integer(const Int& n, const Int& disc) { return QuadElem(2 * n, Int(0), disc); }

    QuadElem conj() const { return QuadElem(x, -y, disc); }
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator-() const { return QuadElem(-x, -y, disc); }
    bool operator==(const QuadElem& o) const { return x == o.x && y == o.y && disc == o.disc; }
    Int norm() const { return (x * x - disc * y * y) / 4; }
    Int trace() const { return x; }
    std::string str() const;
};

// primitive ideal <a, (b+sqrt(disc))/2>, a > 0, b^2 = disc mod 4a
struct QuadIdeal {
    Int a, b, disc;

    QuadIdeal(Int a_, Int b_, Int disc_);
    QuadIdeal conj() const { return QuadIdeal(a, -b, disc); }
    // same module <=> equal a and b mod 2a
    bool operator==(const QuadIdeal& o) const {
        return a == o.a && disc == o.disc && mod_positive(b - o.b, 2 * a) == 0;
    }
    bool contains(const QuadElem& e) const;
};

// [a, b, c] with b^2 - 4ac = disc < 0, a > 0
struct QuadForm {
    Int a, b, c;

    QuadForm(Int a_, Int b_, Int c_);
    Int disc() const { return b * b - 4 * a * c; }
    bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
    bool is_reduced() const;
    QuadForm conj() const { return QuadForm(a, -b, c); }
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    std::string str() const;

    QuadIdeal ideal() const { return QuadIdeal(a, b, disc()); }
    static QuadForm from_ideal(const QuadIdeal& i) {
        return QuadForm(i.a, i.b, (i.b * i.b - i.disc) / (4 * i.a));
    }
};

struct ReducedForm {
    QuadForm form;
    IntMatrix transform;  // in SL2(Z); form(transform * v) = input(v)
};

// one reduced representative per proper equivalence class of primitive forms,
// sorted by (a, b)
std::vector<QuadForm> reduced_forms(const Int& disc);

// Gauss reduction; rejects imprimitive input
ReducedForm reduce_form(const QuadForm& f);

// properly equivalent form with b = 1 mod 4 (basis convention used by the
// quaternion ideal construction)
QuadForm form_with_b1mod4(const QuadForm& f);

Int class_number(const Int& disc);
int unit_factor(const Int& disc);  // u(-3)=3, u(-4)=2, else 1

// Hurwitz class number H(d) = sum_{df^2 = -d} h(d)/u(d); 0 for non-discriminants
Rat hurwitz(const Int& d);
// p-modified Hurwitz invariant
Rat hurwitz_mod(const Int& p, const Int& d);

// all primes q <= limit with q = 3 mod 4 and kronecker(N, q) = 1, ascending
std::vector<Int> split_prime_norms(const Int& N, const Int& limit);

// Quadratic Hecke character data for K = Q(sqrt(N)), h(K) = 1, attached to
// the prime Dbar = <|D|, (b+sqrt(N))/2> above the split prime |D|.
// The canonical b is the smallest positive solution of
//   b = 3 mod 48,  b^2 = N mod 4|D|;
// reduction mod Dbar sends sqrt(N) to -b, reduction mod D to +b.
struct HeckeCharCtx {
    Int N;     // negative prime, N = 1 mod 4
    Int absD;  // split prime norm, = 3 mod 4
    Int b;     // canonical generator datum (see above)

    QuadIdeal ideal_dbar() const { return QuadIdeal(absD, b, N); }
    int unit_count_L() const { return 2; }  // |D| > 3 throughout the pipeline

    // character value in {-1, 0, +1}; 0 iff the element lies in the prime
    int eps_dbar_or_zero(const QuadElem& alpha) const;
    int eps_d_or_zero(const QuadElem& alpha) const;
};

// throws unless N is in the class-number-one list and |D| is an admissible
// split prime; conjugate = true picks the complementary prime above |D|
HeckeCharCtx canonical_ideal_above(const Int& N, const Int& absD, bool conjugate = false);

// value of the character eps_Dbar; throws if alpha is in Dbar
int epsilon(const HeckeCharCtx& ctx, const QuadElem& alpha);

// psi on the principal ideal <alpha>: eps_Dbar(alpha) * alpha
QuadElem psi_principal(const HeckeCharCtx& ctx, const QuadElem& alpha);

// exact CM point z = (b1 + sqrt(N)) / (2 * a1 * |D|) for the ideal A*Dbar
struct CMPoint {
    Int a1, b1, absD, N;
};
CMPoint z_point(const QuadIdeal& A, const HeckeCharCtx& ctx);

// some element of O_K of norm n (exhaustive search), if one exists
std::optional<QuadElem> element_of_norm(const Int& N, const Int& n);

bool is_discriminant(const Int& d);  // d = 0 or 1 mod 4, d < 0 here

// class-number-one fields the pipeline accepts
bool admissible_N(const Int& N);

}  // namespace hecke

#endif
