#include "quadfield.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

QuadElem QuadElem::operator+(const QuadElem& o) const {
    require(disc == o.disc, "QuadElem: mixed discriminants");
    return QuadElem(x + o.x, y + o.y, disc);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    require(disc == o.disc, "QuadElem: mixed discriminants");
    return QuadElem(x - o.x, y - o.y, disc);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    require(disc == o.disc, "QuadElem: mixed discriminants");
    // ((x1 + y1 s)/2)((x2 + y2 s)/2), s^2 = disc
    return QuadElem((x * o.x + disc * y * o.y) / 2, (x * o.y + y * o.x) / 2, disc);
}

std::string QuadElem::str() const {
    std::ostringstream os;
    os << "(" << x << (y >= 0 ? "+" : "-") << abs(y) << "*sqrt(" << disc << "))/2";
    return os.str();
}

QuadIdeal::QuadIdeal(Int a_, Int b_, Int disc_)
    : a(std::move(a_)), b(std::move(b_)), disc(std::move(disc_)) {
    require(a > 0, "QuadIdeal: norm must be positive");
    require(mod_positive(b * b - disc, 4 * a) == 0, "QuadIdeal: b^2 != disc mod 4a");
}

bool QuadIdeal::contains(const QuadElem& e) const {
    require(e.disc == disc, "QuadIdeal: mixed discriminants");
    // e = m*a + n*(b+sqrt)/2  <=>  n = e.y, m = (e.x - e.y*b)/(2a)
    if (mod_positive(e.x - e.y * b, 2 * a) != 0) return false;
    return true;
}

QuadForm::QuadForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require(a > 0, "QuadForm: a must be positive");
    require(b * b - 4 * a * c < 0, "QuadForm: discriminant must be negative");
}

bool QuadForm::is_reduced() const {
    if (!(abs(b) <= a && a <= c)) return false;
    if ((abs(b) == a || a == c) && b < 0) return false;
    return true;
}

std::string QuadForm::str() const {
    std::ostringstream os;
    os << "[" << a << "," << b << "," << c << "]";
    return os.str();
}

std::vector<QuadForm> reduced_forms(const Int& disc) {
    require(disc < 0, "reduced_forms: discriminant must be negative");
    require(is_discriminant(disc), "reduced_forms: not a discriminant");
    std::vector<QuadForm> out;
    for (Int a(1); 3 * a * a <= -disc; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod_positive(b * b - disc, 4 * a) != 0) continue;
            Int c = (b * b - disc) / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            QuadForm f(a, b, c);
            if (!f.is_primitive()) continue;
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReducedForm reduce_form(const QuadForm& f) {
    require(f.is_primitive(), "reduce_form: imprimitive form");
    Int a = f.a, b = f.b, c = f.c;
    IntMatrix u = IntMatrix::identity(2);
    auto apply_T = [&](const Int& k) {
        // (x,y) -> (x + k y, y): [a,b,c] -> [a, b+2ak, ak^2+bk+c]
        c = a * k * k + b * k + c;
        b = b + 2 * a * k;
        IntMatrix t = IntMatrix::identity(2);
        t.at(0, 1) = k;
        u = u * t;
    };
    auto apply_S = [&]() {
        // (x,y) -> (-y,x): [a,b,c] -> [c,-b,a]
        std::swap(a, c);
        b = -b;
        IntMatrix s(2, 2);
        s.at(0, 1) = -1;
        s.at(1, 0) = 1;
        u = u * s;
    };
    for (int guard = 0; guard < 10000; ++guard) {
        // center b into (-a, a]
        if (!(-a < b && b <= a)) {
            Int k = -fdiv(b + a, 2 * a);
            if (b + 2 * a * k <= -a) k += 1;
            apply_T(k);
        }
        if (a > c) {
            apply_S();
            continue;
        }
        if (a == c && b < 0) {
            apply_S();
            continue;
        }
        if (b == -a) {
            apply_T(Int(1));
            continue;
        }
        break;
    }
    QuadForm r(a, b, c);
    ensure(r.is_reduced(), "reduce_form: reduction did not terminate");
    ensure(r.disc() == f.disc(), "reduce_form: discriminant changed");
    return ReducedForm{r, u};
}

QuadForm form_with_b1mod4(const QuadForm& f) {
    require(mod_positive(f.b, Int(2)) == 1, "form_with_b1mod4: form must have odd b");
    Int a = f.a, b = f.b, c = f.c;
    if (mod_positive(b, Int(4)) == 1) return QuadForm(a, b, c);
    if (mod_positive(a, Int(2)) == 1) {
        for (Int q : {Int(1), Int(-1)}) {
            if (mod_positive(b + 2 * a * q, Int(4)) == 1)
                return QuadForm(a, b + 2 * a * q, a * q * q + b * q + c);
        }
    }
    if (mod_positive(c, Int(2)) == 1) {
        for (Int r : {Int(1), Int(-1)}) {
            if (mod_positive(b + 2 * c * r, Int(4)) == 1)
                return QuadForm(a + b * r + c * r * r, b + 2 * c * r, c);
        }
    }
    // a, c both even: shear to make the leading coefficient odd first
    return form_with_b1mod4(QuadForm(a + b + c, b + 2 * c, c));
}

Int class_number(const Int& disc) { return Int(reduced_forms(disc).size()); }

int unit_factor(const Int& disc) {
    if (disc == -3) return 3;
    if (disc == -4) return 2;
    return 1;
}

bool is_discriminant(const Int& d) {
    Int r = mod_positive(d, Int(4));
    return r == 0 || r == 1;
}

Rat hurwitz(const Int& d) {
    require(d > 0, "hurwitz: argument must be positive");
    Rat total(0);
    for (Int f(1); f * f <= d; ++f) {
        if (mod_positive(d, f * f) != 0) continue;
        Int d0 = -(d / (f * f));
        if (!is_discriminant(d0)) continue;
        total += Rat(class_number(d0)) / unit_factor(d0);
    }
    return total;
}

namespace {

// fundamental discriminant d0 and conductor f with -d = d0 * f^2
void split_conductor(const Int& d, Int& d0, Int& f) {
    Int best_f(0);
    for (Int g(1); g * g <= d; ++g) {
        if (mod_positive(d, g * g) != 0) continue;
        Int cand = -(d / (g * g));
        if (!is_discriminant(cand)) continue;
        best_f = g;  // largest g wins: cand closest to fundamental
    }
    ensure(best_f > 0, "split_conductor: not a discriminant");
    f = best_f;
    d0 = -(d / (best_f * best_f));
}

}  // namespace

Rat hurwitz_mod(const Int& p, const Int& d) {
    require(is_prime(p), "hurwitz_mod: p must be prime");
    require(d > 0, "hurwitz_mod: argument must be positive");
    if (!is_discriminant(-d)) return Rat(0);
    Int d0, f;
    split_conductor(d, d0, f);
    if (mod_positive(f, p) == 0) return hurwitz_mod(p, d / (p * p));
    int k = kronecker(d0, p);
    if (k == 1) return Rat(0);                  // p splits
    if (k == -1) return hurwitz(d);             // p inert
    return hurwitz(d) / 2;                      // p ramified, p not | conductor
}

std::vector<Int> split_prime_norms(const Int& N, const Int& limit) {
    require(N < 0 && is_prime(-N) && mod_positive(N, Int(4)) == 1 && N != -3,
            "split_prime_norms: N must be the negative of a prime, N = 1 mod 4");
    std::vector<Int> out;
    // |D| = 3 stays out: the pipeline needs w_{|D|} = 2 and b = 3 mod 48
    for (Int q(7); q <= limit; q += 4) {
        if (!is_prime(q)) continue;
        if (kronecker(N, q) == 1) out.push_back(q);
    }
    return out;
}

bool admissible_N(const Int& N) {
    return N == -7 || N == -11 || N == -19 || N == -43 || N == -67 || N == -163;
}

HeckeCharCtx canonical_ideal_above(const Int& N, const Int& absD, bool conjugate) {
    require(admissible_N(N), "canonical_ideal_above: N outside the class-number-one list");
    require(is_prime(absD) && mod_positive(absD, Int(4)) == 3 && absD > 3,
            "canonical_ideal_above: |D| must be a prime = 3 mod 4, |D| > 3");
    require(kronecker(N, absD) == 1, "canonical_ideal_above: |D| does not split");
    Int first(0);
    for (Int b(3); b < 96 * absD + 48; b += 48) {
        if (mod_positive(b * b - N, 4 * absD) != 0) continue;
        if (first == 0) {
            if (!conjugate) return HeckeCharCtx{N, absD, b};
            first = b;
        } else if (mod_positive(b - first, 2 * absD) != 0) {
            return HeckeCharCtx{N, absD, b};
        }
    }
    throw std::logic_error("canonical_ideal_above: no admissible b found");
}

int HeckeCharCtx::eps_dbar_or_zero(const QuadElem& alpha) const {
    require(alpha.disc == N, "eps: element of the wrong field");
    // alpha = (x + y sqrt(N))/2, sqrt(N) = -b mod Dbar
    Int r = mod_positive((alpha.x - alpha.y * b) * inv_mod(Int(2), absD), absD);
    return kronecker(r, absD);
}

int HeckeCharCtx::eps_d_or_zero(const QuadElem& alpha) const {
    require(alpha.disc == N, "eps: element of the wrong field");
    Int r = mod_positive((alpha.x + alpha.y * b) * inv_mod(Int(2), absD), absD);
    return kronecker(r, absD);
}

int epsilon(const HeckeCharCtx& ctx, const QuadElem& alpha) {
    int e = ctx.eps_dbar_or_zero(alpha);
    require(e != 0, "epsilon: element lies in the prime (value would be 0)");
    return e;
}

QuadElem psi_principal(const HeckeCharCtx& ctx, const QuadElem& alpha) {
    int e = epsilon(ctx, alpha);
    return e == 1 ? alpha : -alpha;
}

CMPoint z_point(const QuadIdeal& A, const HeckeCharCtx& ctx) {
    require(A.disc == ctx.N, "z_point: ideal of the wrong field");
    require(gcd(A.a, ctx.absD) == 1, "z_point: ideal not prime to Dbar");
    require(gcd(A.a, Int(6)) == 1, "z_point: representative must be prime to 6");
    if (A.a == 1) return CMPoint{A.a, ctx.b, ctx.absD, ctx.N};
    // joint b1 = ctx.b mod 48|D| (eta normalization) and = A.b mod 2a
    Int m1 = lcm(Int(48), 2 * ctx.absD), m2 = 2 * A.a;
    Int g = gcd(m1, m2);
    require(mod_positive(ctx.b - A.b, g) == 0, "z_point: incompatible ideals");
    Int l = lcm(m1, m2);
    Int t = mod_positive((ctx.b - A.b) / g * inv_mod(m2 / g, m1 / g), m1 / g);
    Int b1 = mod_positive(A.b + m2 * t, l);
    ensure(mod_positive(b1 - ctx.b, m1) == 0 && mod_positive(b1 - A.b, m2) == 0,
           "z_point: CRT failed");
    ensure(mod_positive(b1 * b1 - ctx.N, 4 * A.a * ctx.absD) == 0, "z_point: joint basis invalid");
    return CMPoint{A.a, b1, ctx.absD, ctx.N};
}

std::optional<QuadElem> element_of_norm(const Int& N, const Int& n) {
    require(N < 0, "element_of_norm: imaginary field expected");
    if (n <= 0) return std::nullopt;
    // (x^2 + |N| y^2)/4 = n
    for (Int y(0); N * y * y + 4 * n >= 0; ++y) {
        auto x2 = is_square(4 * n + N * y * y);
        if (!x2) continue;
        Int x = *x2;
        if (mod_positive(x - y * N, Int(2)) != 0) continue;
        return QuadElem(x, y, N);
    }
    return std::nullopt;
}

}  // namespace hecke
