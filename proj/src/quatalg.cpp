#include "quatalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hecke {

Quat Quat::operator+(const Quat& o) const {
    require(N == o.N, "Quat: mixed algebras");
    return Quat(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3], N);
}

Quat Quat::operator-(const Quat& o) const {
    require(N == o.N, "Quat: mixed algebras");
    return Quat(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3], N);
}

Quat Quat::operator*(const Quat& o) const {
    require(N == o.N, "Quat: mixed algebras");
    const Rat &t1 = c[0], &x1 = c[1], &y1 = c[2], &z1 = c[3];
    const Rat &t2 = o.c[0], &x2 = o.c[1], &y2 = o.c[2], &z2 = o.c[3];
    Rat n(N);
    // i j = k, j i = -k, i k = -j, k i = j, j k = -N i, k j = N i
    return Quat(t1 * t2 - x1 * x2 + n * (y1 * y2 + z1 * z2),
                t1 * x2 + x1 * t2 - n * (y1 * z2 - z1 * y2),
                t1 * y2 + y1 * t2 - (x1 * z2 - z1 * x2),
                t1 * z2 + z1 * t2 + (x1 * y2 - y1 * x2), N);
}

Quat Quat::inverse() const {
    Rat n = norm();
    require(n != 0, "Quat: inverse of zero");
    Quat cj = conj();
    return cj.scale(1 / n);
}

std::string Quat::str() const {
    std::ostringstream os;
    os << c[0] << " + " << c[1] << "*i + " << c[2] << "*j + " << c[3] << "*k";
    return os.str();
}

QuatLattice::QuatLattice(const std::vector<Quat>& gens, const Int& N) : N_(N), m_(4, 4), den_(1) {
    require(!gens.empty(), "QuatLattice: no generators");
    Int denom(1);
    for (const auto& g : gens) {
        require(g.N == N, "QuatLattice: mixed algebras");
        for (const auto& x : g.c) denom = lcm(denom, den(x));
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Int> r(4);
        for (int j = 0; j < 4; ++j) r[size_t(j)] = num(g.c[size_t(j)]) * (denom / den(g.c[size_t(j)]));
        rows.push_back(std::move(r));
    }
    auto h = hnf_rows(std::move(rows));
    require(h.size() == 4, "QuatLattice: generators do not span rank 4");
    // remove joint content from (matrix, denominator)
    Int g = denom;
    for (const auto& r : h)
        for (const auto& x : r) g = gcd(g, x);
    den_ = denom / g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m_.at(i, j) = h[size_t(i)][size_t(j)] / g;
}

std::array<Quat, 4> QuatLattice::basis() const {
    std::array<Quat, 4> b{Quat::zero(N_), Quat::zero(N_), Quat::zero(N_), Quat::zero(N_)};
    for (int i = 0; i < 4; ++i) {
        b[size_t(i)] = Quat(Rat(m_.at(i, 0)) / Rat(den_), Rat(m_.at(i, 1)) / Rat(den_),
                            Rat(m_.at(i, 2)) / Rat(den_), Rat(m_.at(i, 3)) / Rat(den_), N_);
    }
    return b;
}

bool QuatLattice::contains(const Quat& q) const {
    // solve c * M = den * q.coords over Z; M upper triangular, so column j
    // is settled by row j once rows < j are consumed
    std::array<Rat, 4> target;
    for (int j = 0; j < 4; ++j) target[size_t(j)] = q.c[size_t(j)] * Rat(den_);
    for (int i = 0; i < 4; ++i) {
        Rat coef = target[size_t(i)] / Rat(m_.at(i, i));
        if (den(coef) != 1) return false;
        for (int j = i; j < 4; ++j) target[size_t(j)] -= coef * Rat(m_.at(i, j));
    }
    for (int j = 0; j < 4; ++j) ensure(target[size_t(j)] == 0, "contains: residue after solve");
    return true;
}

QuatLattice QuatLattice::scaled(const Rat& s) const {
    require(s != 0, "QuatLattice: zero scaling");
    auto b = basis();
    std::vector<Quat> gens;
    for (const auto& w : b) gens.push_back(w.scale(s));
    return QuatLattice(gens, N_);
}

QuatLattice QuatLattice::primitive() const {
    return scaled(Rat(den_));
}

GramMatrix QuatLattice::norm_gram() const {
    auto b = basis();
    GramMatrix g(4);
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) g.at(r, s) = (b[size_t(r)] * b[size_t(s)].conj()).trace();
    return g;
}

Rat QuatLattice::norm() const {
    GramMatrix g = norm_gram();
    Rat acc(0);
    auto rgcd = [](const Rat& a, const Rat& b) {
        if (a == 0) return abs(b);
        if (b == 0) return abs(a);
        return Rat(gcd(num(a) * den(b), num(b) * den(a))) / Rat(den(a) * den(b));
    };
    for (int r = 0; r < 4; ++r) {
        acc = rgcd(acc, g.at(r, r) / 2);
        for (int s = r + 1; s < 4; ++s) acc = rgcd(acc, g.at(r, s));
    }
    ensure(acc > 0, "norm: degenerate lattice");
    return acc;
}

Rat QuatLattice::discriminant() const {
    GramMatrix g = norm_gram();
    // 4x4 rational determinant by elimination
    std::array<std::array<Rat, 4>, 4> a;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) a[size_t(r)][size_t(s)] = g.at(r, s);
    Rat det(1);
    int sign = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (a[size_t(r)][size_t(c)] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) { std::swap(a[size_t(piv)], a[size_t(c)]); sign = -sign; }
        det *= a[size_t(c)][size_t(c)];
        for (int r = c + 1; r < 4; ++r) {
            Rat f = a[size_t(r)][size_t(c)] / a[size_t(c)][size_t(c)];
            for (int s = c; s < 4; ++s) a[size_t(r)][size_t(s)] -= f * a[size_t(c)][size_t(s)];
        }
    }
    return sign > 0 ? det : -det;
}

bool QuatLattice::is_maximal_ideal_pair() const {
    Rat n = norm();
    return discriminant() == Rat(N_ * N_) * n * n * n * n;
}

std::string QuatLattice::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < 4; ++j) {
            if (j) os << ",";
            os << Rat(Rat(m_.at(i, j)) / Rat(den_));
        }
    }
    os << "]";
    return os.str();
}

QuatLattice lattice_mul(const QuatLattice& a, const QuatLattice& b) {
    require(a.algebra_N() == b.algebra_N(), "lattice_mul: mixed algebras");
    std::vector<Quat> gens;
    auto ba = a.basis(), bb = b.basis();
    for (const auto& x : ba)
        for (const auto& y : bb) gens.push_back(x * y);
    return QuatLattice(gens, a.algebra_N());
}

QuatLattice lattice_conj(const QuatLattice& a) {
    std::vector<Quat> gens;
    for (const auto& w : a.basis()) gens.push_back(w.conj());
    return QuatLattice(gens, a.algebra_N());
}

QuatLattice lattice_add(const QuatLattice& a, const QuatLattice& b) {
    require(a.algebra_N() == b.algebra_N(), "lattice_add: mixed algebras");
    std::vector<Quat> gens;
    for (const auto& w : a.basis()) gens.push_back(w);
    for (const auto& w : b.basis()) gens.push_back(w);
    return QuatLattice(gens, a.algebra_N());
}

namespace {

// rows of the inverse-transpose of m/den: the standard-inner-product dual
std::vector<Quat> dual_basis_std(const QuatLattice& l) {
    // solve X * (M/den) = I  ->  dual rows are columns of (M/den)^{-1}
    const IntMatrix& m = l.basis_matrix();
    std::array<std::array<Rat, 8>, 4> a;
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            a[size_t(r)][size_t(s)] = Rat(m.at(r, s)) / Rat(l.denominator());
            a[size_t(r)][size_t(s) + 4] = Rat(r == s ? 1 : 0);
        }
    }
    // invert by Gauss-Jordan
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (a[size_t(r)][size_t(c)] != 0) { piv = r; break; }
        ensure(piv >= 0, "dual_basis_std: singular basis");
        std::swap(a[size_t(piv)], a[size_t(c)]);
        Rat f = a[size_t(c)][size_t(c)];
        for (int s = 0; s < 8; ++s) a[size_t(c)][size_t(s)] /= f;
        for (int r = 0; r < 4; ++r) {
            if (r == c || a[size_t(r)][size_t(c)] == 0) continue;
            Rat g = a[size_t(r)][size_t(c)];
            for (int s = 0; s < 8; ++s) a[size_t(r)][size_t(s)] -= g * a[size_t(c)][size_t(s)];
        }
    }
    // inverse rows are a[.][4..8); dual basis rows = columns of inverse
    std::vector<Quat> dual;
    for (int cidx = 0; cidx < 4; ++cidx) {
        dual.push_back(Quat(a[0][size_t(4 + cidx)], a[1][size_t(4 + cidx)], a[2][size_t(4 + cidx)],
                            a[3][size_t(4 + cidx)], l.algebra_N()));
    }
    return dual;
}

}  // namespace

QuatLattice lattice_intersect(const QuatLattice& a, const QuatLattice& b) {
    QuatLattice da(dual_basis_std(a), a.algebra_N());
    QuatLattice db(dual_basis_std(b), b.algebra_N());
    QuatLattice s = lattice_add(da, db);
    return QuatLattice(dual_basis_std(s), a.algebra_N());
}

QuatLattice lattice_right_scale(const QuatLattice& a, const Quat& q) {
    std::vector<Quat> gens;
    for (const auto& w : a.basis()) gens.push_back(w * q);
    return QuatLattice(gens, a.algebra_N());
}

QuatLattice lattice_left_scale(const Quat& q, const QuatLattice& a) {
    std::vector<Quat> gens;
    for (const auto& w : a.basis()) gens.push_back(q * w);
    return QuatLattice(gens, a.algebra_N());
}

QuatLattice left_order(const QuatLattice& l) {
    // O_l = intersection over basis w of L * w^{-1}
    auto b = l.basis();
    bool first = true;
    QuatLattice acc = l;  // placeholder
    for (const auto& w : b) {
        QuatLattice piece = lattice_right_scale(l, w.inverse());
        acc = first ? piece : lattice_intersect(acc, piece);
        first = false;
    }
    ensure(acc.contains(Quat::integer(Int(1), l.algebra_N())), "left_order: 1 not contained");
    return acc;
}

QuatLattice right_order(const QuatLattice& l) { return left_order(lattice_conj(l)); }

QuatLattice ideal_inverse(const QuatLattice& l) {
    return lattice_conj(l).scaled(1 / l.norm());
}

QuatLattice bilateral_prime(const QuatLattice& order) {
    // N * dual of the order under Tr(x y); S_std = diag(2,-2,2N,2N)
    const Int& N = order.algebra_N();
    // condition Tr(b w_r) in Z: convert to the standard dual by applying
    // S^{-1} on coordinates: dual_T = dual_std * S^{-T}; do it directly
    std::vector<Quat> d = dual_basis_std(order);
    // dual_std rows satisfy <d_r, w_s> = delta; we need Tr(b w_s) = delta
    // with Tr(q(beta) q(omega)) = beta S omega^T, so b rows = d * S^{-1}
    std::vector<Quat> gens;
    Rat two(2), twoN = Rat(2 * N);
    for (const auto& q : d) {
        gens.push_back(Quat(q.c[0] / two, -q.c[1] / two, q.c[2] / twoN, q.c[3] / twoN, N));
    }
    QuatLattice dualT(gens, N);
    return dualT.scaled(Rat(-N));
}

Int unit_count(const QuatLattice& order) {
    auto sv = short_vectors(order.norm_gram(), Rat(2));
    Int count(0);
    for (const auto& v : sv)
        if (v.value == 2) ++count;
    return count;
}

Int embedding_count(const QuatLattice& order) {
    const Int& N = order.algebra_N();
    auto sv = short_vectors(order.norm_gram(), Rat(-2 * N));
    auto b = order.basis();
    Int count(0);
    for (const auto& v : sv) {
        if (v.value != Rat(-2 * N)) continue;
        Quat q = Quat::zero(N);
        for (int t = 0; t < 4; ++t) q = q + b[size_t(t)].scale(Rat(v.v[size_t(t)]));
        if (q.trace() == 0) ++count;
    }
    return count;
}

QuatLattice standard_maximal_order(const Int& N) {
    require(N < 0 && mod_positive(N, Int(4)) == 1, "standard_maximal_order: N must be 1 mod 4");
    Rat h(1, 2);
    std::vector<Quat> gens = {
        Quat(h, Rat(0), h, Rat(0), N),      // (1+j)/2
        Quat(Rat(0), h, Rat(0), h, N),      // (i+k)/2
        Quat::unit_j(N),
        Quat(Rat(0), Rat(0), Rat(0), Rat(1), N),
    };
    QuatLattice o(gens, N);
    ensure(o.discriminant() == N * N, "standard_maximal_order: discriminant is not N^2");
    return o;
}

std::optional<Quat> ideal_equiv(const QuatLattice& i, const QuatLattice& j) {
    require(left_order(i) == left_order(j), "ideal_equiv: left orders differ");
    const Int& N = i.algebra_N();
    QuatLattice ji = lattice_mul(ideal_inverse(j), i);
    Rat target = i.norm() / j.norm();
    auto sv = short_vectors(ji.norm_gram(), 2 * target);
    auto b = ji.basis();
    for (const auto& v : sv) {
        if (v.value != 2 * target) continue;
        Quat alpha = Quat::zero(N);
        for (int t = 0; t < 4; ++t) alpha = alpha + b[size_t(t)].scale(Rat(v.v[size_t(t)]));
        if (lattice_right_scale(j, alpha) == i) return alpha;
    }
    return std::nullopt;
}

std::optional<Quat> conjugating_element(const QuatLattice& o_from, const QuatLattice& o_to) {
    QuatLattice c = lattice_mul(o_from, o_to).primitive();
    if (auto g = ideal_equiv(c, o_from)) return g;
    QuatLattice pc = lattice_mul(bilateral_prime(o_from), c).primitive();
    if (auto g = ideal_equiv(pc, o_from)) return g;
    return std::nullopt;
}

namespace {

// the p+1 left ideals of norm p inside a maximal order, p not dividing N
std::vector<QuatLattice> norm_p_left_ideals(const QuatLattice& order, const Int& p) {
    const Int& N = order.algebra_N();
    require(gcd(p, N) == 1, "norm_p_left_ideals: p divides the ramified prime");
    auto b = order.basis();
    std::vector<QuatLattice> found;
    long pl = p.convert_to<long>();
    for (long c0 = 0; c0 < pl; ++c0)
        for (long c1 = 0; c1 < pl; ++c1)
            for (long c2 = 0; c2 < pl; ++c2)
                for (long c3 = 0; c3 < pl; ++c3) {
                    if (c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0) continue;
                    Quat x = b[0].scale(Rat(c0)) + b[1].scale(Rat(c1)) + b[2].scale(Rat(c2)) +
                             b[3].scale(Rat(c3));
                    if (mod_positive(num(x.norm()), p) != 0) continue;
                    std::vector<Quat> gens;
                    for (const auto& w : b) gens.push_back(w.scale(Rat(p)));
                    for (const auto& w : b) gens.push_back(w * x);
                    QuatLattice ideal(gens, N);
                    if (ideal.norm() != p) continue;
                    if (std::find(found.begin(), found.end(), ideal) == found.end())
                        found.push_back(ideal);
                    if (Int(found.size()) == p + 1) return found;
                }
    ensure(Int(found.size()) == p + 1, "norm_p_left_ideals: incomplete neighbor set");
    return found;
}

}  // namespace

ClassSet class_set(const QuatLattice& maximal_order) {
    const Int& N = maximal_order.algebra_N();
    require(maximal_order.discriminant() == N * N, "class_set: order is not maximal");
    Rat mass_target(Int(-N - 1), Int(24));
    Int p(2);
    while (gcd(p, N) != 1) p = p + 1;

    ClassSet cs{maximal_order, {}, {}, {}, {}, {}};
    cs.reps.push_back(maximal_order);
    cs.unit_counts.push_back(unit_count(maximal_order));
    Rat mass = Rat(1) / Rat(cs.unit_counts.back());
    std::vector<int> frontier = {0};

    while (mass != mass_target) {
        require(!frontier.empty(), "class_set: mass not reached within the neighbor search");
        int cur = frontier.front();
        frontier.erase(frontier.begin());
        QuatLattice r = right_order(cs.reps[size_t(cur)]);
        for (const auto& jp : norm_p_left_ideals(r, p)) {
            QuatLattice cand = lattice_mul(cs.reps[size_t(cur)], jp).primitive();
            bool known = false;
            for (const auto& rep : cs.reps) {
                if (ideal_equiv(cand, rep)) { known = true; break; }
            }
            if (known) continue;
            cs.reps.push_back(cand);
            cs.unit_counts.push_back(unit_count(right_order(cand)));
            mass += Rat(1) / Rat(cs.unit_counts.back());
            frontier.push_back(int(cs.reps.size()) - 1);
            if (mass == mass_target) break;
        }
    }
    ensure(mass == mass_target, "class_set: Eichler mass identity failed");

    // labels in enumeration order
    cs.labels.push_back("O");
    for (int i = 1; i < cs.size(); ++i) cs.labels.push_back("I" + std::to_string(i));

    // type partition via conjugacy of right orders
    std::vector<QuatLattice> rorders;
    for (const auto& rep : cs.reps) rorders.push_back(right_order(rep));
    cs.type_index.assign(size_t(cs.size()), -1);
    for (int idx = 0; idx < cs.size(); ++idx) {
        if (cs.type_index[size_t(idx)] >= 0) continue;
        int tid = int(cs.type_groups.size());
        cs.type_index[size_t(idx)] = tid;
        cs.type_groups.push_back({idx});
        for (int other = idx + 1; other < cs.size(); ++other) {
            if (cs.type_index[size_t(other)] >= 0) continue;
            if (conjugating_element(rorders[size_t(idx)], rorders[size_t(other)])) {
                cs.type_index[size_t(other)] = tid;
                cs.type_groups[size_t(tid)].push_back(other);
            }
        }
    }
    return cs;
}

int ClassSet::classify(const QuatLattice& ideal) const {
    for (int idx = 0; idx < size(); ++idx)
        if (ideal_equiv(ideal, reps[size_t(idx)])) return idx;
    throw std::logic_error("ClassSet::classify: ideal matches no class (wrong left order?)");
}

EmbeddingTriple solve_embedding(const Int& N, const Int& absD) {
    require(N < 0 && absD > 0, "solve_embedding: sign conventions violated");
    Int absN = -N;
    // Holzer-style bound: a primitive solution exists with z <= sqrt(|N||D|)
    Int zmax = isqrt(absN * absD) + 2;
    for (Int z(1); z <= zmax; ++z) {
        for (Int y(0); absN * y * y <= absD * z * z; ++y) {
            auto x = is_square(absD * z * z - absN * y * y);
            if (!x) continue;
            if (*x == 0) continue;
            if (gcd(gcd(*x, y), z) != 1) continue;
            return EmbeddingTriple{*x, y, z};
        }
    }
    throw std::domain_error("solve_embedding: no primitive solution within the Holzer bound");
}

SiegelConstruction siegel_ideal(const CMPoint& z, const QuadForm& form, const Quat& v) {
    const Int& N = z.N;
    require(mod_positive(form.b, Int(4)) == 1, "siegel_ideal: form must have b = 1 mod 4");
    require(form.disc() == -z.absD, "siegel_ideal: form discriminant mismatch");
    require(v.norm() == z.absD && v.trace() == 0, "siegel_ideal: v is not a norm-|D| pure vector");
    require((Quat::unit_j(N) * v.conj()).trace() == 0, "siegel_ideal: v not orthogonal to j");
    Rat a1(z.a1), b1(z.b1), d(z.absD);
    Quat front(b1 / (2 * a1 * d), Rat(0), Rat(-1) / (2 * a1 * d), Rat(0), N);  // (b1-j)/(2 a1 |D|)
    Quat w1 = front * v.scale(Rat(form.a));
    Quat w2 = front * ((v.scale(Rat(form.b)) + Quat::integer(z.absD, N)).scale(Rat(1, 2)));
    Quat w3 = (v - Quat::integer(form.b, N)).scale(Rat(1, 2));
    Quat w4 = Quat::integer(form.a, N);
    std::array<Quat, 4> basis{w1, w2, w3, w4};
    QuatLattice lat({w1, w2, w3, w4}, N);
    return SiegelConstruction{basis, lat};
}

void SiegelPoint::validate() const {
    // J integral skew with det 1
    require(j.rows() == 4 && j.cols() == 4, "SiegelPoint: J must be 4x4");
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) require(j.at(r, s) == -j.at(s, r), "SiegelPoint: J not skew");
    require(j.det() == 1, "SiegelPoint: det J != 1");
    // U_s^2 = N, U_s J = P_s, J U_s^T = -P_s, P_s symmetric positive definite
    auto mul4 = [](const RatMat4& a, const RatMat4& b) {
        RatMat4 r{};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) r[size_t(i)][size_t(l)] += a[size_t(i)][size_t(k)] * b[size_t(k)][size_t(l)];
        return r;
    };
    RatMat4 jr{};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) jr[size_t(r)][size_t(s)] = Rat(j.at(r, s));
    RatMat4 u2 = mul4(u_scaled, u_scaled);
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            require(u2[size_t(r)][size_t(s)] == (r == s ? Rat(N) : Rat(0)), "SiegelPoint: U^2 != -1");
    RatMat4 uj = mul4(u_scaled, jr);
    RatMat4 jut{};
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            for (int k = 0; k < 4; ++k) jut[size_t(r)][size_t(s)] += jr[size_t(r)][size_t(k)] * u_scaled[size_t(s)][size_t(k)];
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            require(uj[size_t(r)][size_t(s)] == p_scaled[size_t(r)][size_t(s)], "SiegelPoint: U J != P");
            require(jut[size_t(r)][size_t(s)] == -p_scaled[size_t(r)][size_t(s)], "SiegelPoint: J U^T != -P");
            require(p_scaled[size_t(r)][size_t(s)] == p_scaled[size_t(s)][size_t(r)], "SiegelPoint: P not symmetric");
        }
    GramMatrix g(4);
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) g.at(r, s) = p_scaled[size_t(r)][size_t(s)];
    require(g.is_positive_definite(), "SiegelPoint: P not positive definite");
}

namespace {

// coordinates of q in the given basis (rows), exact
std::array<Rat, 4> coords_in_basis(const Quat& q, const std::array<Quat, 4>& basis) {
    // solve x * M = q, i.e. M^T x^T = q^T, by Gauss elimination with row
    // pivoting: a[r][s] = basis[s].c[r], augmented with q
    std::array<std::array<Rat, 5>, 4> a{};
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) a[size_t(r)][size_t(s)] = basis[size_t(s)].c[size_t(r)];
        a[size_t(r)][4] = q.c[size_t(r)];
    }
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (a[size_t(r)][size_t(c)] != 0) { piv = r; break; }
        ensure(piv >= 0, "coords_in_basis: basis not full rank");
        std::swap(a[size_t(piv)], a[size_t(c)]);
        Rat f = a[size_t(c)][size_t(c)];
        for (int s = 0; s < 5; ++s) a[size_t(c)][size_t(s)] /= f;
        for (int r = 0; r < 4; ++r) {
            if (r == c) continue;
            Rat g = a[size_t(r)][size_t(c)];
            if (g == 0) continue;
            for (int s = 0; s < 5; ++s) a[size_t(r)][size_t(s)] -= g * a[size_t(c)][size_t(s)];
        }
    }
    std::array<Rat, 4> x{};
    for (int c = 0; c < 4; ++c) x[size_t(c)] = a[size_t(c)][4];
    return x;
}

QuadRat qr_add(const QuadRat& a, const QuadRat& b) { return QuadRat{a.x + b.x, a.y + b.y}; }
QuadRat qr_mul(const QuadRat& a, const QuadRat& b, const Int& N) {
    return QuadRat{a.x * b.x + Rat(N) * a.y * b.y, a.x * b.y + a.y * b.x};
}
QuadRat qr_neg(const QuadRat& a) { return QuadRat{-a.x, -a.y}; }
QuadRat qr_inv(const QuadRat& a, const Int& N) {
    Rat nm = a.x * a.x - Rat(N) * a.y * a.y;
    require(nm != 0, "QuadRat: inverse of zero");
    return QuadRat{a.x / nm, -a.y / nm};
}

}  // namespace

SiegelPoint siegel_point(const QuatLattice& ideal, const Quat& u, const std::array<Quat, 4>& basis) {
    const Int& N = ideal.algebra_N();
    require(u.norm() == -N && u.trace() == 0, "siegel_point: u must be a trace-0 norm-|N| element");
    QuatLattice lo = left_order(ideal);
    require(lo.contains(u), "siegel_point: u not in the left order");
    Rat nrm = ideal.norm();
    Quat uinv = u.inverse();
    SiegelPoint sp{IntMatrix(4, 4), RatMat4{}, RatMat4{}, N};
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            Rat p = (basis[size_t(r)] * basis[size_t(s)].conj()).trace() / nrm;
            Rat jv = (uinv * basis[size_t(r)] * basis[size_t(s)].conj()).trace() / nrm;
            sp.p_scaled[size_t(r)][size_t(s)] = p;
            require(den(jv) == 1, "siegel_point: J entry not integral");
            sp.j.at(r, s) = num(jv);
        }
        // row r of U_s: coordinates of u * w_r in the basis
        auto cu = coords_in_basis(u * basis[size_t(r)], basis);
        for (int s = 0; s < 4; ++s) sp.u_scaled[size_t(r)][size_t(s)] = cu[size_t(s)];
    }
    sp.validate();
    return sp;
}

std::array<std::array<QuadRat, 2>, 2> reconstruct_period_matrix(const SiegelConstruction& sc,
                                                                const Int& N) {
    // complex structure from u = -j; eigen-coordinates over K = Q(sqrt(N)):
    // rows c with c * U_s = s * c, s = +-sqrt(N); the symplectic split of the
    // construction basis is (w1, w2 | w3, w4)
    Quat u = -Quat::unit_j(N);
    SiegelPoint sp = siegel_point(sc.lattice, u, sc.basis);
    // expected symplectic shape of J: [[0, I],[-I, 0]] or its negative
    bool std_shape = true, neg_shape = true;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            int want = (s == r + 2) ? 1 : (s == r - 2 ? -1 : 0);
            if (sp.j.at(r, s) != want) std_shape = false;
            if (sp.j.at(r, s) != -want) neg_shape = false;
        }
    require(std_shape || neg_shape, "reconstruct_period_matrix: basis not symplectic");

    for (int attempt = 0; attempt < 2; ++attempt) {
        QuadRat s{Rat(0), Rat(attempt == 0 ? 1 : -1)};  // +-sqrt(N)
        // kernel of (U_s - s I) acting on row vectors: solve c (U_s - sI) = 0,
        // i.e. (U_s^T - s I) c^T = 0 over K; find 2-dim kernel
        std::array<std::array<QuadRat, 4>, 4> m{};
        for (int r = 0; r < 4; ++r)
            for (int cidx = 0; cidx < 4; ++cidx) {
                m[size_t(r)][size_t(cidx)] = QuadRat{sp.u_scaled[size_t(cidx)][size_t(r)], Rat(0)};
                if (r == cidx) m[size_t(r)][size_t(cidx)] = qr_add(m[size_t(r)][size_t(cidx)], qr_neg(s));
            }
        // Gauss over K: reduce, then read a kernel basis
        std::array<int, 4> pivot_col{-1, -1, -1, -1};
        int rank = 0;
        for (int col = 0; col < 4 && rank < 4; ++col) {
            int piv = -1;
            for (int r = rank; r < 4; ++r)
                if (!(m[size_t(r)][size_t(col)].x == 0 && m[size_t(r)][size_t(col)].y == 0)) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(m[size_t(piv)], m[size_t(rank)]);
            QuadRat inv = qr_inv(m[size_t(rank)][size_t(col)], N);
            for (int cc = 0; cc < 4; ++cc) m[size_t(rank)][size_t(cc)] = qr_mul(m[size_t(rank)][size_t(cc)], inv, N);
            for (int r = 0; r < 4; ++r) {
                if (r == rank) continue;
                QuadRat f = m[size_t(r)][size_t(col)];
                if (f.x == 0 && f.y == 0) continue;
                for (int cc = 0; cc < 4; ++cc)
                    m[size_t(r)][size_t(cc)] = qr_add(m[size_t(r)][size_t(cc)], qr_neg(qr_mul(f, m[size_t(rank)][size_t(cc)], N)));
            }
            pivot_col[size_t(rank)] = col;
            ++rank;
        }
        if (rank != 2) continue;
        // kernel basis: free columns get unit value
        std::array<std::array<QuadRat, 4>, 2> kernel{};
        int kn = 0;
        std::array<bool, 4> is_pivot{false, false, false, false};
        for (int r = 0; r < rank; ++r) is_pivot[size_t(pivot_col[size_t(r)])] = true;
        for (int col = 0; col < 4; ++col) {
            if (is_pivot[size_t(col)]) continue;
            std::array<QuadRat, 4> vec{};
            vec[size_t(col)] = QuadRat{Rat(1), Rat(0)};
            for (int r = 0; r < rank; ++r)
                vec[size_t(pivot_col[size_t(r)])] = qr_neg(m[size_t(r)][size_t(col)]);
            kernel[size_t(kn++)] = vec;
            if (kn == 2) break;
        }
        // kernel rows span {c : c U_s = s c}. Columns of the 4x2 transpose,
        // split top/bottom: omega = -B A^{-1} with A = top 2x2, B = bottom
        std::array<std::array<QuadRat, 2>, 2> A{}, B{};
        for (int r = 0; r < 2; ++r)
            for (int cidx = 0; cidx < 2; ++cidx) {
                A[size_t(r)][size_t(cidx)] = kernel[size_t(cidx)][size_t(r)];
                B[size_t(r)][size_t(cidx)] = kernel[size_t(cidx)][size_t(r + 2)];
            }
        // det A
        QuadRat detA = qr_add(qr_mul(A[0][0], A[1][1], N), qr_neg(qr_mul(A[0][1], A[1][0], N)));
        if (detA.x == 0 && detA.y == 0) continue;
        QuadRat dinv = qr_inv(detA, N);
        std::array<std::array<QuadRat, 2>, 2> Ainv{};
        Ainv[0][0] = qr_mul(A[1][1], dinv, N);
        Ainv[0][1] = qr_mul(qr_neg(A[0][1]), dinv, N);
        Ainv[1][0] = qr_mul(qr_neg(A[1][0]), dinv, N);
        Ainv[1][1] = qr_mul(A[0][0], dinv, N);
        std::array<std::array<QuadRat, 2>, 2> omega{};
        for (int r = 0; r < 2; ++r)
            for (int cidx = 0; cidx < 2; ++cidx) {
                QuadRat acc{Rat(0), Rat(0)};
                for (int k = 0; k < 2; ++k)
                    acc = qr_add(acc, qr_mul(B[size_t(r)][size_t(k)], Ainv[size_t(k)][size_t(cidx)], N));
                omega[size_t(r)][size_t(cidx)] = qr_neg(acc);
            }
        // upper-half-space test: symmetric with positive definite imaginary part
        if (!(omega[0][1] == omega[1][0])) continue;
        Rat y00 = omega[0][0].y, y11 = omega[1][1].y, y01 = omega[0][1].y;
        if (!(y00 > 0 && y00 * y11 - y01 * y01 > 0)) continue;
        return omega;
    }
    throw std::logic_error("reconstruct_period_matrix: no eigen-sign yields a Siegel point");
}

std::array<std::array<QuadRat, 2>, 2> expected_period_matrix(const CMPoint& z, const QuadForm& form) {
    // ((b1 + sqrt(N))/(2 a1 |D|)) * [[2a, b],[b, 2c]]
    Rat den = Rat(2 * z.a1 * z.absD);
    auto entry = [&](const Int& q) { return QuadRat{Rat(z.b1 * q) / den, Rat(q) / den}; };
    std::array<std::array<QuadRat, 2>, 2> omega{};
    omega[0][0] = entry(2 * form.a);
    omega[0][1] = entry(form.b);
    omega[1][0] = entry(form.b);
    omega[1][1] = entry(2 * form.c);
    return omega;
}

std::vector<std::vector<Rat>> brandt_matrix(const Int& m, const ClassSet& cs) {
    require(m >= 1, "brandt_matrix: m must be positive");
    int h = cs.size();
    std::vector<std::vector<Rat>> b(size_t(h), std::vector<Rat>(size_t(h), Rat(0)));
    for (int jdx = 0; jdx < h; ++jdx) {
        QuatLattice jinv = ideal_inverse(cs.reps[size_t(jdx)]);
        for (int idx = 0; idx < h; ++idx) {
            QuatLattice ji = lattice_mul(jinv, cs.reps[size_t(idx)]);
            Rat rel = ji.norm() * Rat(m);
            auto sv = short_vectors(ji.norm_gram(), 2 * rel);
            Int count(0);
            for (const auto& v : sv)
                if (v.value == 2 * rel) ++count;
            b[size_t(idx)][size_t(jdx)] = Rat(count) / Rat(cs.unit_counts[size_t(jdx)]);
        }
    }
    return b;
}

}  // namespace hecke
