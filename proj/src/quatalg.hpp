#ifndef HECKECV_QUATALG_HPP
#define HECKECV_QUATALG_HPP

// Exact arithmetic in B = (-1, N): i^2 = -1, j^2 = N, k = ij. Lattices are
// rank-4 Z-modules stored in a canonical HNF-over-denominator form, so
// lattice equality is structural equality. Everything here is exact.

#include "arith.hpp"
#include "quadfield.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

struct Quat {
    std::array<Rat, 4> c;  // t + x i + y j + z k
    Int N;

    Quat(Rat t, Rat x, Rat y, Rat z, Int n) : c{std::move(t), std::move(x), std::move(y), std::move(z)}, N(std::move(n)) {}
    static Quat integer(const Int& t, const Int& n) { return Quat(Rat(t), Rat(0), Rat(0), Rat(0), n); }
    static Quat zero(const Int& n) { return integer(Int(0), n); }
    static Quat unit_i(const Int& n) { return Quat(Rat(0), Rat(1), Rat(0), Rat(0), n); }
    static Quat unit_j(const Int& n) { return Quat(Rat(0), Rat(0), Rat(1), Rat(0), n); }

    Quat operator+(const Quat& o) const;
    Quat operator-(const Quat& o) const;
    Quat operator*(const Quat& o) const;
    Quat operator-() const { return Quat(-c[0], -c[1], -c[2], -c[3], N); }
    Quat scale(const Rat& s) const { return Quat(c[0] * s, c[1] * s, c[2] * s, c[3] * s, N); }
    bool operator==(const Quat& o) const { return N == o.N && c == o.c; }

    Quat conj() const { return Quat(c[0], -c[1], -c[2], -c[3], N); }
    Rat norm() const { return c[0] * c[0] + c[1] * c[1] - Rat(N) * (c[2] * c[2] + c[3] * c[3]); }
    Rat trace() const { return 2 * c[0]; }
    Quat inverse() const;
    std::string str() const;
};

// rank-4 lattice in B, canonical form: integer HNF basis over a positive
// denominator with joint content removed
class QuatLattice {
  public:
    QuatLattice(const std::vector<Quat>& gens, const Int& N);

    const Int& algebra_N() const { return N_; }
    const IntMatrix& basis_matrix() const { return m_; }
    const Int& denominator() const { return den_; }
    std::array<Quat, 4> basis() const;

    bool operator==(const QuatLattice& o) const {
        return N_ == o.N_ && den_ == o.den_ && m_ == o.m_;
    }

    bool contains(const Quat& q) const;
    QuatLattice scaled(const Rat& s) const;
    // integer basis with content 1 (same class, convenient normal form)
    QuatLattice primitive() const;

    // Gram of the norm form: G[r][s] = Tr(w_r conj(w_s)); v^T G v = 2 N(v)
    GramMatrix norm_gram() const;
    Rat norm() const;       // positive generator of the norm module
    Rat discriminant() const;  // det of the trace bilinear form matrix
    bool is_maximal_ideal_pair() const;  // disc == N^2 norm^4

    std::string str() const;

  private:
    Int N_;
    IntMatrix m_;
    Int den_;
};

QuatLattice lattice_mul(const QuatLattice& a, const QuatLattice& b);
QuatLattice lattice_conj(const QuatLattice& a);
QuatLattice lattice_add(const QuatLattice& a, const QuatLattice& b);
QuatLattice lattice_intersect(const QuatLattice& a, const QuatLattice& b);
QuatLattice lattice_right_scale(const QuatLattice& a, const Quat& q);  // a * q
QuatLattice lattice_left_scale(const Quat& q, const QuatLattice& a);   // q * a

QuatLattice left_order(const QuatLattice& l);
QuatLattice right_order(const QuatLattice& l);
// I^{ -1 } = conj(I)/Norm(I), valid when the left order is maximal
QuatLattice ideal_inverse(const QuatLattice& l);
// the different N * O^#, the bilateral ideal of norm |N| of a maximal order
QuatLattice bilateral_prime(const QuatLattice& order);

// number of q in O with Norm(q) = 1 (counts +-1)
Int unit_count(const QuatLattice& order);

// trace-0 norm-|N| elements of the order (raw count; the weighted aggregate
// over types is checked in tests)
Int embedding_count(const QuatLattice& order);

// <(1+j)/2, (i+k)/2, j, k>, the reference maximal order
QuatLattice standard_maximal_order(const Int& N);

// alpha with I = J * alpha, when the ideals are right-equivalent
std::optional<Quat> ideal_equiv(const QuatLattice& i, const QuatLattice& j);

// gamma with O_from = gamma O_to gamma^(-1), via the connecting ideal or its
// bilateral twist; nullopt when the orders have different types
std::optional<Quat> conjugating_element(const QuatLattice& o_from, const QuatLattice& o_to);

struct ClassSet {
    QuatLattice base_order;
    std::vector<QuatLattice> reps;      // reps[0] = base order
    std::vector<Int> unit_counts;       // of the right orders
    std::vector<int> type_index;        // class -> type id
    std::vector<std::vector<int>> type_groups;
    std::vector<std::string> labels;    // "O", "I1", ...

    int size() const { return int(reps.size()); }
    int type_number() const { return int(type_groups.size()); }
    // index of the class of a left base_order-ideal
    int classify(const QuatLattice& ideal) const;
};

// complete left-ideal class set by p-neighbor search, certified by the exact
// Eichler mass identity sum 1/w_i = (|N|-1)/24
ClassSet class_set(const QuatLattice& maximal_order);

// x^2 + |N| y^2 = |D| z^2, primitive, minimal (z, y, x) lexicographically;
// v = (x i + y k)/z then has Norm v = |D|, Tr v = 0, Tr(j conj(v)) = 0
struct EmbeddingTriple {
    Int x, y, z;
    Quat v(const Int& N) const {
        return Quat(Rat(0), Rat(x) / Rat(z), Rat(0), Rat(y) / Rat(z), N);
    }
};
EmbeddingTriple solve_embedding(const Int& N, const Int& absD);

// the lattice I_z attached to the Siegel point z_{A Dbar} Q_B, together with
// its construction basis (symplectic for the associated J)
struct SiegelConstruction {
    std::array<Quat, 4> basis;
    QuatLattice lattice;
};
// form must satisfy b = 1 mod 4; z is the exact CM point datum of A*Dbar
SiegelConstruction siegel_ideal(const CMPoint& z, const QuadForm& form, const Quat& v);

using RatMat4 = std::array<std::array<Rat, 4>, 4>;

// Siegel point data on a chosen basis of an ideal I for the complex
// structure of u (u^2 = N, Tr u = 0, u in the left order):
//   P_s[r][s] = Tr(w_r conj(w_s)) / Norm(I)            ( = sqrt(|N|) P )
//   J[r][s]   = Tr(u^(-1) w_r conj(w_s)) / Norm(I)     (integral, det 1)
//   U_s       = matrix of left multiplication by u      ( = sqrt(|N|) U )
// satisfying U_s J = P_s, J U_s^T = -P_s, U_s^2 = N.
struct SiegelPoint {
    IntMatrix j;
    RatMat4 p_scaled;
    RatMat4 u_scaled;
    Int N;
    void validate() const;  // throws when any defining relation fails
};

SiegelPoint siegel_point(const QuatLattice& ideal, const Quat& u, const std::array<Quat, 4>& basis);

// x + y sqrt(N), field arithmetic for the period-matrix reconstruction
struct QuadRat {
    Rat x, y;
    bool operator==(const QuadRat& o) const = default;
};

// 2x2 period matrix over K recovered from the Siegel point of the
// construction basis; equals z * Q_B exactly (the reconstruction identity)
std::array<std::array<QuadRat, 2>, 2> reconstruct_period_matrix(const SiegelConstruction& sc,
                                                                const Int& N);

// expected z * Q_B for comparison
std::array<std::array<QuadRat, 2>, 2> expected_period_matrix(const CMPoint& z, const QuadForm& form);

// Brandt matrix B(m): entry (i,j) = #{alpha in I_j^(-1) I_i with relative
// norm m} / w_j
std::vector<std::vector<Rat>> brandt_matrix(const Int& m, const ClassSet& cs);

}  // namespace hecke

#endif
