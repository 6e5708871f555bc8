#ifndef HECKECV_ARITH_HPP
#define HECKECV_ARITH_HPP

// Exact integer/rational substrate: Kronecker symbol, Hermite normal form,
// positive-definite lattice enumeration. Everything here is pure and exact.

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline void require(bool cond, const char* what) {
    if (!cond) throw std::domain_error(what);
}
inline void ensure(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

inline Int num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

// Kronecker symbol (a|n). Callers in this project only need odd positive n,
// but GMP's definition is total.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

// r with r*r == n, if n is a perfect square.
std::optional<Int> is_square(const Int& n);

// floor(sqrt(n)), n >= 0
Int isqrt(const Int& n);

// Row-major dense integer matrix, dimensions small (<= 8 in practice).
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Int(0)) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    Int det() const;

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMatrix h;  // = u * input, upper triangular, positive pivots, reduced above
    IntMatrix u;  // unimodular
};

// HNF of a square matrix of full rank. Throws on rank-deficient input.
HnfResult hnf(const IntMatrix& m);

// Row-style HNF of a (possibly tall) generator stack: returns the nonzero
// reduced rows. Used for lattice sums/products where rank <= cols.
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows);

// Symmetric rational matrix, rank r <= 4 in this project.
class GramMatrix {
  public:
    explicit GramMatrix(int n) : n_(n), e_(size_t(n) * n, Rat(0)) {}
    int dim() const { return n_; }
    Rat& at(int r, int c) { return e_[size_t(r) * n_ + c]; }
    const Rat& at(int r, int c) const { return e_[size_t(r) * n_ + c]; }
    bool is_symmetric() const;
    // Leading-principal-minor test, exact.
    bool is_positive_definite() const;

  private:
    int n_;
    std::vector<Rat> e_;
};

// All integer vectors v != 0 with v^T G v <= bound, v and -v listed
// separately, sorted lexicographically. Exact Cholesky-with-pruning
// enumeration; every emitted vector passes the exact form-value check.
struct ShortVec {
    std::vector<Int> v;
    Rat value;  // v^T G v
};
std::vector<ShortVec> short_vectors(const GramMatrix& g, const Rat& bound);

// gcd helpers
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// floor/ceil division with sign of remainder normalized
Int fdiv(const Int& a, const Int& b);   // floor(a/b)
Int cdiv(const Int& a, const Int& b);   // ceil(a/b)
Int mod_positive(const Int& a, const Int& b);  // a mod b in [0, b)

// modular inverse, m > 0, gcd(a, m) = 1
Int inv_mod(const Int& a, const Int& m);

bool is_prime(const Int& n);

}  // namespace hecke

#endif
