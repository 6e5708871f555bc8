#include "arith.hpp"

#include <algorithm>
#include <cmath>

namespace hecke {

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.backend().data(), n.backend().data());
}

int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

std::optional<Int> is_square(const Int& n) {
    require(n >= 0, "is_square: negative input");
    if (mpz_perfect_square_p(n.backend().data()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.backend().data(), n.backend().data());
    return r;
}

Int isqrt(const Int& n) {
    require(n >= 0, "isqrt: negative input");
    Int r;
    mpz_sqrt(r.backend().data(), n.backend().data());
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.backend().data(), a.backend().data(), b.backend().data());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.backend().data(), a.backend().data(), b.backend().data());
    return r;
}

Int fdiv(const Int& a, const Int& b) {
    require(b != 0, "fdiv: zero divisor");
    Int q;
    mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Int cdiv(const Int& a, const Int& b) {
    require(b != 0, "cdiv: zero divisor");
    Int q;
    mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Int mod_positive(const Int& a, const Int& b) {
    require(b > 0, "mod_positive: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.backend().data(), a.backend().data(), b.backend().data());
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    require(m > 0, "inv_mod: modulus must be positive");
    Int r;
    int ok = mpz_invert(r.backend().data(), a.backend().data(), m.backend().data());
    require(ok != 0, "inv_mod: not invertible");
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 40) != 0;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, "IntMatrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Int IntMatrix::det() const {
    require(rows_ == cols_, "det: not square");
    // fraction-free Gaussian elimination (Bareiss)
    int n = rows_;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = at(i, j);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

namespace {

// Shared HNF kernel on a row stack; if u != nullptr it receives the same row
// operations starting from the identity (only valid when no rows are dropped).
int hnf_kernel(std::vector<std::vector<Int>>& mat, std::vector<std::vector<Int>>* u) {
    if (mat.empty()) return 0;
    const int ncols = int(mat[0].size());
    const int nrows = int(mat.size());
    auto rowsub = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < ncols; ++j) mat[dst][j] -= q * mat[src][j];
        if (u)
            for (int j = 0; j < nrows; ++j) (*u)[dst][j] -= q * (*u)[src][j];
    };
    auto rowswap = [&](int a, int b) {
        std::swap(mat[a], mat[b]);
        if (u) std::swap((*u)[a], (*u)[b]);
    };
    auto rowneg = [&](int r) {
        for (auto& x : mat[r]) x = -x;
        if (u)
            for (auto& x : (*u)[r]) x = -x;
    };

    int top = 0;
    for (int col = 0; col < ncols && top < nrows; ++col) {
        for (;;) {
            int best = -1;
            for (int i = top; i < nrows; ++i)
                if (mat[i][col] != 0 && (best < 0 || abs(mat[i][col]) < abs(mat[best][col])))
                    best = i;
            if (best < 0) break;
            rowswap(top, best);
            if (mat[top][col] < 0) rowneg(top);
            bool changed = false;
            for (int i = top + 1; i < nrows; ++i) {
                if (mat[i][col] != 0) {
                    rowsub(i, top, fdiv(mat[i][col], mat[top][col]));
                    if (mat[i][col] != 0) changed = true;
                }
            }
            if (!changed) break;
        }
        if (mat[top][col] != 0) {
            for (int i = 0; i < top; ++i) rowsub(i, top, fdiv(mat[i][col], mat[top][col]));
            ++top;
        }
    }
    return top;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    const int n = m.rows();
    require(n == m.cols(), "hnf: expected square matrix");
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    int rank = hnf_kernel(rows, &u);
    require(rank == n, "hnf: rank-deficient input");
    HnfResult res{IntMatrix(n, n), IntMatrix(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            res.h.at(i, j) = rows[i][j];
            res.u.at(i, j) = u[i][j];
        }
    ensure(abs(res.u.det()) == 1, "hnf: transform not unimodular");
    return res;
}

std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Int>& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
    int rank = hnf_kernel(rows, nullptr);
    rows.resize(rank);
    return rows;
}

bool GramMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool GramMatrix::is_positive_definite() const {
    // via the LDL^T pivots
    int n = n_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[k][i] / a[k][k];
            for (int j = i; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

std::vector<ShortVec> short_vectors(const GramMatrix& g, const Rat& bound) {
    require(g.is_symmetric(), "short_vectors: Gram matrix not symmetric");
    const int n = g.dim();
    // rational LDL^T: Q(x) = sum_i d[i] * (x_i + sum_{j>i} l[i][j] x_j)^2
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.at(i, j);
    std::vector<Rat> d(n);
    std::vector<std::vector<Rat>> l(n, std::vector<Rat>(n, Rat(0)));
    for (int k = 0; k < n; ++k) {
        require(a[k][k] > 0, "short_vectors: Gram matrix not positive definite");
        d[k] = a[k][k];
        for (int j = k + 1; j < n; ++j) l[k][j] = a[k][j] / a[k][k];
        for (int i = k + 1; i < n; ++i)
            for (int j = i; j < n; ++j) a[i][j] -= l[k][i] * d[k] * l[k][j];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < i; ++j) a[i][j] = a[j][i];
    }

    std::vector<ShortVec> out;
    if (bound < 0) return out;
    std::vector<Int> x(n, Int(0));
    std::vector<Rat> center(n, Rat(0));   // c_i = sum_{j>i} l[i][j] x_j
    std::vector<Rat> remain(n, Rat(0));   // bound - sum_{k>i} d_k (x_k + c_k)^2

    // descend levels n-1 .. 0; at each level walk the exact integer range
    auto level_ok = [&](int i, const Int& xi) {
        Rat t = Rat(xi) + center[i];
        return d[i] * t * t <= remain[i];
    };

    std::vector<Int> lo(n), hi(n);
    auto prepare_level = [&](int i) {
        // exact integer window for x_i: |x_i + c_i| <= sqrt(remain/d), with
        // sqrt bracketed by integer square roots, then a one-step fix-up
        if (remain[i] < 0) {
            lo[i] = 1;
            hi[i] = 0;
            return;
        }
        Rat r2 = remain[i] / d[i];
        Int s;
        mpz_sqrt(s.backend().data(), Int(num(r2) * den(r2)).backend().data());
        Rat rad_hi = Rat(s + 1) / Rat(den(r2));  // sqrt(r2) < rad_hi
        Int l0 = cdiv(num(Rat(-rad_hi - center[i])), den(Rat(-rad_hi - center[i])));
        Int h0 = fdiv(num(Rat(rad_hi - center[i])), den(Rat(rad_hi - center[i])));
        while (!level_ok(i, l0) && l0 <= h0) ++l0;
        while (!level_ok(i, h0) && h0 >= l0) --h0;
        lo[i] = l0;
        hi[i] = h0;
    };

    // iterative depth-first over levels, highest index outermost
    int i = n - 1;
    remain[n - 1] = bound;
    center[n - 1] = 0;
    prepare_level(i);
    x[i] = lo[i];
    while (true) {
        if (x[i] > hi[i]) {
            ++i;
            if (i >= n) break;
            x[i] += 1;
            continue;
        }
        if (i == 0) {
            bool nonzero = std::any_of(x.begin(), x.end(), [](const Int& v) { return v != 0; });
            if (nonzero) {
                Rat val(0);
                for (int r = 0; r < n; ++r)
                    for (int c2 = 0; c2 < n; ++c2) val += Rat(x[r]) * g.at(r, c2) * Rat(x[c2]);
                ensure(val <= bound, "short_vectors: enumeration emitted out-of-bound vector");
                out.push_back({x, val});
            }
            x[0] += 1;
            continue;
        }
        // descend
        Rat t = Rat(x[i]) + center[i];
        Rat rem_next = remain[i] - d[i] * t * t;
        int j = i - 1;
        remain[j] = rem_next;
        Rat c(0);
        for (int k = j + 1; k < n; ++k) c += l[j][k] * Rat(x[k]);
        center[j] = c;
        prepare_level(j);
        i = j;
        x[i] = lo[i];
    }

    std::sort(out.begin(), out.end(), [](const ShortVec& a2, const ShortVec& b2) {
        return a2.v < b2.v;
    });
    return out;
}

}  // namespace hecke
