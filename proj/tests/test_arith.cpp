#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arith.hpp"

#include <random>

using namespace hecke;

namespace {

// independent box-enumeration oracle: all v != 0 with v^T G v <= bound, box
// radius from the diagonal of the rational inverse
std::vector<std::vector<Int>> brute_short_vectors(const GramMatrix& g, const Rat& bound) {
    int n = g.dim();
    // rational inverse by Gauss-Jordan
    std::vector<std::vector<Rat>> a(size_t(n), std::vector<Rat>(size_t(2 * n), Rat(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a[size_t(r)][size_t(c)] = g.at(r, c);
        a[size_t(r)][size_t(n + r)] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[size_t(r)][size_t(c)] != 0) { piv = r; break; }
        REQUIRE(piv >= 0);
        std::swap(a[size_t(piv)], a[size_t(c)]);
        Rat f = a[size_t(c)][size_t(c)];
        for (auto& x : a[size_t(c)]) x /= f;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            Rat f2 = a[size_t(r)][size_t(c)];
            if (f2 == 0) continue;
            for (int s = 0; s < 2 * n; ++s) a[size_t(r)][size_t(s)] -= f2 * a[size_t(c)][size_t(s)];
        }
    }
    std::vector<long> radius(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        Rat r2 = bound * a[size_t(i)][size_t(n + i)];
        long r = 0;
        while (Rat((r + 1)) * (r + 1) <= r2) ++r;
        radius[size_t(i)] = r;
    }
    std::vector<std::vector<Int>> out;
    std::vector<long> v(size_t(n), 0);
    for (int i = 0; i < n; ++i) v[size_t(i)] = -radius[size_t(i)];
    while (true) {
        bool nonzero = false;
        for (long x : v)
            if (x != 0) nonzero = true;
        if (nonzero) {
            Rat val(0);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) val += Rat(v[size_t(r)]) * g.at(r, c) * Rat(v[size_t(c)]);
            if (val <= bound) {
                std::vector<Int> vi;
                for (long x : v) vi.push_back(Int(x));
                out.push_back(vi);
            }
        }
        int k = 0;
        while (k < n && v[size_t(k)] == radius[size_t(k)]) {
            v[size_t(k)] = -radius[size_t(k)];
            ++k;
        }
        if (k == n) break;
        v[size_t(k)] += 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("kronecker basics") {
    CHECK(kronecker(1, 7) == 1);
    CHECK(kronecker(3, 5) == -1);   // 3^2 = 4 mod 5, Euler criterion
    CHECK(kronecker(-7, 11) == 1);  // -7 = 4 = 2^2 mod 11
    CHECK(kronecker(0, 9) == 0);
    CHECK(kronecker(22, 11) == 0);
}

TEST_CASE("kronecker multiplicative in the top argument") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> dist(-500, 500);
    std::uniform_int_distribution<long> mods(0, 200);
    for (int t = 0; t < 1000; ++t) {
        long n = 2 * mods(rng) + 1;
        if (n < 1) n = 1;
        long a = dist(rng), b = dist(rng);
        CHECK(kronecker(Int(a) * Int(b), Int(n)) == kronecker(Int(a), Int(n)) * kronecker(Int(b), Int(n)));
    }
}

TEST_CASE("is_square") {
    CHECK(*is_square(Int(81)) == 9);
    CHECK(!is_square(Int(12)).has_value());
    CHECK(!is_square(Int(23 - 11 * 1 * 1)).has_value());
    CHECK(*is_square(Int(0)) == 0);
    CHECK(isqrt(Int(24)) == 4);
}

TEST_CASE("hnf identity and small example") {
    auto id = IntMatrix::identity(3);
    auto r = hnf(id);
    CHECK(r.h == id);

    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 0;
    m.at(1, 0) = 1; m.at(1, 1) = 1;
    auto r2 = hnf(m);
    // hand-reduced: the lattice {(a,b): a+b even} has basis [[1,1],[0,2]]
    CHECK(r2.h.at(0, 0) == 1);
    CHECK(r2.h.at(0, 1) == 1);
    CHECK(r2.h.at(1, 0) == 0);
    CHECK(r2.h.at(1, 1) == 2);
    CHECK((r2.u * m) == r2.h);
}

TEST_CASE("hnf invariance under unimodular left factor and idempotence") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> small(-4, 4);
    IntMatrix base(4, 4);
    int vals[4][4] = {{2, 1, 0, 3}, {0, 4, 1, 1}, {0, 0, 3, 2}, {1, 1, 1, 5}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) base.at(i, j) = vals[i][j];
    auto h0 = hnf(base);
    for (int trial = 0; trial < 20; ++trial) {
        // random unimodular: product of elementary row operations
        IntMatrix u = IntMatrix::identity(4);
        for (int step = 0; step < 8; ++step) {
            IntMatrix e = IntMatrix::identity(4);
            int r = int(rng() % 4), c = int(rng() % 4);
            if (r != c) e.at(r, c) = small(rng);
            u = u * e;
        }
        auto h1 = hnf(u * base);
        CHECK(h1.h == h0.h);
    }
    auto again = hnf(h0.h);
    CHECK(again.h == h0.h);
}

TEST_CASE("hnf rejects rank-deficient input") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 2; m.at(1, 1) = 4;
    CHECK_THROWS(hnf(m));
}

TEST_CASE("short_vectors on the 2x2 identity") {
    GramMatrix g(2);
    g.at(0, 0) = 1; g.at(1, 1) = 1;
    auto v1 = short_vectors(g, Rat(1));
    CHECK(v1.size() == 4);
    auto v2 = short_vectors(g, Rat(2));
    CHECK(v2.size() == 8);
}

TEST_CASE("short_vectors matches brute force on random PD Grams") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int dim : {3, 4}) {
        for (int trial = 0; trial < 12; ++trial) {
            // G = A^T A + I is positive definite with small entries
            std::vector<std::vector<int>> A(size_t(dim), std::vector<int>(size_t(dim), 0));
            for (auto& row : A)
                for (auto& x : row) x = entry(rng);
            GramMatrix g(dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    long s = (i == j) ? 1 : 0;
                    for (int k = 0; k < dim; ++k) s += long(A[size_t(k)][size_t(i)]) * A[size_t(k)][size_t(j)];
                    g.at(i, j) = s;
                }
            REQUIRE(g.is_positive_definite());
            Rat bound(6 + int(rng() % 10));
            auto fast = short_vectors(g, bound);
            auto slow = brute_short_vectors(g, bound);
            REQUIRE(fast.size() == slow.size());
            for (size_t idx = 0; idx < fast.size(); ++idx) CHECK(fast[idx].v == slow[idx]);
            // closed under negation
            for (const auto& sv : fast) {
                std::vector<Int> neg;
                for (const auto& x : sv.v) neg.push_back(-x);
                bool found = false;
                for (const auto& sv2 : fast)
                    if (sv2.v == neg) { found = true; break; }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("short_vectors rejects indefinite matrices") {
    GramMatrix g(2);
    g.at(0, 0) = 1; g.at(1, 1) = -1;
    CHECK_THROWS(short_vectors(g, Rat(4)));
}
