#pragma once
// Exact integer/rational linear algebra: normal forms, kernels, lattice
// membership, quotient invariants. Everything is arbitrary precision.
#include <gmpxx.h>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grasstoric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat from_rows(std::vector<IntVec> rs) {
        IntMat m(rs.size(), rs.empty() ? 0 : rs[0].size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            assert(rs[i].size() == m.cols);
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = std::move(rs[i][j]);
        }
        return m;
    }
    Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    IntVec row(std::size_t i) const { return IntVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row(i) -= q * row(j)
    void addmul_row(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) -= q * (*this)(j, c);
    }
    void addmul_col(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) -= q * (*this)(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
    }
};

inline IntMat mul(const IntMat& x, const IntMat& y) {
    assert(x.cols == y.rows);
    IntMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& v = x(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

inline IntVec mul_vec(const IntVec& x, const IntMat& m) {
    assert(x.size() == m.rows);
    IntVec z(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j) z[j] += x[i] * m(i, j);
    }
    return z;
}

inline Int dot(const IntVec& x, const IntVec& y) {
    assert(x.size() == y.size());
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// floor division quotient, consistent with python semantics
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct HnfResult {
    IntMat h;  // row-style Hermite normal form, same shape as input
    IntMat u;  // unimodular, u * m = h
    std::size_t rank = 0;
};

// Row-style HNF: pivots positive, entries above a pivot reduced into [0, pivot).
inline HnfResult hermite_normal_form(const IntMat& m) {
    HnfResult res{m, IntMat::identity(m.rows), 0};
    IntMat& h = res.h;
    IntMat& u = res.u;
    std::size_t piv = 0;
    for (std::size_t c = 0; c < m.cols && piv < m.rows; ++c) {
        // gcd out the column below piv
        while (true) {
            std::size_t best = m.rows;
            for (std::size_t i = piv; i < m.rows; ++i)
                if (h(i, c) != 0 && (best == m.rows || cmp(abs(h(i, c)), abs(h(best, c))) < 0)) best = i;
            if (best == m.rows) break;
            h.swap_rows(piv, best);
            u.swap_rows(piv, best);
            bool clean = true;
            for (std::size_t i = piv + 1; i < m.rows; ++i) {
                if (h(i, c) == 0) continue;
                Int q = fdiv(h(i, c), h(piv, c));
                h.addmul_row(i, piv, q);
                u.addmul_row(i, piv, q);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(piv, c) == 0) continue;
        if (h(piv, c) < 0) { h.negate_row(piv); u.negate_row(piv); }
        for (std::size_t i = 0; i < piv; ++i) {
            Int q = fdiv(h(i, c), h(piv, c));
            if (q != 0) { h.addmul_row(i, piv, q); u.addmul_row(i, piv, q); }
        }
        ++piv;
    }
    res.rank = piv;
    return res;
}

// Nonzero rows of the HNF; canonical form for a lattice given by generators.
inline std::vector<IntVec> hnf_basis(const IntMat& m) {
    HnfResult r = hermite_normal_form(m);
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.h.row(i));
    return out;
}

struct SnfResult {
    IntMat d;  // diagonal, divisibility chain
    IntMat u;  // unimodular
    IntMat v;  // unimodular, u * m * v = d
};

inline SnfResult smith_normal_form(const IntMat& m) {
    SnfResult res{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;
    std::size_t t = 0;
    const std::size_t lim = std::min(m.rows, m.cols);
    while (t < lim) {
        std::size_t pi = m.rows, pj = m.cols;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j)
                if (d(i, j) != 0 && (pi == m.rows || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0)) { pi = i; pj = j; }
        if (pi == m.rows) break;
        d.swap_rows(t, pi); u.swap_rows(t, pi);
        d.swap_cols(t, pj); v.swap_cols(t, pj);
        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = fdiv(d(i, t), d(t, t));
                d.addmul_row(i, t, q);
                u.addmul_row(i, t, q);
                if (d(i, t) != 0) { d.swap_rows(t, i); u.swap_rows(t, i); done = false; }
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = fdiv(d(t, j), d(t, t));
                d.addmul_col(j, t, q);
                v.addmul_col(j, t, q);
                if (d(t, j) != 0) { d.swap_cols(t, j); v.swap_cols(t, j); done = false; }
            }
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < m.rows && divides; ++i)
            for (std::size_t j = t + 1; j < m.cols && divides; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    // fold column j into column t and retry the pivot
                    d.addmul_col(t, j, Int(-1));
                    v.addmul_col(t, j, Int(-1));
                    divides = false;
                }
        if (!divides) continue;
        if (d(t, t) < 0) { d.negate_row(t); u.negate_row(t); }
        ++t;
    }
    return res;
}

inline std::vector<Int> snf_diagonal(const IntMat& m) {
    SnfResult r = smith_normal_form(m);
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(m.rows, m.cols); ++i) out.push_back(r.d(i, i));
    return out;
}

inline std::size_t rank_of(const IntMat& m) { return hermite_normal_form(m).rank; }

// Basis of {x in Z^rows : x * m = 0}. Saturated by construction: the zero rows
// of the HNF correspond to unimodular-basis rows, hence a direct summand.
inline IntMat integer_kernel(const IntMat& m) {
    HnfResult r = hermite_normal_form(m);
    IntMat out(m.rows - r.rank, m.rows);
    for (std::size_t i = r.rank; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j) out(i - r.rank, j) = r.u(i, j);
    return out;
}

struct LatticeQuotient {
    std::size_t ambient_rank = 0;
    IntMat sublattice_basis;          // HNF rows
    std::vector<Int> invariant_factors;  // nontrivial factors, divisibility chain
    IntMat projection;                // x -> x * projection, reduce entry i mod factor i
    std::vector<Int> all_factors;     // one per ambient coordinate, including 1s

    Int order() const {
        Int o = 1;
        for (const Int& f : invariant_factors) o *= f;
        return o;
    }
    // canonical representative of x in the quotient
    IntVec reduce(const IntVec& x) const {
        IntVec y = mul_vec(x, projection);
        for (std::size_t i = 0; i < y.size(); ++i) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), all_factors[i].get_mpz_t());
            y[i] = r;
        }
        return y;
    }
};

inline LatticeQuotient quotient_invariants(std::size_t ambient_rank, const IntMat& gens) {
    assert(gens.cols == ambient_rank);
    SnfResult s = smith_normal_form(gens);
    LatticeQuotient q;
    q.ambient_rank = ambient_rank;
    q.sublattice_basis = IntMat::from_rows(hnf_basis(gens));
    if (q.sublattice_basis.rows < ambient_rank)
        throw std::runtime_error("infinite quotient: sublattice generators not full rank");
    // rows of gens span the same lattice as rows of d * v^{-1}; coords via v
    q.projection = s.v;
    for (std::size_t i = 0; i < ambient_rank; ++i) {
        q.all_factors.push_back(s.d(i, i));
        if (s.d(i, i) != 1) q.invariant_factors.push_back(s.d(i, i));
    }
    return q;
}

// membership of v in the lattice spanned by HNF rows
inline bool in_hnf_lattice(const std::vector<IntVec>& hnf, IntVec v) {
    for (const IntVec& row : hnf) {
        std::size_t j = 0;
        while (j < row.size() && row[j] == 0) ++j;
        if (j == row.size()) continue;
        if (v[j] % row[j] != 0) return false;
        Int q = v[j] / row[j];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Bareiss fraction-free determinant
inline Int det(IntMat m) {
    assert(m.rows == m.cols);
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m(s, k) == 0) ++s;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// Solve x * m = b over Q for square invertible m; returns (numerators, denom).
// Throws if m is singular.
struct RatRowSolve {
    IntVec num;
    Int den;  // positive
};

inline RatRowSolve solve_row(const IntMat& m, const IntVec& b) {
    assert(m.rows == m.cols && b.size() == m.cols);
    const std::size_t n = m.rows;
    // Gaussian elimination over mpq on the transposed system m^T x^T = b^T
    std::vector<RatVec> aug(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(m(j, i));
        aug[i][n] = Rat(b[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("solve_row: singular matrix");
        std::swap(aug[c], aug[p]);
        Rat inv = aug[c][c];
        for (std::size_t j = c; j <= n; ++j) aug[c][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    Int den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i][n].canonicalize();
        den = den / gcd(den, Int(aug[i][n].get_den())) * Int(aug[i][n].get_den());
    }
    RatRowSolve out{IntVec(n), den};
    for (std::size_t i = 0; i < n; ++i) out.num[i] = Int(aug[i][n].get_num()) * (den / Int(aug[i][n].get_den()));
    return out;
}

// Inverse of a unimodular integer matrix (|det| = 1); exact integer result.
inline IntMat unimodular_inverse(const IntMat& m) {
    assert(m.rows == m.cols);
    HnfResult r = hermite_normal_form(m);
    if (r.rank != m.rows) throw std::runtime_error("unimodular_inverse: singular");
    // h is upper triangular with unit pivots iff m unimodular; then u = m^{-1} after
    // clearing h to the identity (already reduced: pivots 1 force h = I).
    for (std::size_t i = 0; i < m.rows; ++i)
        if (r.h(i, i) != 1) throw std::runtime_error("unimodular_inverse: matrix not unimodular");
    return r.u;
}

inline IntVec content_normalized(IntVec v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

}  // namespace grasstoric
