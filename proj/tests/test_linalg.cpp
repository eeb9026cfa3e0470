#include <catch2/catch_amalgamated.hpp>

#include <grasstoric/linalg.hpp>

#include <random>

using namespace grasstoric;

namespace {

IntMat rand_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

// random unimodular matrix: product of elementary row operations
IntMat rand_unimodular(std::mt19937& rng, std::size_t n, int ops = 20) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    IntMat u = IntMat::identity(n);
    for (int t = 0; t < ops; ++t) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        u.addmul_row(i, j, Int(coef(rng)));
    }
    return u;
}

}  // namespace

TEST_CASE("hermite normal form basics") {
    SECTION("identity is fixed") {
        IntMat id = IntMat::identity(3);
        HnfResult r = hermite_normal_form(id);
        CHECK(r.h == id);
        CHECK(r.u == id);
        CHECK(r.rank == 3);
    }
    SECTION("rank-deficient 2x2") {
        IntMat m = IntMat::from_rows({{2, 4}, {4, 8}});
        HnfResult r = hermite_normal_form(m);
        CHECK(r.h == IntMat::from_rows({{2, 4}, {0, 0}}));
        CHECK(r.rank == 1);
        CHECK(mul(r.u, m) == r.h);
    }
    SECTION("permutation") {
        IntMat m = IntMat::from_rows({{0, 1}, {1, 0}});
        HnfResult r = hermite_normal_form(m);
        CHECK(r.h == IntMat::identity(2));
        CHECK(abs(det(r.u)) == 1);
    }
}

TEST_CASE("hermite normal form properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMat m = rand_mat(rng, r, c);
        HnfResult res = hermite_normal_form(m);
        CHECK(mul(res.u, m) == res.h);
        CHECK(abs(det(res.u)) == 1);
        // echelon shape: pivot columns strictly increase, pivots positive,
        // entries above pivots reduced
        std::size_t last = 0;
        bool first = true;
        for (std::size_t i = 0; i < res.rank; ++i) {
            std::size_t j = 0;
            while (j < c && res.h(i, j) == 0) ++j;
            REQUIRE(j < c);
            CHECK(res.h(i, j) > 0);
            if (!first) CHECK(j > last);
            for (std::size_t i2 = 0; i2 < i; ++i2) {
                CHECK(res.h(i2, j) >= 0);
                CHECK(res.h(i2, j) < res.h(i, j));
            }
            last = j;
            first = false;
        }
        for (std::size_t i = res.rank; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(res.h(i, j) == 0);
    }
}

TEST_CASE("smith normal form basics") {
    SECTION("diag(2,3) becomes diag(1,6)") {
        IntMat m = IntMat::from_rows({{2, 0}, {0, 3}});
        auto d = snf_diagonal(m);
        CHECK(d == std::vector<Int>{1, 6});
    }
    SECTION("zero matrix") {
        IntMat m(2, 3);
        SnfResult r = smith_normal_form(m);
        CHECK(r.d == m);
    }
    SECTION("[[2,4],[4,8]] becomes diag(2,0)") {
        IntMat m = IntMat::from_rows({{2, 4}, {4, 8}});
        auto d = snf_diagonal(m);
        CHECK(d == std::vector<Int>{2, 0});
    }
}

TEST_CASE("smith normal form properties") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMat m = rand_mat(rng, r, c);
        SnfResult res = smith_normal_form(m);
        CHECK(mul(mul(res.u, m), res.v) == res.d);
        CHECK(abs(det(res.u)) == 1);
        CHECK(abs(det(res.v)) == 1);
        auto diag = snf_diagonal(m);
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i] == 0) CHECK(diag[i + 1] == 0);
            else CHECK(diag[i + 1] % diag[i] == 0);
        }
        // invariant under unimodular multiplication on either side
        IntMat lu = rand_unimodular(rng, r), rv = rand_unimodular(rng, c);
        CHECK(snf_diagonal(mul(lu, mul(m, rv))) == diag);
    }
}

TEST_CASE("integer kernel") {
    SECTION("two equal rows") {
        IntMat m = IntMat::from_rows({{1}, {1}});
        IntMat k = integer_kernel(m);
        REQUIRE(k.rows == 1);
        CHECK(abs(k(0, 0)) == 1);
        CHECK(k(0, 0) + k(0, 1) == 0);
    }
    SECTION("identity has trivial kernel") {
        CHECK(integer_kernel(IntMat::identity(4)).rows == 0);
    }
    SECTION("annihilation and rank-nullity") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            IntMat m = rand_mat(rng, r, c);
            IntMat k = integer_kernel(m);
            CHECK(k.rows == r - rank_of(m));
            for (std::size_t i = 0; i < k.rows; ++i) {
                IntVec prod = mul_vec(k.row(i), m);
                for (const Int& x : prod) CHECK(x == 0);
            }
            // saturated: content of each kernel row is 1 and the kernel rows
            // extend to a basis (they are rows of a unimodular matrix)
            for (std::size_t i = 0; i < k.rows; ++i) {
                Int g = 0;
                for (std::size_t j = 0; j < k.cols; ++j) g = gcd(g, k(i, j));
                CHECK(g == 1);
            }
        }
    }
}

TEST_CASE("quotient invariants") {
    SECTION("Z^2 mod (2Z)^2") {
        LatticeQuotient q = quotient_invariants(2, IntMat::from_rows({{2, 0}, {0, 2}}));
        CHECK(q.invariant_factors == std::vector<Int>{2, 2});
        CHECK(q.order() == 4);
    }
    SECTION("n e_i plus one primitive vector") {
        // quotient is (Z/n)^{d-1} whenever h is primitive
        for (int n : {4, 5, 6, 7}) {
            const std::size_t d = 4;
            std::vector<IntVec> rows;
            for (std::size_t i = 0; i < d; ++i) {
                IntVec e(d);
                e[i] = n;
                rows.push_back(e);
            }
            rows.push_back({1, 1, 1, 1});  // primitive
            LatticeQuotient q = quotient_invariants(d, IntMat::from_rows(rows));
            CHECK(q.invariant_factors == std::vector<Int>(d - 1, Int(n)));
        }
    }
    SECTION("infinite quotient rejected") {
        CHECK_THROWS(quotient_invariants(2, IntMat::from_rows({{1, 1}})));
    }
    SECTION("order equals |det| for square generators") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 2 + rng() % 3;
            IntMat m = rand_mat(rng, n, n);
            if (det(m) == 0) continue;
            LatticeQuotient q = quotient_invariants(n, m);
            CHECK(q.order() == abs(det(m)));
        }
    }
    SECTION("reduce gives canonical coset representatives") {
        LatticeQuotient q = quotient_invariants(2, IntMat::from_rows({{2, 1}, {0, 3}}));
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> d(-20, 20);
        for (int trial = 0; trial < 50; ++trial) {
            IntVec x{d(rng), d(rng)};
            IntVec shift = mul_vec(IntVec{d(rng), d(rng)}, IntMat::from_rows({{2, 1}, {0, 3}}));
            IntVec y{x[0] + shift[0], x[1] + shift[1]};
            CHECK(q.reduce(x) == q.reduce(y));
        }
    }
}

TEST_CASE("lattice membership via HNF") {
    auto basis = hnf_basis(IntMat::from_rows({{2, 0, 1}, {0, 3, 1}}));
    CHECK(in_hnf_lattice(basis, {2, 0, 1}));
    CHECK(in_hnf_lattice(basis, {2, 3, 2}));
    CHECK(!in_hnf_lattice(basis, {1, 0, 0}));
    CHECK(!in_hnf_lattice(basis, {0, 0, 1}));
}

TEST_CASE("row solving and unimodular inverse") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 3;
        IntMat m = rand_mat(rng, n, n);
        if (det(m) == 0) continue;
        IntVec x(n);
        for (auto& v : x) v = Int(int(rng() % 19) - 9);
        IntVec b = mul_vec(x, m);
        RatRowSolve s = solve_row(m, b);
        CHECK(s.den == 1);
        CHECK(s.num == x);
    }
    IntMat u = rand_unimodular(rng, 4);
    CHECK(mul(u, unimodular_inverse(u)) == IntMat::identity(4));
}
