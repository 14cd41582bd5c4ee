#include <doctest.h>

#include <algorithm>
#include <random>

#include "homint/snf.hpp"

using namespace homint;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix M(static_cast<long>(rows.size()),
                static_cast<long>(rows.front().size()));
    for (long i = 0; i < M.rows; ++i)
        for (long j = 0; j < M.cols; ++j)
            M.at(i, j) = Int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return M;
}

IntMatrix random_matrix(std::mt19937& rng, long r, long c, int mag) {
    IntMatrix M(r, c);
    std::uniform_int_distribution<int> dist(-mag, mag);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) M.at(i, j) = Int(dist(rng));
    return M;
}

void check_snf_invariants(const IntMatrix& M, const SNFDecomposition& s) {
    // U * M * V == D exactly.
    CHECK(s.U.multiply(M).multiply(s.V) == s.D);
    // Unimodularity via exact determinants.
    Int du = s.U.determinant();
    Int dv = s.V.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // Diagonal, nonnegative, divisibility chain.
    for (long i = 0; i < s.D.rows; ++i)
        for (long j = 0; j < s.D.cols; ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i + 1] != 0) {
            CHECK(diag[i] != 0);
            CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

// gcd of all k x k minors, by brute force over index subsets.
Int minor_gcd(const IntMatrix& M, int k) {
    std::vector<int> ri(static_cast<std::size_t>(M.rows)), ci(static_cast<std::size_t>(M.cols));
    for (std::size_t i = 0; i < ri.size(); ++i) ri[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < ci.size(); ++j) ci[j] = static_cast<int>(j);
    Int g = 0;
    std::vector<int> rsel(static_cast<std::size_t>(k)), csel(static_cast<std::size_t>(k));
    auto pick = [&](auto&& self, std::vector<int>& sel, const std::vector<int>& pool,
                    int pos, int start, auto&& inner) -> void {
        if (pos == k) {
            inner();
            return;
        }
        for (int i = start; i <= static_cast<int>(pool.size()) - (k - pos); ++i) {
            sel[static_cast<std::size_t>(pos)] = pool[static_cast<std::size_t>(i)];
            self(self, sel, pool, pos + 1, i + 1, inner);
        }
    };
    pick(pick, rsel, ri, 0, 0, [&] {
        pick(pick, csel, ci, 0, 0, [&] {
            IntMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub.at(i, j) = M.at(rsel[static_cast<std::size_t>(i)],
                                        csel[static_cast<std::size_t>(j)]);
            g = gcd(g, sub.determinant());
        });
    });
    return g;
}

}  // namespace

TEST_CASE("snf of the identity") {
    SNFDecomposition s = snf(IntMatrix::identity(2));
    CHECK(s.diagonal() == std::vector<Int>{Int(1), Int(1)});
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
    // Determinantal-divisor oracle: d1 = gcd of entries = 2,
    // d1*d2 = |det| = |16 - 24| = 8.
    SNFDecomposition s = snf(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.diagonal() == std::vector<Int>{Int(2), Int(4)});
}

TEST_CASE("snf invariants on random matrices") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        long r = 1 + static_cast<long>(rng() % 8);
        long c = 1 + static_cast<long>(rng() % 12);
        IntMatrix M = random_matrix(rng, r, c, 50);
        check_snf_invariants(M, snf(M));
    }
}

TEST_CASE("determinantal divisor oracle up to 5x5") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        long r = 1 + static_cast<long>(rng() % 5);
        long c = 1 + static_cast<long>(rng() % 5);
        IntMatrix M = random_matrix(rng, r, c, 9);
        SNFDecomposition s = snf(M);
        auto diag = s.diagonal();
        Int prod = 1;
        for (int k = 1; k <= static_cast<int>(diag.size()); ++k) {
            prod *= diag[static_cast<std::size_t>(k - 1)];
            Int g = minor_gcd(M, k);
            // Product of the first k diagonal entries = gcd of k x k
            // minors (both zero once the rank is exhausted).
            CHECK(abs(prod) == g);
        }
    }
}

TEST_CASE("solve_diophantine on the identity") {
    auto x = solve_diophantine(IntMatrix::identity(2), {Int(7), Int(-3)});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Int>{Int(7), Int(-3)});
}

TEST_CASE("solve_diophantine detects non-membership") {
    // Hand elimination: subtracting the equations forces x = y, then
    // 3x = 1 has no integer solution.
    IntMatrix M = from_rows({{1, 2}, {2, 1}});
    CHECK(!solve_diophantine(M, {Int(1), Int(1)}).has_value());
    CHECK(!in_image(M, {Int(1), Int(1)}));
}

TEST_CASE("degree-2 evaluation system for points (1,2),(2,1)") {
    // M_2 rows are (x^2, xy, y^2) at the two points.
    IntMatrix M = from_rows({{1, 2, 4}, {4, 2, 1}});
    auto x = solve_diophantine(M, {Int(1), Int(1)});
    REQUIRE(x.has_value());
    // Verify M * x = b; the canonical solution is (1,-2,1) = (x-y)^2.
    CHECK(M.apply(*x) == std::vector<Int>{Int(1), Int(1)});
}

TEST_CASE("solve and in_image agree; solutions verify") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        long r = 1 + static_cast<long>(rng() % 5);
        long c = 1 + static_cast<long>(rng() % 7);
        IntMatrix M = random_matrix(rng, r, c, 20);
        std::vector<Int> b;
        if (rng() % 2) {
            // In-image by construction: b = M * (random x).
            std::vector<Int> x0;
            for (long j = 0; j < c; ++j)
                x0.push_back(Int(static_cast<long>(rng() % 11) - 5));
            b = M.apply(x0);
        } else {
            for (long i = 0; i < r; ++i)
                b.push_back(Int(static_cast<long>(rng() % 41) - 20));
        }
        auto x = solve_diophantine(M, b);
        CHECK(in_image(M, b) == x.has_value());
        if (x) CHECK(M.apply(*x) == b);
    }
}
