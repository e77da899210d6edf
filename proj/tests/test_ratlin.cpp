#include "lieaff/error.hpp"
#include "lieaff/matrix.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace lieaff;

namespace {

Matrix randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(oracle::draw(rng), 1 + static_cast<long>(rng() % 3));
    return m;
}

/// Laplace expansion along the first row; independent of elimination.
Rational laplace(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c).isZero()) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0, d = 0; cc < n; ++cc)
                if (cc != c) minor(r - 1, d++) = a(r, cc);
        const Rational term = a(0, c) * laplace(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace

TEST_CASE("rational parsing and normal form") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("\xE2\x88\x92" "1/2") == Rational(-1, 2));
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(1, 3) / Rational(-2) == Rational(-1, 6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    Rational sum;
    for (long k = 1; k <= 10; ++k) sum += Rational(1, k * (k + 1));
    CHECK(sum == Rational(10, 11));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    std::ostringstream os;
    os << Rational(-5, 10);
    CHECK(os.str() == "-1/2");
}

TEST_CASE("rank, kernel and solve on a fixed matrix") {
    // Rows (1 2 3), (2 4 6), (1 0 1): rank 2, kernel spanned by (-1, -1, 1).
    const Matrix a = Matrix::fromRows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(a) == 2);
    const auto k = kernelBasis(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{-1, -1, 1});
    const auto ech = rowReduce(a);
    CHECK(ech.pivots == std::vector<std::size_t>{0, 1});
    CHECK(ech.reduced == Matrix::fromRows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}, 3));

    const auto s = solveLinear(a, Vector{5, 10, 2});
    REQUIRE(s.feasible());
    CHECK(*s.particular == Vector{2, Rational(3, 2), 0});
    CHECK(s.kernel.size() == 1);
    CHECK_FALSE(solveLinear(a, Vector{1, 0, 0}).feasible());
    CHECK_THROWS_AS(solveLinear(a, Vector{1, 2}), Error);
}

TEST_CASE("determinant and inverse") {
    const Matrix a = Matrix::fromRows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}, 3);
    CHECK(determinant(a) == Rational(18));
    const Matrix inv = inverse(a);
    CHECK(a * inv == Matrix::identity(3));
    CHECK(inv(0, 0) == Rational(11, 18));
    CHECK_THROWS_AS(inverse(Matrix::fromRows({{1, 2}, {2, 4}}, 2)), Error);
    CHECK(determinant(Matrix::fromRows({{1, 2}, {2, 4}}, 2)) == Rational(0));
}

TEST_CASE("property: rank plus nullity equals column count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix m = randomMatrix(rng, r, c);
        if (trial % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
        const auto k = kernelBasis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k) CHECK(isZero(m * v));
        if (!k.empty()) CHECK(rank(Matrix::fromRows(k, c)) == k.size());
    }
}

TEST_CASE("property: solve returns exact solutions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const Matrix m = randomMatrix(rng, r, c);
        Vector x(c);
        for (auto& e : x) e = oracle::draw(rng);
        const Vector b = m * x;
        const auto s = solveLinear(m, b);
        REQUIRE(s.feasible());
        CHECK(m * *s.particular == b);
    }
}

TEST_CASE("property: determinant matches Laplace expansion") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const Matrix m = randomMatrix(rng, n, n);
        CHECK(determinant(m) == laplace(m));
        if (!determinant(m).isZero()) CHECK(inverse(m) * m == Matrix::identity(n));
    }
}

TEST_CASE("span basis is row-reduced and spans") {
    const auto b = spanBasis({{1, 1, 0}, {2, 2, 0}, {0, 1, 1}}, 3);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Vector{1, 0, -1});
    CHECK(b[1] == Vector{0, 1, 1});
    CHECK(spanBasis({}, 3).empty());
}
