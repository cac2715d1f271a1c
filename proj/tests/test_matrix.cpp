#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gptk/matrix.hpp"

using namespace gptk;

namespace {

Matrix random_matrix(uint32_t p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(FieldPrime(p), r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, static_cast<uint32_t>(rng() % p));
    return m;
}

} // namespace

TEST_CASE("FieldPrime validates primality") {
    CHECK_NOTHROW(FieldPrime(2));
    CHECK_NOTHROW(FieldPrime(65521));
    CHECK_THROWS(FieldPrime(1));
    CHECK_THROWS(FieldPrime(4));
    CHECK_THROWS(FieldPrime(65536));
}

TEST_CASE("rref basics") {
    FieldPrime f2(2);
    Matrix id = Matrix::identity(f2, 2);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(r.rank == 2);

    Matrix z(f2, 3, 3);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.pivot_columns.empty());
    CHECK(rz.rank == 0);

    Matrix ones(2, 2, 2, {1, 1, 1, 1});
    auto ro = rref(ones);
    CHECK(ro.rank == 1);
    CHECK(ro.reduced == Matrix(2, 2, 2, {1, 1, 0, 0}));
}

TEST_CASE("rref is idempotent on random input") {
    std::mt19937_64 rng(7);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        Matrix m = random_matrix(p, 5, 7, rng);
        auto r1 = rref(m);
        auto r2 = rref(r1.reduced);
        CHECK(r2.reduced == r1.reduced);
    }
}

TEST_CASE("kernel_basis") {
    FieldPrime f2(2);
    CHECK(kernel_basis(Matrix::identity(f2, 3)).rows() == 0);
    Matrix z(f2, 2, 3);
    Matrix kz = kernel_basis(z);
    CHECK(kz.rows() == 3);
    CHECK(rank_of(kz) == 3);
    Matrix m(2, 1, 2, {1, 1});
    CHECK(kernel_basis(m) == Matrix(2, 1, 2, {1, 1}));
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        uint32_t p = (t % 2) ? 3 : 2;
        Matrix m = random_matrix(p, 4, 6, rng);
        CHECK(rank_of(m) + kernel_basis(m).rows() == m.cols());
        Matrix k = kernel_basis(m);
        if (k.rows()) CHECK((m * transpose(k)).is_zero());
    }
}

TEST_CASE("solve") {
    FieldPrime f3(3);
    Matrix id = Matrix::identity(f3, 2);
    Matrix t(3, 2, 1, {2, 1});
    CHECK(*solve(id, t) == t);

    Matrix z(f3, 2, 2);
    CHECK(!solve(z, t).has_value());

    Matrix m(3, 2, 2, {1, 1, 0, 1});
    Matrix sol = *solve(m, t);
    CHECK(sol == Matrix(3, 2, 1, {1, 1}));
    CHECK(m * sol == t);

    CHECK_THROWS(solve(m, Matrix(f3, 3, 1)));
}

TEST_CASE("solve soundness on random systems") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 25; ++t) {
        Matrix m = random_matrix(5, 4, 3, rng);
        Matrix rhs = random_matrix(5, 4, 2, rng);
        if (auto s = solve(m, rhs)) CHECK(m * *s == rhs);
    }
}

TEST_CASE("quotient_basis") {
    FieldPrime f2(2);
    // full space
    auto q1 = quotient_basis(Matrix::identity(f2, 3), 3);
    CHECK(q1.representatives.rows() == 0);
    // zero subspace
    auto q2 = quotient_basis(Matrix(f2, 0, 2), 2);
    CHECK(q2.projection == Matrix::identity(f2, 2));
    // span{(1,1)} in F_2^2
    auto q3 = quotient_basis(Matrix(2, 1, 2, {1, 1}), 2);
    CHECK(q3.representatives.rows() == 1);
    Matrix v(2, 2, 1, {1, 1});
    CHECK((q3.projection * v).is_zero());
    CHECK(q3.projection * transpose(q3.representatives) == Matrix::identity(f2, 1));
}

TEST_CASE("quotient projection rank contract") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        Matrix sub = random_matrix(3, 2, 5, rng);
        auto q = quotient_basis(sub, 5);
        CHECK(rank_of(q.projection) == 5 - rank_of(sub));
    }
}

TEST_CASE("kronecker") {
    FieldPrime f2(2);
    Matrix one(2, 1, 1, {1});
    Matrix b(2, 2, 3, {1, 0, 1, 1, 1, 0});
    CHECK(kronecker(one, b) == b);
    Matrix z(f2, 1, 1);
    CHECK(kronecker(z, b).is_zero());
    CHECK(kronecker(Matrix::identity(f2, 2), Matrix::identity(f2, 2)) ==
          Matrix::identity(f2, 4));
    CHECK_THROWS(kronecker(Matrix(FieldPrime(3), 1, 1), b));
}

TEST_CASE("vec round trip and inverse") {
    std::mt19937_64 rng(23);
    Matrix m = random_matrix(7, 3, 4, rng);
    CHECK(unvec(vec(m), 3, 4) == m);

    Matrix a(5, 2, 2, {1, 2, 3, 4});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(FieldPrime(5), 2));
    CHECK(!inverse(Matrix(FieldPrime(5), 2, 2)).has_value());
}
