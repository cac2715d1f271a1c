#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gptk/algebra.hpp"
#include "gptk/module.hpp"

using namespace gptk;

namespace {

AlgebraPtr field_algebra(uint32_t p) { return truncated_polynomial(p, 1); }

QuiverPresentation linear_quiver(std::size_t n) {
    QuiverPresentation q;
    q.vertices = n;
    for (std::size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({i, i + 1});
    q.truncation = n;
    return q;
}

} // namespace

TEST_CASE("the field as an algebra validates") {
    auto a = field_algebra(2);
    CHECK(validate_algebra(*a).ok);
    CHECK(a->dim == 1);
    CHECK(a->radical.rows() == 0);
}

TEST_CASE("broken unit law is reported") {
    FieldPrime f2(2);
    std::vector<Matrix> lm = {Matrix(f2, 1, 1)}; // e0*e0 = 0
    auto a = make_algebra(f2, lm, {1}, Matrix(f2, 0, 1));
    auto rep = validate_algebra(*a);
    CHECK(!rep.ok);
    CHECK(rep.message.find("unit") != std::string::npos);
}

TEST_CASE("truncated polynomial algebras") {
    auto l2 = truncated_polynomial(2, 2);
    CHECK(validate_algebra(*l2).ok);
    CHECK(l2->dim == 2);
    // x^2 = 0
    Matrix x(2, 2, 1, {0, 1});
    CHECK(l2->product(x, x).is_zero());
    CHECK(l2->radical.rows() == 1);

    auto l6 = truncated_polynomial(3, 6);
    CHECK(validate_algebra(*l6).ok);
    CHECK(l6->dim == 6);
    Matrix x5(FieldPrime(3), 6, 1), x1(FieldPrime(3), 6, 1);
    x5.set(5, 0, 1);
    x1.set(1, 0, 1);
    CHECK(l6->product(x5, x1).is_zero());
}

TEST_CASE("A_2 quiver gives the 3-dim lower triangular pattern") {
    auto a = quotient_path_algebra(linear_quiver(2), 2);
    CHECK(a->dim == 3);
    CHECK(validate_algebra(*a).ok);
    CHECK(a->radical.rows() == 1);
    // e0 + e1 = 1
    CHECK(a->unit == std::vector<uint32_t>{1, 1, 0});
}

TEST_CASE("one-loop quiver with relation x^2 equals the truncated polynomial") {
    QuiverPresentation q;
    q.vertices = 1;
    q.arrows.push_back({0, 0});
    q.relations.push_back({RelationTerm{1, {0, 0}}});
    q.truncation = 2;
    auto a = quotient_path_algebra(q, 2);
    auto l2 = truncated_polynomial(2, 2);
    CHECK(a->dim == l2->dim);
    for (std::size_t i = 0; i < a->dim; ++i)
        CHECK(a->left_mult[i] == l2->left_mult[i]);
    CHECK(a->unit == l2->unit);
}

TEST_CASE("A_n path count is n(n+1)/2") {
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        auto a = quotient_path_algebra(linear_quiver(n), 2);
        CHECK(a->dim == n * (n + 1) / 2);
        CHECK(validate_algebra(*a).ok);
    }
}

TEST_CASE("loop without relations is rejected at the truncation degree") {
    QuiverPresentation q;
    q.vertices = 1;
    q.arrows.push_back({0, 0});
    q.truncation = 3;
    CHECK_THROWS(quotient_path_algebra(q, 2));
}

TEST_CASE("non-admissible relation is rejected") {
    QuiverPresentation q;
    q.vertices = 2;
    q.arrows.push_back({0, 1});
    q.relations.push_back({RelationTerm{1, {0}}}); // length-1 term
    q.truncation = 2;
    CHECK_THROWS(quotient_path_algebra(q, 2));
}

TEST_CASE("degenerate quiver without arrows is a product of fields") {
    QuiverPresentation q;
    q.vertices = 3;
    q.truncation = 1;
    auto a = quotient_path_algebra(q, 5);
    CHECK(a->dim == 3);
    CHECK(a->radical.rows() == 0);
    CHECK(validate_algebra(*a).ok);
}

TEST_CASE("opposite algebra") {
    auto t2 = quotient_path_algebra(linear_quiver(2), 2);
    auto op = opposite(t2);
    CHECK(validate_algebra(*op).ok);
    // involution
    auto opop = opposite(op);
    for (std::size_t i = 0; i < t2->dim; ++i)
        CHECK(opop->left_mult[i] == t2->left_mult[i]);
    // commutative algebra: identical table
    auto l2 = truncated_polynomial(2, 2);
    auto l2op = opposite(l2);
    for (std::size_t i = 0; i < l2->dim; ++i)
        CHECK(l2op->left_mult[i] == l2->left_mult[i]);
}

TEST_CASE("regular modules") {
    auto fp = field_algebra(3);
    Module r = regular_module(fp);
    CHECK(r.dim == 1);
    CHECK(r.actions[0] == Matrix::identity(FieldPrime(3), 1));

    auto l2 = truncated_polynomial(2, 2);
    Module rl = regular_module(l2);
    CHECK(validate_module(rl).ok);
    // x acts as a nilpotent Jordan block
    CHECK(rl.actions[1] == Matrix(2, 2, 2, {0, 0, 1, 0}));
    CHECK((rl.actions[1] * rl.actions[1]).is_zero());

    Module rr = regular_module(l2, Side::Right);
    CHECK(validate_module(rr).ok);
}

TEST_CASE("radical of constructor output is nilpotent within dim steps") {
    auto a = quotient_path_algebra(linear_quiver(3), 2);
    Matrix power = a->radical;
    std::size_t steps = 0;
    while (power.rows() > 0 && rank_of(power) > 0) {
        REQUIRE(++steps <= a->dim);
        Matrix next(a->field, 0, a->dim);
        for (std::size_t r = 0; r < power.rows(); ++r)
            for (std::size_t s = 0; s < a->radical.rows(); ++s)
                next = vstack(next, transpose(a->product(
                                  transpose(power.row(r)),
                                  transpose(a->radical.row(s)))));
        auto rr = rref(next);
        power = rr.reduced.block(0, 0, rr.rank, a->dim);
    }
    CHECK(steps <= a->dim);
}

TEST_CASE("semisimple quotient has no detectable nilpotent ideal") {
    auto a = truncated_polynomial(2, 3);
    auto q = semisimple_quotient(*a);
    CHECK(q.algebra->dim == 1);
    CHECK(!find_nilpotent_ideal(*q.algebra, 32, 1).has_value());
}
