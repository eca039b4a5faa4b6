#include <doctest.h>

#include "liechar/polynomial.hpp"
#include "support/expr.hpp"
#include "support/random.hpp"

using namespace liechar;

TEST_CASE("text rendering is ascending graded-lex with explicit powers") {
    ZPoly p = fixture::zpoly("z1^2*z2 - 3 + z2 + z1", 2);
    CHECK(to_string(p) == "-3 + z2 + z1 + z1^2*z2");
    CHECK(to_string(ZPoly(2)) == "0");

    LaurentPoly x(2);
    x.add_term({-1, 0}, 1);
    x.add_term({1, -1}, 2);
    CHECK(to_string(x) == "x1^-1 + 2*x1*x2^-1");

    TPoly t = fixture::tpoly("1 - z1*t1 + (z2 + 1)*t1^2", 1, 2);
    CHECK(to_string(t) == "1 - z1*t1 + (1 + z2)*t1^2");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = fixture::random_poly<ZPoly>(rng, 3, 0, 3, 5);
        auto b = fixture::random_poly<ZPoly>(rng, 3, 0, 3, 5);
        auto c = fixture::random_poly<ZPoly>(rng, 3, 0, 3, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * ZPoly::constant(3, 1) == a);
    }
}

TEST_CASE("exact Laurent division recovers the quotient") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = fixture::random_poly<LaurentPoly>(rng, 2, -2, 2, 4);
        auto b = fixture::random_poly<LaurentPoly>(rng, 2, -2, 2, 3);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(laurent_exact_div(a * b, b) == a);
    }
}

TEST_CASE("non-exact division throws") {
    LaurentPoly num(1), den(1);
    num.add_term({2}, 1);
    num.add_term({0}, 1);
    den.add_term({1}, 1);
    den.add_term({0}, 1);
    CHECK_THROWS_AS(laurent_exact_div(num, den), NonExactDivision);
}

TEST_CASE("derivatives and degrees") {
    ZPoly p = fixture::zpoly("z1^3*z2 + 2*z2^2 - 5", 2);
    CHECK(p.derivative(0) == fixture::zpoly("3*z1^2*z2", 2));
    CHECK(p.derivative(1) == fixture::zpoly("z1^3 + 4*z2", 2));
    CHECK(p.degree(0) == 3);
    CHECK(p.degree(1) == 2);
    CHECK(p.total_degree() == 4);
}

TEST_CASE("polynomial rings reject negative exponents") {
    ZPoly p(1);
    CHECK_THROWS(p.add_term({-1}, 1));
}

TEST_CASE("evaluation and specialization") {
    ZPoly p = fixture::zpoly("z1^2 - 2*z2 + 7", 2);
    const Integer point[] = {3, 4};
    CHECK(evaluate(p, point) == 8);

    TPoly t = fixture::tpoly("1 - z1*t1 + z2*t1^2 - t1^3", 1, 2);
    CHECK(specialize_z(t, point) == fixture::tpoly("1 - 3*t1 + 4*t1^2 - t1^3", 1, 2));
}

TEST_CASE("truncated product drops terms beyond the bound") {
    TPoly a = fixture::tpoly("1 + t1 + t2", 2, 1);
    TPoly b = fixture::tpoly("1 + t1^2 + t1*t2", 2, 1);
    CHECK(truncated_product(a, b, {1, 1}) == fixture::tpoly("1 + t1 + t2 + t1*t2", 2, 1));
}

TEST_CASE("unsized zero adopts the arity of the other operand") {
    ZPoly zero;
    ZPoly p = fixture::zpoly("z1 + z2", 2);
    zero += p;
    CHECK(zero.nvars() == 2);
    CHECK(zero == p);
}
