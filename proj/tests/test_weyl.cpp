#include <doctest.h>

#include <random>

#include "liechar/weyl_character.hpp"
#include "support/expr.hpp"

using namespace liechar;

TEST_CASE("A1 characters are symmetric strings x^m + x^(m-2) + ... + x^-m") {
    const AlgebraData alg = parse_algebra("A1");
    for (int m = 0; m <= 8; ++m) {
        LaurentPoly expected(1);
        for (int k = -m; k <= m; k += 2) expected.add_term({k}, 1);
        CHECK(char_x(alg, Weight{m}).poly == expected);
    }
}

TEST_CASE("fundamental characters match the orbit sums") {
    const AlgebraData c2 = parse_algebra("C2");
    LaurentPoly z1(2), z2(2);
    for (Exponents e : {Exponents{1, 0}, {-1, 0}, {1, -1}, {-1, 1}}) z1.add_term(e, 1);
    for (Exponents e : {Exponents{0, 0}, {0, 1}, {0, -1}, {2, -1}, {-2, 1}}) z2.add_term(e, 1);
    CHECK(char_x(c2, Weight{1, 0}).poly == z1);
    CHECK(char_x(c2, Weight{0, 1}).poly == z2);
}

TEST_CASE("A2 adjoint has a doubled zero weight") {
    const LaurentPoly chi = char_x(parse_algebra("A2"), Weight{1, 1}).poly;
    CHECK(chi.coeff({0, 0}) == 2);
    CHECK(chi.size() == 7);
}

TEST_CASE("characters are Weyl invariant") {
    for (const char* name : {"A2", "C2", "B3", "A3"}) {
        const WeylOracle oracle(parse_algebra(name));
        for (const auto& m : dominant_box(oracle.algebra().rank, 2)) CHECK(oracle.is_weyl_invariant(oracle.char_x(m).poly));
    }
}

TEST_CASE("rewrite_to_z on fundamental characters gives the coordinates") {
    for (const char* name : {"A3", "C3", "D4"}) {
        const AlgebraData alg = parse_algebra(name);
        const WeylOracle oracle(alg);
        for (std::size_t j = 0; j < alg.rank; ++j) {
            const Weight lj = Weight::fundamental(alg.rank, j);
            CHECK(oracle.rewrite_to_z(oracle.char_x(lj).poly) == ZPoly::variable(alg.rank, j, Integer(1)));
        }
    }
}

TEST_CASE("rewrite_to_z is a ring homomorphism on characters") {
    const WeylOracle oracle(parse_algebra("C2"));
    for (const auto& a : dominant_box(2, 2))
        for (const auto& b : dominant_box(2, 1)) {
            const ZPoly lhs = oracle.rewrite_to_z(oracle.char_x(a).poly * oracle.char_x(b).poly);
            const ZPoly rhs = oracle.rewrite_to_z(oracle.char_x(a).poly) * oracle.rewrite_to_z(oracle.char_x(b).poly);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("to_x inverts rewrite_to_z") {
    const WeylOracle oracle(parse_algebra("B2"));
    for (const auto& m : dominant_box(2, 2)) {
        const LaurentPoly chi = oracle.char_x(m).poly;
        CHECK(oracle.to_x(oracle.rewrite_to_z(chi)) == chi);
    }
}

TEST_CASE("rewrite_to_z rejects non-invariant input") {
    const WeylOracle oracle(parse_algebra("A2"));
    LaurentPoly p(2);
    p.add_term({1, 0}, 1);
    CHECK_THROWS_AS(oracle.rewrite_to_z(p), NotWeylInvariant);
}

TEST_CASE("C2 quadratic Clebsch-Gordan series") {
    const WeylOracle oracle(parse_algebra("C2"));
    const LaurentPoly z1 = oracle.char_x(Weight{1, 0}).poly;
    const LaurentPoly z2 = oracle.char_x(Weight{0, 1}).poly;
    auto as_set = [](const Multiplicities& ms) {
        std::map<Exponents, Integer> out;
        for (const auto& [w, n] : ms) out[w.coords] = n;
        return out;
    };
    using M = std::map<Exponents, Integer>;
    CHECK(as_set(oracle.decompose(z1 * z1)) == M{{{2, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}});
    CHECK(as_set(oracle.decompose(z1 * z2)) == M{{{1, 1}, 1}, {{1, 0}, 1}});
    CHECK(as_set(oracle.decompose(z2 * z2)) == M{{{0, 2}, 1}, {{2, 0}, 1}, {{0, 0}, 1}});
}

TEST_CASE("decomposition multiplicities reproduce dimensions") {
    const AlgebraData alg = parse_algebra("B3");
    const WeylOracle oracle(alg);
    const Weight a{1, 0, 0}, b{0, 0, 1};
    Integer total = 0;
    for (const auto& [w, n] : oracle.decompose(oracle.char_x(a).poly * oracle.char_x(b).poly)) total += n * dimension(alg, w);
    CHECK(total == dimension(alg, a) * dimension(alg, b));
}

TEST_CASE("negative multiplicities are reported") {
    const WeylOracle oracle(parse_algebra("A2"));
    LaurentPoly p = oracle.char_x(Weight{1, 0}).poly;
    p.scale(-1);
    CHECK_THROWS_AS(oracle.decompose(p), NegativeMultiplicity);
}

TEST_CASE("char_x requires dominant weights") {
    CHECK_THROWS_AS(char_x(parse_algebra("A2"), Weight{0, -1}), NonDominantWeight);
}

TEST_CASE("multiplicity formula agrees with the alternant quotient") {
    for (const char* name : {"A1", "A2", "B2", "C2"}) {
        const WeylOracle oracle(parse_algebra(name));
        for (const auto& m : dominant_box(oracle.algebra().rank, 4)) CHECK(oracle.char_x(m).poly == oracle.weyl_formula_char(m).poly);
    }
    for (const char* name : {"A3", "B3", "C3", "D4"}) {
        const WeylOracle oracle(parse_algebra(name));
        for (const auto& m : dominant_box(oracle.algebra().rank, 1)) CHECK(oracle.char_x(m).poly == oracle.weyl_formula_char(m).poly);
    }
}
