#include <doctest.h>

#include "liechar/cs_operator.hpp"
#include "support/expr.hpp"

using namespace liechar;

namespace {

ZPoly z(const std::string& s, std::size_t r) { return fixture::zpoly(s, r); }

ZDiffOp make_op(std::size_t r, std::map<std::pair<std::size_t, std::size_t>, std::string> second,
                std::map<std::size_t, std::string> first) {
    ZDiffOp op;
    op.nvars = r;
    for (const auto& [k, s] : second) op.add_second(k.first, k.second, z(s, r));
    for (const auto& [j, s] : first) op.add_first(j, z(s, r));
    return op;
}

} // namespace

TEST_CASE("A1 operator") {
    const CSOperator cs = build_cs_operator(parse_algebra("A1"));
    CHECK(cs.op == make_op(1, {{{0, 0}, "z1^2 - 4"}}, {{0, "3*z1"}}));
}

TEST_CASE("A2 operator") {
    const CSOperator cs = build_cs_operator(parse_algebra("A2"));
    CHECK(cs.op == make_op(2, {{{0, 0}, "z1^2 - 3*z2"}, {{1, 1}, "z2^2 - 3*z1"}, {{0, 1}, "z1*z2 - 9"}},
                           {{0, "4*z1"}, {1, "4*z2"}}));
}

TEST_CASE("C2 operator") {
    const CSOperator cs = build_cs_operator(parse_algebra("C2"));
    CHECK(cs.op.second_coeff(0, 0) == z("z1^2 - 2*z2 - 6", 2));
    CHECK(cs.op.second_coeff(1, 1) == z("2*z2^2 - 4*z1^2 + 4*z2 - 6", 2));
    CHECK(cs.op.second_coeff(0, 1) == z("2*z1*z2 - 10*z1", 2));
    CHECK(cs.op.first_coeff(0) == z("5*z1", 2));
    // eps(0,1) = 8, so the eigen-equation on z2 forces 8*z2.
    CHECK(cs.op.first_coeff(1) == z("8*z2", 2));
}

TEST_CASE("C2 with b2 = 4*z2 fails the eigen-equation on z2") {
    const AlgebraData alg = parse_algebra("C2");
    CSOperator cs = build_cs_operator(alg);
    cs.op.first[1] = z("4*z2", 2);
    const ZPoly image = apply_op_poly(cs.op, z("z2", 2));
    CHECK(image != eigenvalue(alg, Weight{0, 1}).get_num() * z("z2", 2));
}

TEST_CASE("first-order coefficients are eps(lambda_j) z_j") {
    for (const char* name : {"B2", "A3", "B3", "C3"}) {
        const AlgebraData alg = parse_algebra(name);
        for (const auto& [j, b] : build_b(alg)) {
            const Rational e = eigenvalue(alg, Weight::fundamental(alg.rank, j));
            CHECK(b == ZPoly::variable(alg.rank, j, e.get_num()));
        }
    }
}

TEST_CASE("characters are eigenfunctions") {
    for (const char* name : {"A1", "A2", "C2", "B2", "A3", "B3", "C3"}) {
        const AlgebraData alg = parse_algebra(name);
        const WeylOracle oracle(alg);
        const CSOperator cs = build_cs_operator(alg, oracle);
        const int box = alg.rank <= 2 ? 3 : 1;
        for (const auto& m : dominant_box(alg.rank, box)) {
            const ZPoly chi = oracle.rewrite_to_z(oracle.char_x(m).poly);
            const Rational e = eigenvalue(alg, m);
            REQUIRE(e.get_den() == 1);
            CHECK(apply_op_poly(cs.op, chi) == e.get_num() * chi);
        }
    }
}

TEST_CASE("eigenvalue polynomial matches the inner-product formula") {
    for (const char* name : {"A2", "C2", "D4", "B3"}) {
        const AlgebraData alg = parse_algebra(name);
        const EigenPoly ep = eigen_poly(alg);
        for (const auto& m : dominant_box(alg.rank, 2)) CHECK(ep(m) == eigenvalue(alg, m));
    }
}

TEST_CASE("Delta_t acts on monomials by the eigenvalue") {
    for (const char* name : {"A1", "A2", "C2"}) {
        const AlgebraData alg = parse_algebra(name);
        const std::size_t r = alg.rank;
        const TDiffOp dt = delta_t(alg);
        for (const auto& m : dominant_box(r, 3)) {
            const TPoly mono = TPoly::monomial(m.coords, z_constant(r, 1));
            const TPoly expected = TPoly::monomial(m.coords, z_constant(r, eigenvalue(alg, m).get_num()));
            CHECK(apply_op_poly(dt, mono) == expected);
        }
    }
}

TEST_CASE("Delta_t for A1 and C2 written out") {
    const TDiffOp a1 = delta_t(parse_algebra("A1"));
    CHECK(a1.second_coeff(0, 0) == fixture::tpoly("t1^2", 1, 1));
    CHECK(a1.first_coeff(0) == fixture::tpoly("3*t1", 1, 1));

    const TDiffOp c2 = delta_t(parse_algebra("C2"));
    CHECK(c2.second_coeff(0, 0) == fixture::tpoly("t1^2", 2, 2));
    CHECK(c2.second_coeff(1, 1) == fixture::tpoly("2*t2^2", 2, 2));
    CHECK(c2.second_coeff(0, 1) == fixture::tpoly("2*t1*t2", 2, 2));
    CHECK(c2.first_coeff(0) == fixture::tpoly("5*t1", 2, 2));
    CHECK(c2.first_coeff(1) == fixture::tpoly("8*t2", 2, 2));
}

TEST_CASE("shared ray operator") {
    const AlgebraData a2 = parse_algebra("A2");
    const TDiffOp dt = delta_t(a2, {1, 1}, RayMode::Shared);
    CHECK(dt.nvars == 1);
    CHECK(dt.second_coeff(0, 0) == fixture::tpoly("3*t^2", 1, 2));
    CHECK(dt.first_coeff(0) == fixture::tpoly("9*t", 1, 2));

    const AlgebraData c2 = parse_algebra("C2");
    const TDiffOp dc = delta_t(c2, {1, 1}, RayMode::Shared);
    for (int s = 0; s <= 5; ++s) {
        const TPoly mono = TPoly::monomial({s}, z_constant(2, 1));
        CHECK(apply_op_poly(dc, mono) == TPoly::monomial({s}, z_constant(2, eigenvalue(c2, Weight{s, s}).get_num())));
    }
}

TEST_CASE("individual ray mode keeps only active variables") {
    const AlgebraData a2 = parse_algebra("A2");
    const TDiffOp dt = delta_t(a2, {1, 0}, RayMode::Individual);
    const TPoly mono = TPoly::monomial({2, 0}, z_constant(2, 1));
    CHECK(apply_op_poly(dt, mono) == TPoly::monomial({2, 0}, z_constant(2, eigenvalue(a2, Weight{2, 0}).get_num())));
    CHECK(dt.second_coeff(1, 1).is_zero());
    CHECK(dt.first_coeff(1).is_zero());
}
