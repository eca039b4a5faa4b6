#pragma once

#include <map>
#include <vector>

#include "liechar/algebra.hpp"
#include "liechar/diffop.hpp"
#include "liechar/weyl_character.hpp"

namespace liechar {

/// epsilon(m; 1) = m^T Q m + L . m as an explicit quadratic polynomial.
struct EigenPoly {
    RationalMatrix quadratic;
    std::vector<Rational> linear;

    Rational operator()(const Weight& m) const;
};

/// Calogero-Sutherland operator at unit coupling written in the
/// fundamental characters; its eigenfunctions are the characters.
struct CSOperator {
    AlgebraData alg;
    ZDiffOp op;
    EigenPoly eigen;
};

EigenPoly eigen_poly(const AlgebraData& alg);

/// b_j = epsilon(lambda_j) z_j.
std::map<std::size_t, ZPoly> build_b(const AlgebraData& alg);

/// Second-order coefficients from the quadratic Clebsch-Gordan series:
/// diagonal a_jj on (j, j), full cross coefficient on (j, k), j < k.
std::map<std::pair<std::size_t, std::size_t>, ZPoly> build_a(const AlgebraData& alg, const WeylOracle& oracle);
std::map<std::pair<std::size_t, std::size_t>, ZPoly> build_a(const AlgebraData& alg);

CSOperator build_cs_operator(const AlgebraData& alg, const WeylOracle& oracle);
CSOperator build_cs_operator(const AlgebraData& alg);

enum class RayMode {
    Individual,  // one t_j per active direction, inactive m_j fixed at 0
    Shared,      // single t with m = s * direction
};

/// Delta_t = epsilon(t_1 d_1, ..., t_r d_r) with (t d)^2 = t^2 d^2 + t d.
TDiffOp delta_t(const AlgebraData& alg);

/// Restriction of Delta_t to a 0/1 direction. Shared mode returns an
/// operator in one variable t.
TDiffOp delta_t(const AlgebraData& alg, const std::vector<int>& direction, RayMode mode);

} // namespace liechar
