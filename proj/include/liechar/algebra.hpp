#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "liechar/polynomial.hpp"
#include "liechar/weight.hpp"

namespace liechar {

enum class Family { A, B, C, D };

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Root data of a classical simple Lie algebra. All weights are expressed in
/// the fundamental-weight basis.
struct AlgebraData {
    Family family = Family::A;
    std::size_t rank = 0;
    IntMatrix cartan;         // row i = simple root alpha_i in fundamental coordinates
    RationalMatrix form;      // <lambda_i, lambda_j>, already multiplied by `scale`
    Rational scale;           // relative to the convention with short roots of length^2 = 2
    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;
    std::vector<std::vector<int>> positive_roots_simple;  // same roots in the simple-root basis
    Weight rho;
    std::vector<std::size_t> orbit_sizes;
    std::vector<std::int64_t> height_weights;  // level of lambda_l times a common denominator

    std::string name() const;

    /// Copy with the form multiplied by `c` (c > 0).
    AlgebraData rescaled(const Rational& c) const;

    /// s_i(v) = v - v_i alpha_i.
    Weight reflect(const Weight& v, std::size_t i) const;

    /// Inner product through the form matrix.
    Rational inner(const Weight& a, const Weight& b) const;

    /// Height key used to order weights: refines the dominance order.
    std::int64_t height(const Weight& w) const;

    /// True if a precedes b in the total order (height, then lexicographic).
    bool weight_less(const Weight& a, const Weight& b) const;
};

char family_letter(Family f);

/// Builds root data; D requires rank >= 3.
AlgebraData build_algebra(Family family, std::size_t rank);

/// Parses strings like "C2" or "a3".
AlgebraData parse_algebra(std::string_view spec);

using WeightSet = std::unordered_set<Weight, WeightHash>;

WeightSet weyl_orbit(const AlgebraData& alg, const Weight& w);

/// epsilon(m; 1) = <lambda, lambda + 2 rho>.
Rational eigenvalue(const AlgebraData& alg, const Weight& m);

/// Weyl dimension formula.
Integer dimension(const AlgebraData& alg, const Weight& m);

/// All dominant weights with every coordinate <= max_coord, ordered by
/// total degree.
std::vector<Weight> dominant_box(std::size_t rank, int max_coord);

} // namespace liechar
