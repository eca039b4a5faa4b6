#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liechar/algebra.hpp"
#include "liechar/polynomial.hpp"

namespace liechar {

/// Character of an irreducible representation as a Laurent polynomial in
/// the torus variables x_l.
struct CharacterX {
    Weight weight;
    LaurentPoly poly;
};

using Multiplicities = std::vector<std::pair<Weight, Integer>>;

/// Irreducible characters together with the change of variables from the
/// torus variables x to the fundamental characters z. Memoized; safe for
/// concurrent use.
class WeylOracle {
public:
    explicit WeylOracle(AlgebraData alg);

    const AlgebraData& algebra() const { return alg_; }

    /// Character from Freudenthal multiplicities on dominant weights. Memoized.
    CharacterX char_x(const Weight& m) const;

    /// Alternating orbit sum of e(w(lambda + rho)) divided exactly by the one
    /// for rho. Slow beyond rank 4; kept as an independent check.
    CharacterX weyl_formula_char(const Weight& m) const;

    /// Q(z) with Q(z_1(x), ..., z_r(x)) = p. Throws NotWeylInvariant.
    ZPoly rewrite_to_z(const LaurentPoly& p) const;

    /// Irreducible constituents of a character sum, highest first.
    Multiplicities decompose(const LaurentPoly& p) const;

    /// z^n written in the x-variables.
    LaurentPoly z_power(const Exponents& n) const;

    /// Substitutes z_k -> z_k(x).
    LaurentPoly to_x(const ZPoly& q) const;

    /// Each term's coefficient agrees with its image under every simple reflection.
    bool is_weyl_invariant(const LaurentPoly& p) const;

private:
    struct HeightDesc {
        const AlgebraData* alg;
        bool operator()(const Weight& a, const Weight& b) const { return alg->weight_less(b, a); }
    };

    std::map<Weight, Integer, HeightDesc> dominant_multiplicities(const Weight& m) const;
    Weight dominant_rep(Weight w) const;
    LaurentPoly alternating_sum(const Weight& w) const;
    // Maximal dominant exponent under the (height, lex) order.
    const Exponents* top_dominant(const LaurentPoly& p) const;

    AlgebraData alg_;
    mutable std::once_flag rho_once_;
    mutable LaurentPoly rho_alternant_;
    std::vector<LaurentPoly> fundamental_;

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Weight, LaurentPoly, WeightHash> char_cache_;
    mutable std::unordered_map<Exponents, LaurentPoly, ExponentsHash> power_cache_;
};

CharacterX char_x(const AlgebraData& alg, const Weight& m);
ZPoly rewrite_to_z(const AlgebraData& alg, const LaurentPoly& p);
Multiplicities decompose_characters(const AlgebraData& alg, const LaurentPoly& p);

} // namespace liechar
