#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "liechar/cs_operator.hpp"

namespace liechar {

/// Character as a polynomial in the fundamental characters z_k.
struct CharacterZ {
    Weight weight;
    ZPoly poly;
};

/// Solves (Delta_z - eps(m)) chi = 0 for chi = z^m + lower terms, filling
/// coefficients by decreasing height of z^(m - mu).
CharacterZ character_z(const CSOperator& cs, const Weight& m);

/// Memoized character_z for one operator. Reads may run concurrently;
/// writes are serialized.
class CharacterTable {
public:
    explicit CharacterTable(CSOperator cs) : cs_(std::move(cs)) {}

    const CSOperator& op() const { return cs_; }
    const AlgebraData& algebra() const { return cs_.alg; }

    const ZPoly& get(const Weight& m) const;

private:
    friend CharacterZ solve_character(const CSOperator&, const Weight&, const CharacterTable*);
    ZPoly apply_to_monomial(const Exponents& nu) const;

    CSOperator cs_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Weight, ZPoly, WeightHash> chars_;
    mutable std::unordered_map<Exponents, ZPoly, ExponentsHash> images_;
};

} // namespace liechar
