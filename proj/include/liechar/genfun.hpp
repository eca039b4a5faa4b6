#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liechar/char_solver.hpp"
#include "liechar/rational_gf.hpp"

namespace liechar {

/// Dimension generating function F = P / Q with integer coefficients.
struct DimGenFun {
    TPoly P;
    TPoly Q;
};

struct GenFunResult {
    std::string algebra;
    std::optional<std::vector<int>> direction;  // set for ray generating functions
    RationalGF gf;
    std::vector<TPoly> denominator_factors;
    DimGenFun dim_gf;
    std::vector<Exponents> support;
    bool verified = false;
    bool used_fallback = false;
    std::map<std::string, double> timings;  // milliseconds per pipeline step
};

/// Pi_{w in W lambda} (1 - t_index e(w)) rewritten in the z-variables.
TPoly orbit_factor(const WeylOracle& oracle, const Weight& lambda, std::size_t tvars, std::size_t tindex);

/// D_1, ..., D_r with D_j = Pi_{w in W lambda_j} (1 - t_j e(w)).
std::vector<TPoly> denominator_factors(const WeylOracle& oracle);
TPoly denominator(const WeylOracle& oracle);
TPoly denominator(const AlgebraData& alg);

DimGenFun dim_genfun(const AlgebraData& alg);
DimGenFun dim_genfun_ray(const AlgebraData& alg, const std::vector<int>& direction);

/// Exponents with nonzero coefficient, ascending graded-lex.
std::vector<Exponents> support_of(const TPoly& p);

/// Maps a t-exponent to the character it multiplies in the series.
using SeriesSource = std::function<ZPoly(const Exponents&)>;

/// Coefficients on `support` read off from D times the truncated character
/// series; every other coefficient in the checked box must vanish.
TPoly numerator(const SeriesSource& chars, const TPoly& D, const std::vector<Exponents>& support);
TPoly numerator(const CharacterTable& table, const TPoly& D, const std::vector<Exponents>& support);

/// G(0) == 1 and (Delta_t - Delta_z) G == 0. `direction` selects the ray operator.
bool verify_pde(const CSOperator& cs, const RationalGF& gf, const std::optional<std::vector<int>>& direction = {});

GenFunResult generating_function(const CharacterTable& table);
GenFunResult ray_genfun(const CharacterTable& table, const std::vector<int>& direction);

struct Recurrence {
    std::vector<ZPoly> coefficients;  // D_j in t_j, lowest degree first
    TPoly numerator;                  // axis numerator N(0, .., t_j, .., 0)
    int threshold = 0;                // sum_k d_k chi_{m-k} = 0 for all m >= threshold
};

Recurrence recurrence_from_denominator(const CharacterTable& table, std::size_t j);

} // namespace liechar
