#include "liechar/genfun.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace liechar {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

TPoly one_minus_t_power(std::size_t tvars, std::size_t zvars, std::size_t index, std::size_t power) {
    TPoly base = TPoly::constant(tvars, z_constant(zvars, 1));
    Exponents e(tvars, 0);
    e[index] = 1;
    base.add_term(e, z_constant(zvars, -1));
    TPoly out = TPoly::constant(tvars, z_constant(zvars, 1));
    for (std::size_t i = 0; i < power; ++i) out = out * base;
    return out;
}

Weight ray_weight(const std::vector<int>& direction, int s) {
    Weight w(Exponents(direction.begin(), direction.end()));
    return s * w;
}

void check_direction(const AlgebraData& alg, const std::vector<int>& direction) {
    if (direction.size() != alg.rank) throw Error("direction length does not match rank");
    bool any = false;
    for (int c : direction) {
        if (c != 0 && c != 1) throw Error("direction entries must be 0 or 1");
        any = any || c == 1;
    }
    if (!any) throw Error("direction must contain at least one 1");
}

// P = Q F truncated to the box `inner`, with the next order checked zero.
DimGenFun dim_from_series(const TPoly& Q, const std::function<Integer(const Exponents&)>& dims, const Exponents& inner,
                          std::size_t zvars) {
    Exponents outer = inner;
    for (int& v : outer) ++v;
    TPoly F(Q.nvars());
    for (const auto& e : box_exponents(outer)) F.add_term(e, z_constant(zvars, dims(e)));
    TPoly product = truncated_product(Q, F, outer);
    TPoly P(Q.nvars());
    for (const auto& [e, c] : product.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > inner[i])
                throw DegreeOverflow("dimension numerator has a term beyond the orbit-size box");
        P.add_term(e, c);
    }
    return {P, Q};
}

} // namespace

TPoly orbit_factor(const WeylOracle& oracle, const Weight& lambda, std::size_t tvars, std::size_t tindex) {
    const AlgebraData& alg = oracle.algebra();
    std::vector<LaurentPoly> coeffs{LaurentPoly::constant(alg.rank, 1)};
    for (const auto& w : weyl_orbit(alg, lambda)) {
        std::vector<LaurentPoly> next(coeffs.size() + 1, LaurentPoly(alg.rank));
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k] += coeffs[k];
            next[k + 1] -= coeffs[k].shifted(w.coords);
        }
        coeffs = std::move(next);
    }
    TPoly out(tvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Exponents e(tvars, 0);
        e[tindex] = static_cast<int>(k);
        out.add_term(e, oracle.rewrite_to_z(coeffs[k]));
    }
    return out;
}

std::vector<TPoly> denominator_factors(const WeylOracle& oracle) {
    const std::size_t r = oracle.algebra().rank;
    std::vector<TPoly> out;
    for (std::size_t j = 0; j < r; ++j) out.push_back(orbit_factor(oracle, Weight::fundamental(r, j), r, j));
    return out;
}

TPoly denominator(const WeylOracle& oracle) {
    const std::size_t r = oracle.algebra().rank;
    TPoly d = TPoly::constant(r, z_constant(r, 1));
    for (const auto& f : denominator_factors(oracle)) d = d * f;
    return d;
}

TPoly denominator(const AlgebraData& alg) { return denominator(WeylOracle(alg)); }

DimGenFun dim_genfun(const AlgebraData& alg) {
    const std::size_t r = alg.rank;
    TPoly Q = TPoly::constant(r, z_constant(r, 1));
    Exponents inner(r);
    for (std::size_t j = 0; j < r; ++j) {
        Q = Q * one_minus_t_power(r, r, j, alg.orbit_sizes[j]);
        inner[j] = static_cast<int>(alg.orbit_sizes[j]) - 1;
    }
    return dim_from_series(
        Q, [&](const Exponents& e) { return dimension(alg, Weight(e)); }, inner, r);
}

DimGenFun dim_genfun_ray(const AlgebraData& alg, const std::vector<int>& direction) {
    check_direction(alg, direction);
    const std::size_t n = weyl_orbit(alg, ray_weight(direction, 1)).size();
    TPoly Q = one_minus_t_power(1, alg.rank, 0, n);
    return dim_from_series(
        Q, [&](const Exponents& e) { return dimension(alg, ray_weight(direction, e[0])); },
        Exponents{static_cast<int>(n) - 1}, alg.rank);
}

std::vector<Exponents> support_of(const TPoly& p) {
    std::vector<Exponents> out;
    for (const auto& [e, c] : p.sorted_terms()) out.push_back(e);
    return out;
}

TPoly numerator(const SeriesSource& chars, const TPoly& D, const std::vector<Exponents>& support) {
    const std::size_t tv = D.nvars();
    // Box: deg_j(D) + max support degree, plus one order as an over-determination guard.
    Exponents bound(tv, 0);
    for (std::size_t j = 0; j < tv; ++j) {
        int smax = 0;
        for (const auto& s : support) smax = std::max(smax, s[j]);
        bound[j] = D.degree(j) + smax + 1;
    }
    TPoly series(tv);
    for (const auto& e : box_exponents(bound)) series.add_term(e, chars(e));
    const TPoly product = truncated_product(D, series, bound);

    const std::set<Exponents> allowed(support.begin(), support.end());
    TPoly N(tv);
    for (const auto& [e, c] : product.terms()) {
        if (!allowed.contains(e)) {
            std::string where;
            for (int v : e) where += (where.empty() ? "" : ",") + std::to_string(v);
            throw InconsistentSystem("numerator coefficient at t^(" + where + ") is " + to_string(c) +
                                     ", outside the assumed support");
        }
        N.add_term(e, c);
    }
    return N;
}

TPoly numerator(const CharacterTable& table, const TPoly& D, const std::vector<Exponents>& support) {
    return numerator([&](const Exponents& e) { return table.get(Weight(e)); }, D, support);
}

bool verify_pde(const CSOperator& cs, const RationalGF& gf, const std::optional<std::vector<int>>& direction) {
    PdeOperator op;
    op.z_part = cs.op;
    op.t_part = direction ? delta_t(cs.alg, *direction, RayMode::Shared) : delta_t(cs.alg);
    if (op.t_part.nvars != gf.tvars()) throw Error("generating function and operator disagree on the t-variables");
    // The equation is linear, so also pin G(0) = chi_0 = 1.
    if (gf.numerator().coeff(Exponents(gf.tvars(), 0)) != z_constant(cs.alg.rank, 1)) return false;
    return apply_op_rational(op, gf).is_zero();
}

namespace {

GenFunResult run_pipeline(const CharacterTable& table, std::optional<std::vector<int>> direction) {
    const AlgebraData& alg = table.algebra();
    const std::size_t r = alg.rank;
    GenFunResult res;
    res.algebra = alg.name();
    res.direction = direction;

    auto t0 = Clock::now();
    const WeylOracle oracle(alg);
    TPoly D;
    Exponents full_box;
    if (direction) {
        const Weight lambda = ray_weight(*direction, 1);
        res.denominator_factors.push_back(orbit_factor(oracle, lambda, 1, 0));
        D = res.denominator_factors.back();
        full_box = {static_cast<int>(weyl_orbit(alg, lambda).size()) - 1};
    } else {
        res.denominator_factors = denominator_factors(oracle);
        D = TPoly::constant(r, z_constant(r, 1));
        for (const auto& f : res.denominator_factors) D = D * f;
        for (std::size_t j = 0; j < r; ++j) full_box.push_back(static_cast<int>(alg.orbit_sizes[j]) - 1);
    }
    res.timings["denominator"] = elapsed_ms(t0);

    t0 = Clock::now();
    res.dim_gf = direction ? dim_genfun_ray(alg, *direction) : dim_genfun(alg);
    res.timings["dimensions"] = elapsed_ms(t0);

    SeriesSource chars;
    if (direction)
        chars = [&](const Exponents& e) { return table.get(ray_weight(*direction, e[0])); };
    else
        chars = [&](const Exponents& e) { return table.get(Weight(e)); };

    auto attempt = [&](const std::vector<Exponents>& support) -> bool {
        auto ts = Clock::now();
        TPoly N;
        try {
            N = numerator(chars, D, support);
        } catch (const InconsistentSystem&) {
            res.timings["numerator"] += elapsed_ms(ts);
            return false;
        }
        res.timings["numerator"] += elapsed_ms(ts);
        ts = Clock::now();
        RationalGF gf(N, D);
        const bool ok = verify_pde(table.op(), gf, direction);
        res.timings["verify"] += elapsed_ms(ts);
        res.gf = std::move(gf);
        res.support = support;
        res.verified = ok;
        return ok;
    };

    if (attempt(support_of(res.dim_gf.P))) return res;

    res.used_fallback = true;
    if (attempt(box_exponents(full_box))) return res;
    throw InconsistentSystem("no verified generating function for " + alg.name() +
                             " even with the full orbit-size support box");
}

} // namespace

GenFunResult generating_function(const CharacterTable& table) { return run_pipeline(table, std::nullopt); }

GenFunResult ray_genfun(const CharacterTable& table, const std::vector<int>& direction) {
    check_direction(table.algebra(), direction);
    return run_pipeline(table, direction);
}

Recurrence recurrence_from_denominator(const CharacterTable& table, std::size_t j) {
    const std::size_t r = table.algebra().rank;
    if (j >= r) throw Error("axis index out of range");
    std::vector<int> axis(r, 0);
    axis[j] = 1;
    const GenFunResult res = ray_genfun(table, axis);
    if (!res.verified) throw SolverError("axis generating function did not verify");

    Recurrence rec;
    const TPoly& D = res.gf.denominator();
    const int deg = D.degree(0);
    for (int k = 0; k <= deg; ++k) {
        ZPoly c = D.coeff({k});
        if (c.nvars() == 0) c = ZPoly(r);
        rec.coefficients.push_back(std::move(c));
    }
    rec.numerator = res.gf.numerator();
    // sum_k d_k chi_{m-k} equals N_m, so it vanishes once m exceeds deg N and
    // every index m - k is non-negative.
    rec.threshold = std::max(rec.numerator.degree(0) + 1, deg);
    return rec;
}

} // namespace liechar
