#include "liechar/cs_operator.hpp"

namespace liechar {

namespace {

Integer require_integer(const Rational& v, const char* what) {
    if (v.get_den() != 1)
        throw HalfIntegerCoefficient(std::string(what) + " has non-integer value " + v.get_str() +
                                     "; the form normalization is not integral");
    return v.get_num();
}

TPoly t_monomial(std::size_t zvars, Exponents e, const Integer& c) {
    return TPoly::monomial(std::move(e), z_constant(zvars, c));
}

} // namespace

Rational EigenPoly::operator()(const Weight& m) const {
    Rational s = 0;
    for (std::size_t i = 0; i < linear.size(); ++i) {
        if (m[i] == 0) continue;
        s += linear[i] * m[i];
        for (std::size_t j = 0; j < linear.size(); ++j)
            if (m[j] != 0) s += quadratic[i][j] * m[i] * m[j];
    }
    return s;
}

EigenPoly eigen_poly(const AlgebraData& alg) {
    EigenPoly e;
    e.quadratic = alg.form;
    e.linear.assign(alg.rank, 0);
    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = 0; j < alg.rank; ++j) e.linear[i] += 2 * alg.form[i][j];
    return e;
}

std::map<std::size_t, ZPoly> build_b(const AlgebraData& alg) {
    std::map<std::size_t, ZPoly> b;
    for (std::size_t j = 0; j < alg.rank; ++j) {
        const Integer eps = require_integer(eigenvalue(alg, Weight::fundamental(alg.rank, j)), "b_j");
        b.emplace(j, ZPoly::variable(alg.rank, j, eps));
    }
    return b;
}

std::map<std::pair<std::size_t, std::size_t>, ZPoly> build_a(const AlgebraData& alg, const WeylOracle& oracle) {
    const std::size_t r = alg.rank;
    const auto b = build_b(alg);
    std::vector<ZPoly> z;
    for (std::size_t k = 0; k < r; ++k) z.push_back(ZPoly::variable(r, k, 1));

    std::map<std::pair<std::size_t, std::size_t>, ZPoly> a;
    for (std::size_t j = 0; j < r; ++j) {
        const LaurentPoly zj = oracle.char_x(Weight::fundamental(r, j)).poly;
        for (std::size_t k = j; k < r; ++k) {
            const LaurentPoly zk = oracle.char_x(Weight::fundamental(r, k)).poly;
            // Delta(z_j z_k) = sum over the Clebsch-Gordan series of eps(mu) chi_mu.
            ZPoly image(r);
            for (const auto& [mu, mult] : oracle.decompose(zj * zk)) {
                const Integer eps = require_integer(eigenvalue(alg, mu), "eigenvalue");
                image += oracle.rewrite_to_z(oracle.char_x(mu).poly) * Integer(eps * mult);
            }
            ZPoly rest = image - b.at(j) * z[k] - b.at(k) * z[j];
            if (j == k) {
                // Delta(z_j^2) = 2 a_jj + 2 b_j z_j.
                ZPoly half(r);
                for (const auto& [e, c] : rest.terms()) {
                    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2))
                        throw HalfIntegerCoefficient("a_" + std::to_string(j + 1) + std::to_string(j + 1) +
                                                     " has a half-integer coefficient");
                    half.add_term(e, Integer(c / 2));
                }
                rest = std::move(half);
            }
            if (!rest.is_zero()) a.emplace(std::pair{j, k}, std::move(rest));
        }
    }
    return a;
}

std::map<std::pair<std::size_t, std::size_t>, ZPoly> build_a(const AlgebraData& alg) {
    return build_a(alg, WeylOracle(alg));
}

CSOperator build_cs_operator(const AlgebraData& alg, const WeylOracle& oracle) {
    CSOperator cs{alg, ZDiffOp{}, eigen_poly(alg)};
    cs.op.nvars = alg.rank;
    for (auto& [key, c] : build_a(alg, oracle)) cs.op.add_second(key.first, key.second, c);
    for (auto& [j, c] : build_b(alg)) cs.op.add_first(j, c);
    return cs;
}

CSOperator build_cs_operator(const AlgebraData& alg) { return build_cs_operator(alg, WeylOracle(alg)); }

TDiffOp delta_t(const AlgebraData& alg) { return delta_t(alg, std::vector<int>(alg.rank, 1), RayMode::Individual); }

TDiffOp delta_t(const AlgebraData& alg, const std::vector<int>& direction, RayMode mode) {
    const std::size_t r = alg.rank;
    if (direction.size() != r) throw Error("direction length does not match rank");
    for (int c : direction)
        if (c != 0 && c != 1) throw Error("direction entries must be 0 or 1");
    const EigenPoly eps = eigen_poly(alg);
    TDiffOp op;

    if (mode == RayMode::Shared) {
        Rational q = 0, l = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (!direction[i]) continue;
            l += eps.linear[i];
            for (std::size_t j = 0; j < r; ++j)
                if (direction[j]) q += eps.quadratic[i][j];
        }
        op.nvars = 1;
        op.add_second(0, 0, t_monomial(r, {2}, require_integer(q, "Delta_t coefficient")));
        op.add_first(0, t_monomial(r, {1}, require_integer(q + l, "Delta_t coefficient")));
        return op;
    }

    op.nvars = r;
    for (std::size_t j = 0; j < r; ++j) {
        if (!direction[j]) continue;
        Exponents e(r, 0);
        e[j] = 2;
        op.add_second(j, j, t_monomial(r, e, require_integer(eps.quadratic[j][j], "Delta_t coefficient")));
        for (std::size_t k = j + 1; k < r; ++k) {
            if (!direction[k]) continue;
            Exponents x(r, 0);
            x[j] = x[k] = 1;
            op.add_second(j, k, t_monomial(r, x, require_integer(2 * eps.quadratic[j][k], "Delta_t coefficient")));
        }
        Exponents f(r, 0);
        f[j] = 1;
        op.add_first(j, t_monomial(r, f, require_integer(eps.quadratic[j][j] + eps.linear[j], "Delta_t coefficient")));
    }
    return op;
}

} // namespace liechar
