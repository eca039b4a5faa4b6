#include "liechar/char_solver.hpp"

#include <map>

namespace liechar {

CharacterZ solve_character(const CSOperator& cs, const Weight& m, const CharacterTable* memo) {
    const AlgebraData& alg = cs.alg;
    if (m.rank() != alg.rank) throw Error("weight rank does not match algebra");
    if (!m.dominant()) throw NonDominantWeight("character requires a dominant weight, got " + m.str());

    auto image = [&](const Exponents& nu) {
        if (memo) return memo->apply_to_monomial(nu);
        return apply_op_poly(cs.op, ZPoly::monomial(nu, 1));
    };

    const Rational eps_m = cs.eigen(m);
    auto higher_first = [&alg](const Weight& a, const Weight& b) { return alg.weight_less(b, a); };
    std::map<Weight, Rational, decltype(higher_first)> pending(higher_first);
    std::map<Weight, Rational, decltype(higher_first)> solved(higher_first);
    pending.emplace(m, 0);

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Weight& kappa = node.key();
        const ZPoly img = image(kappa.coords);
        const Integer diag = img.coeff(kappa.coords);

        Rational s;
        if (kappa == m) {
            if (Rational(diag) != eps_m)
                throw SolverError("leading coefficient of Delta z^m is " + diag.get_str() + ", expected eps(m) = " +
                                  eps_m.get_str());
            s = 1;
        } else {
            const Rational gap = eps_m - Rational(diag);
            if (gap == 0)
                throw ResonantDenominator("eps(m) = eps(m - mu) for m = " + m.str() + ", m - mu = " + kappa.str());
            s = node.mapped() / gap;
        }
        if (s == 0) continue;
        solved.emplace(kappa, s);

        const auto h = alg.height(kappa);
        for (const auto& [e, c] : img.terms()) {
            if (e == kappa.coords) continue;
            Weight lower(e);
            if (alg.height(lower) >= h)
                throw SolverError("Delta z^nu produced a term that is not below nu in height");
            pending[lower] += s * c;
        }
    }

    CharacterZ out{m, ZPoly(alg.rank)};
    for (const auto& [kappa, s] : solved) {
        if (s.get_den() != 1)
            throw NonIntegerCoefficient("coefficient " + s.get_str() + " of z^" + kappa.str() + " in chi_" + m.str());
        out.poly.add_term(kappa.coords, s.get_num());
    }
    return out;
}

CharacterZ character_z(const CSOperator& cs, const Weight& m) { return solve_character(cs, m, nullptr); }

ZPoly CharacterTable::apply_to_monomial(const Exponents& nu) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = images_.find(nu); it != images_.end()) return it->second;
    }
    ZPoly img = apply_op_poly(cs_.op, ZPoly::monomial(nu, 1));
    std::unique_lock lock(mutex_);
    return images_.try_emplace(nu, std::move(img)).first->second;
}

const ZPoly& CharacterTable::get(const Weight& m) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = chars_.find(m); it != chars_.end()) return it->second;
    }
    CharacterZ c = solve_character(cs_, m, this);
    std::unique_lock lock(mutex_);
    // unordered_map never invalidates references to elements on insert.
    return chars_.try_emplace(m, std::move(c.poly)).first->second;
}

} // namespace liechar
