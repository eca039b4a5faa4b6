#include "liechar/weyl_character.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace liechar {

WeylOracle::WeylOracle(AlgebraData alg) : alg_(std::move(alg)) {
    for (std::size_t k = 0; k < alg_.rank; ++k) fundamental_.push_back(char_x(Weight::fundamental(alg_.rank, k)).poly);
}

LaurentPoly WeylOracle::alternating_sum(const Weight& w) const {
    // w is strictly dominant, so its orbit is free and the sign of each
    // element is the parity of any reduced word reaching it.
    std::unordered_map<Weight, int, WeightHash> sign{{w, 1}};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight v = std::move(queue.front());
        queue.pop_front();
        const int s = sign.at(v);
        for (std::size_t i = 0; i < alg_.rank; ++i) {
            Weight u = alg_.reflect(v, i);
            if (sign.try_emplace(u, -s).second) queue.push_back(std::move(u));
        }
    }
    LaurentPoly out(alg_.rank);
    for (const auto& [v, s] : sign) out.add_term(v.coords, Integer(s));
    return out;
}

Weight WeylOracle::dominant_rep(Weight w) const {
    for (;;) {
        std::size_t i = 0;
        while (i < alg_.rank && w[i] >= 0) ++i;
        if (i == alg_.rank) return w;
        w = alg_.reflect(w, i);
    }
}

std::map<Weight, Integer, WeylOracle::HeightDesc> WeylOracle::dominant_multiplicities(const Weight& m) const {
    // Dominant weights below m are connected to m through dominant weights
    // by subtracting positive roots, so a downward search finds all of them.
    HeightDesc order{&alg_};
    std::map<Weight, Integer, HeightDesc> mult(order);
    std::unordered_map<Weight, bool, WeightHash> seen{{m, true}};
    std::deque<Weight> queue{m};
    while (!queue.empty()) {
        const Weight v = std::move(queue.front());
        queue.pop_front();
        for (const auto& a : alg_.positive_roots) {
            Weight u = v - a;
            if (u.dominant() && seen.try_emplace(u, true).second) queue.push_back(std::move(u));
        }
    }

    // Freudenthal recursion, highest weight first.
    std::vector<Weight> weights;
    for (const auto& [w, _] : seen) weights.push_back(w);
    std::sort(weights.begin(), weights.end(), order);
    const Weight top = m + alg_.rho;
    const Rational top_norm = alg_.inner(top, top);
    for (const auto& mu : weights) {
        if (mu == m) {
            mult.emplace(mu, Integer(1));
            continue;
        }
        Rational sum = 0;
        for (const auto& a : alg_.positive_roots) {
            Weight v = mu + a;
            for (;;) {
                auto it = mult.find(dominant_rep(v));
                if (it == mult.end()) break;
                sum += Rational(it->second) * alg_.inner(v, a);
                v = v + a;
            }
        }
        const Weight shifted = mu + alg_.rho;
        const Rational q = 2 * sum / (top_norm - alg_.inner(shifted, shifted));
        if (q.get_den() != 1) throw Error("non-integral weight multiplicity for " + mu.str());
        if (sgn(q) != 0) mult.emplace(mu, q.get_num());
    }
    return mult;
}

CharacterX WeylOracle::char_x(const Weight& m) const {
    if (m.rank() != alg_.rank) throw Error("weight rank does not match algebra");
    if (!m.dominant()) throw NonDominantWeight("character requires a dominant weight, got " + m.str());
    {
        std::shared_lock lock(mutex_);
        if (auto it = char_cache_.find(m); it != char_cache_.end()) return {m, it->second};
    }
    LaurentPoly poly(alg_.rank);
    for (const auto& [mu, c] : dominant_multiplicities(m))
        for (const auto& v : weyl_orbit(alg_, mu)) poly.add_term(v.coords, c);
    std::unique_lock lock(mutex_);
    char_cache_.try_emplace(m, poly);
    return {m, std::move(poly)};
}

CharacterX WeylOracle::weyl_formula_char(const Weight& m) const {
    if (m.rank() != alg_.rank) throw Error("weight rank does not match algebra");
    if (!m.dominant()) throw NonDominantWeight("character requires a dominant weight, got " + m.str());
    std::call_once(rho_once_, [this] { rho_alternant_ = alternating_sum(alg_.rho); });
    return {m, laurent_exact_div(alternating_sum(m + alg_.rho), rho_alternant_)};
}

LaurentPoly WeylOracle::z_power(const Exponents& n) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = power_cache_.find(n); it != power_cache_.end()) return it->second;
    }
    LaurentPoly result;
    std::size_t k = 0;
    while (k < n.size() && n[k] == 0) ++k;
    if (k == n.size()) {
        result = LaurentPoly::constant(alg_.rank, 1);
    } else {
        Exponents lower = n;
        lower[k] -= 1;
        result = z_power(lower) * fundamental_[k];
    }
    std::unique_lock lock(mutex_);
    power_cache_.try_emplace(n, result);
    return result;
}

LaurentPoly WeylOracle::to_x(const ZPoly& q) const {
    LaurentPoly out(alg_.rank);
    for (const auto& [e, c] : q.terms()) out += z_power(e) * c;
    return out;
}

bool WeylOracle::is_weyl_invariant(const LaurentPoly& p) const {
    for (const auto& [e, c] : p.terms()) {
        const Weight w(e);
        for (std::size_t i = 0; i < alg_.rank; ++i) {
            if (w[i] == 0) continue;
            const Integer* image = p.find(alg_.reflect(w, i).coords);
            if (!image || *image != c) return false;
        }
    }
    return true;
}

const Exponents* WeylOracle::top_dominant(const LaurentPoly& p) const {
    const Exponents* best = nullptr;
    for (const auto& [e, c] : p.terms()) {
        const Weight w(e);
        if (!w.dominant()) continue;
        if (!best || alg_.weight_less(Weight(*best), w)) best = &e;
    }
    return best;
}

ZPoly WeylOracle::rewrite_to_z(const LaurentPoly& p) const {
    if (!is_weyl_invariant(p)) throw NotWeylInvariant("Laurent polynomial is not Weyl invariant");
    ZPoly out(alg_.rank);
    LaurentPoly rest = p;
    constexpr std::size_t kMaxSteps = 1'000'000;
    std::size_t steps = 0;
    std::optional<Weight> previous;
    while (!rest.is_zero()) {
        const Exponents* top = top_dominant(rest);
        if (!top) throw NotWeylInvariant("nonzero remainder without a dominant term");
        const Weight n(*top);
        if (previous && !alg_.weight_less(n, *previous))
            throw NonTermination("maximal weight did not decrease while rewriting to z");
        if (++steps > kMaxSteps) throw NonTermination("rewrite_to_z exceeded its iteration bound");
        const Integer c = rest.coeff(n.coords);
        out.add_term(n.coords, c);
        rest -= z_power(n.coords) * c;
        previous = n;
    }
    return out;
}

Multiplicities WeylOracle::decompose(const LaurentPoly& p) const {
    if (!is_weyl_invariant(p)) throw NotWeylInvariant("Laurent polynomial is not Weyl invariant");
    Multiplicities out;
    LaurentPoly rest = p;
    while (!rest.is_zero()) {
        const Exponents* top = top_dominant(rest);
        if (!top) throw NotWeylInvariant("nonzero remainder without a dominant term");
        const Weight n(*top);
        const Integer c = rest.coeff(n.coords);
        if (sgn(c) < 0)
            throw NegativeMultiplicity("negative multiplicity " + c.get_str() + " for highest weight " + n.str());
        rest -= char_x(n).poly * c;
        out.emplace_back(n, c);
    }
    return out;
}

CharacterX char_x(const AlgebraData& alg, const Weight& m) { return WeylOracle(alg).char_x(m); }

ZPoly rewrite_to_z(const AlgebraData& alg, const LaurentPoly& p) { return WeylOracle(alg).rewrite_to_z(p); }

Multiplicities decompose_characters(const AlgebraData& alg, const LaurentPoly& p) { return WeylOracle(alg).decompose(p); }

} // namespace liechar
