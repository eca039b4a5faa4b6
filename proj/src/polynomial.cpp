#include "liechar/polynomial.hpp"

#include <map>

namespace liechar {

Integer evaluate(const ZPoly& p, std::span<const Integer> point) {
    Integer total = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            term *= pw;
        }
        total += term;
    }
    return total;
}

TPoly specialize_z(const TPoly& p, std::span<const Integer> point) {
    TPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, z_constant(c.nvars(), evaluate(c, point)));
    return r;
}

LaurentPoly laurent_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw NonExactDivision("division by the zero polynomial");
    const std::size_t n = std::max(p.nvars(), q.nvars());
    LaurentPoly quotient(n);
    if (p.is_zero()) return quotient;

    // Newton polytopes add under multiplication, so every exponent of an
    // exact quotient lies in this box. Leaving it proves the division inexact.
    Exponents lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = p.min_exponent(i) - q.min_exponent(i);
        hi[i] = p.degree(i) - q.degree(i);
        if (lo[i] > hi[i]) throw NonExactDivision("exponent range of divisor exceeds dividend");
    }

    std::map<Exponents, Integer, GrLexLess> rem;
    for (const auto& [e, c] : p.terms()) rem.emplace(e, c);
    const Exponents lead_q = q.leading_exponent();
    const Integer lead_c = q.coeff(lead_q);

    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Exponents shift(n);
        for (std::size_t i = 0; i < n; ++i) {
            shift[i] = top->first[i] - lead_q[i];
            if (shift[i] < lo[i] || shift[i] > hi[i])
                throw NonExactDivision("remainder term outside the quotient's support box");
        }
        if (!mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t()))
            throw NonExactDivision("coefficient not divisible by divisor's leading coefficient");
        Integer t = top->second / lead_c;
        quotient.add_term(shift, t);
        for (const auto& [e, c] : q.terms()) {
            Exponents s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + shift[i];
            auto [it, inserted] = rem.try_emplace(s, 0);
            it->second -= t * c;
            if (sgn(it->second) == 0) rem.erase(it);
        }
    }
    return quotient;
}

TPoly truncated_product(const TPoly& a, const TPoly& b, const Exponents& bound) {
    TPoly r(std::max(a.nvars(), b.nvars()));
    Exponents e(r.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            bool inside = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > bound[i]) inside = false;
            }
            if (inside) r.add_term(e, ca * cb);
        }
    return r;
}

namespace {

std::string monomial_string(const Exponents& e, char symbol) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += symbol + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

template <class Poly>
std::string integer_poly_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.sorted_terms()) {
        const std::string mono = monomial_string(e, Poly::space::symbol);
        const bool negative = sgn(c) < 0;
        Integer mag = abs(c);
        std::string body;
        if (mono.empty())
            body = mag.get_str();
        else if (mag == 1)
            body = mono;
        else
            body = mag.get_str() + "*" + mono;
        if (first)
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace

std::string to_string(const LaurentPoly& p) { return integer_poly_string(p); }
std::string to_string(const ZPoly& p) { return integer_poly_string(p); }

std::string to_string(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.sorted_terms()) {
        const std::string mono = monomial_string(e, 't');
        bool negative = false;
        std::string body;
        if (c.size() == 1) {
            const auto& [ze, zc] = *c.terms().begin();
            ZPoly mag = ZPoly::monomial(ze, abs(zc));
            negative = sgn(zc) < 0;
            const std::string zs = to_string(mag);
            if (mono.empty())
                body = zs;
            else if (zs == "1")
                body = mono;
            else
                body = zs + "*" + mono;
        } else {
            const std::string zs = "(" + to_string(c) + ")";
            body = mono.empty() ? zs : zs + "*" + mono;
        }
        if (first)
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace liechar
