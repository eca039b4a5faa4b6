#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liechar/errors.hpp"
#include "liechar/weight.hpp"

namespace liechar {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero_coeff(const Integer& c) { return sgn(c) == 0; }
inline Integer scale_coeff(const Integer& c, const Integer& k) { return c * k; }

// Variable spaces. They only differ in whether negative exponents are
// allowed and in the printed variable name.
struct XSpace {
    static constexpr bool laurent = true;
    static constexpr char symbol = 'x';
};
struct ZSpace {
    static constexpr bool laurent = false;
    static constexpr char symbol = 'z';
};
struct TSpace {
    static constexpr bool laurent = false;
    static constexpr char symbol = 't';
};

/// Sparse multivariate polynomial with exact coefficients, stored as a hash
/// map from exponent vector to nonzero coefficient.
template <class Coeff, class Space>
class SparsePoly {
public:
    using coeff_type = Coeff;
    using space = Space;
    using Terms = std::unordered_map<Exponents, Coeff, ExponentsHash>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, Coeff c) {
        SparsePoly p(nvars);
        p.add_term(Exponents(nvars, 0), std::move(c));
        return p;
    }
    static SparsePoly monomial(Exponents e, Coeff c) {
        SparsePoly p(e.size());
        p.add_term(std::move(e), std::move(c));
        return p;
    }
    static SparsePoly variable(std::size_t nvars, std::size_t i, Coeff one) {
        Exponents e(nvars, 0);
        e[i] = 1;
        return monomial(std::move(e), std::move(one));
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Coeff coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff() : it->second;
    }
    const Coeff* find(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const Exponents& e, const Coeff& c) {
        if (is_zero_coeff(c)) return;
        adopt_nvars(e.size());
        check_exponents(e);
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }
    void sub_term(const Exponents& e, const Coeff& c) {
        if (is_zero_coeff(c)) return;
        adopt_nvars(e.size());
        check_exponents(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }
    void erase(const Exponents& e) { terms_.erase(e); }

    SparsePoly& operator+=(const SparsePoly& o) {
        adopt_nvars(o.nvars_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        adopt_nvars(o.nvars_);
        for (const auto& [e, c] : o.terms_) sub_term(e, c);
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly& scale(const Integer& k) {
        if (sgn(k) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c = scale_coeff(c, k);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator-(SparsePoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r(std::max(a.nvars_, b.nvars_));
        if (a.is_zero() || b.is_zero()) return r;
        r.terms_.reserve(a.size() * b.size());
        Exponents e(r.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend SparsePoly operator*(SparsePoly a, const Integer& k) { return a.scale(k); }
    friend SparsePoly operator*(const Integer& k, SparsePoly a) { return a.scale(k); }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.terms_ == b.terms_;
    }

    /// Multiplies every coefficient by a coefficient-ring element.
    SparsePoly times_coeff(const Coeff& k) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * k);
        return r;
    }

    /// Shifts every exponent by `shift` (multiplication by a monomial).
    SparsePoly shifted(const Exponents& shift) const {
        SparsePoly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            Exponents s = e;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
            r.add_term(s, c);
        }
        return r;
    }

    SparsePoly derivative(std::size_t var) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, scale_coeff(c, Integer(e[var])));
        }
        return r;
    }

    int degree(std::size_t var) const {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[var] > d) d = e[var];
            first = false;
        }
        return d;
    }
    int min_exponent(std::size_t var) const {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[var] < d) d = e[var];
            first = false;
        }
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }

    /// Terms in ascending graded-lexicographic order.
    std::vector<std::pair<Exponents, Coeff>> sorted_terms() const {
        std::vector<std::pair<Exponents, Coeff>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return grlex_compare(a.first, b.first) < 0; });
        return v;
    }

    /// Leading exponent under graded-lex order. Requires a nonzero polynomial.
    const Exponents& leading_exponent() const {
        auto best = terms_.begin();
        for (auto it = terms_.begin(); it != terms_.end(); ++it)
            if (grlex_compare(it->first, best->first) > 0) best = it;
        return best->first;
    }

private:
    void adopt_nvars(std::size_t n) {
        // An unsized zero takes the arity of whatever it is combined with.
        if (nvars_ == 0 && terms_.empty()) nvars_ = n;
    }
    void check_exponents(const Exponents& e) const {
        if (e.size() != nvars_) throw Error("exponent vector length does not match variable count");
        if constexpr (!Space::laurent) {
            for (int v : e)
                if (v < 0) throw Error("negative exponent in a polynomial ring");
        }
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

using LaurentPoly = SparsePoly<Integer, XSpace>;
using ZPoly = SparsePoly<Integer, ZSpace>;
using TPoly = SparsePoly<ZPoly, TSpace>;

inline bool is_zero_coeff(const ZPoly& p) { return p.is_zero(); }
inline ZPoly scale_coeff(const ZPoly& c, const Integer& k) {
    ZPoly r = c;
    return r.scale(k);
}

/// Embeds a z-polynomial as the t-constant of a TPoly with `tvars` variables.
inline TPoly t_constant(std::size_t tvars, const ZPoly& c) { return TPoly::constant(tvars, c); }

/// z-constant as ZPoly with `zvars` variables.
inline ZPoly z_constant(std::size_t zvars, const Integer& c) { return ZPoly::constant(zvars, c); }

/// Evaluates a ZPoly at an integer point.
Integer evaluate(const ZPoly& p, std::span<const Integer> point);

/// Replaces every z-coefficient of `p` by its value at `point`.
TPoly specialize_z(const TPoly& p, std::span<const Integer> point);

/// Exact quotient p / q. Throws NonExactDivision when q does not divide p.
LaurentPoly laurent_exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Product truncated to the exponent box [0, bound] (inclusive).
TPoly truncated_product(const TPoly& a, const TPoly& b, const Exponents& bound);

std::string to_string(const LaurentPoly& p);
std::string to_string(const ZPoly& p);
std::string to_string(const TPoly& p);

} // namespace liechar
