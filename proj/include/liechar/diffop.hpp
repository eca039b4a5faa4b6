#pragma once

#include <map>
#include <utility>

#include "liechar/polynomial.hpp"

namespace liechar {

/// Second-order linear differential operator with polynomial coefficients
///
///   sum_j a_jj d_j^2 + sum_{j<k} c_jk d_j d_k + sum_j b_j d_j
///
/// The cross coefficient c_jk is stored in full on the ordered pair j < k
/// (it equals a_jk + a_kj of the symmetric form). P is ZPoly for operators in
/// the fundamental characters and TPoly for operators in the auxiliary t.
template <class P>
struct DiffOp2 {
    using Key = std::pair<std::size_t, std::size_t>;

    std::size_t nvars = 0;
    std::map<Key, P> second;
    std::map<std::size_t, P> first;

    /// Full coefficient of d_j d_k, independent of argument order.
    P second_coeff(std::size_t j, std::size_t k) const {
        if (j > k) std::swap(j, k);
        auto it = second.find({j, k});
        return it == second.end() ? P(nvars) : it->second;
    }
    P first_coeff(std::size_t j) const {
        auto it = first.find(j);
        return it == first.end() ? P(nvars) : it->second;
    }

    void add_second(std::size_t j, std::size_t k, const P& c) {
        if (c.is_zero()) return;
        if (j > k) std::swap(j, k);
        auto [it, inserted] = second.try_emplace({j, k}, c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) second.erase(it);
    }
    void add_first(std::size_t j, const P& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = first.try_emplace(j, c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) first.erase(it);
    }

    DiffOp2& scale(const Integer& k) {
        for (auto& [key, c] : second) c.scale(k);
        for (auto& [key, c] : first) c.scale(k);
        return *this;
    }

    friend bool operator==(const DiffOp2& a, const DiffOp2& b) {
        return a.nvars == b.nvars && a.second == b.second && a.first == b.first;
    }
};

using ZDiffOp = DiffOp2<ZPoly>;
using TDiffOp = DiffOp2<TPoly>;

template <class P>
P apply_op_poly(const DiffOp2<P>& op, const P& p) {
    P out(p.nvars());
    for (const auto& [key, c] : op.second) {
        const P d = p.derivative(key.first).derivative(key.second);
        if (!d.is_zero()) out += c * d;
    }
    for (const auto& [j, c] : op.first) {
        const P d = p.derivative(j);
        if (!d.is_zero()) out += c * d;
    }
    return out;
}

/// Applies a z-operator to every z-coefficient of a TPoly.
TPoly apply_op_poly(const ZDiffOp& op, const TPoly& p);

} // namespace liechar
