#include "liechar/rational_gf.hpp"

#include <algorithm>

namespace liechar {

RationalGF::RationalGF(TPoly numerator, TPoly denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    const Exponents origin(denominator_.nvars(), 0);
    const ZPoly* c0 = denominator_.find(origin);
    if (!c0 || c0->size() != 1 || c0->terms().begin()->second != 1 || c0->total_degree() != 0)
        throw Error("generating-function denominator must have constant term 1");
}

TPoly apply_op_poly(const ZDiffOp& op, const TPoly& p) {
    TPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, apply_op_poly(op, c));
    return out;
}

namespace {

// A first-order derivation on TPoly: either d/dt_i or d/dz_i.
struct Derivation {
    bool in_t;
    std::size_t index;
};

TPoly derive(const TPoly& p, Derivation d) {
    if (d.in_t) return p.derivative(d.index);
    TPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, c.derivative(d.index));
    return out;
}

struct Term2 {
    TPoly coeff;
    Derivation u, v;
};
struct Term1 {
    TPoly coeff;
    Derivation u;
};

} // namespace

TPoly apply_op_rational(const PdeOperator& op, const RationalGF& g) {
    const TPoly& n = g.numerator();
    const TPoly& d = g.denominator();
    const std::size_t tv = d.nvars();

    std::vector<Term2> second;
    std::vector<Term1> first;
    for (const auto& [key, c] : op.t_part.second) second.push_back({c, {true, key.first}, {true, key.second}});
    for (const auto& [j, c] : op.t_part.first) first.push_back({c, {true, j}});
    for (const auto& [key, c] : op.z_part.second)
        second.push_back({-t_constant(tv, c), {false, key.first}, {false, key.second}});
    for (const auto& [j, c] : op.z_part.first) first.push_back({-t_constant(tv, c), {false, j}});

    // d_u d_v (N/D) * D^3 = N_uv D^2 - (N_u D_v + N_v D_u) D - N D_uv D + 2 N D_u D_v
    // d_u (N/D) * D^3     = (N_u D - N D_u) D
    const TPoly d2 = d * d;
    TPoly out(tv);
    for (const auto& t : second) {
        const TPoly nu = derive(n, t.u), nv = derive(n, t.v);
        const TPoly du = derive(d, t.u), dv = derive(d, t.v);
        const TPoly nuv = derive(nu, t.v), duv = derive(du, t.v);
        TPoly expr = nuv * d2;
        expr -= (nu * dv + nv * du + n * duv) * d;
        expr += (n * du * dv).scale(2);
        out += t.coeff * expr;
    }
    for (const auto& t : first) {
        const TPoly nu = derive(n, t.u), du = derive(d, t.u);
        out += t.coeff * ((nu * d - n * du) * d);
    }
    return out;
}

std::vector<Exponents> box_exponents(const Exponents& bound) {
    std::vector<Exponents> out;
    Exponents e(bound.size(), 0);
    for (int b : bound)
        if (b < 0) return out;
    while (true) {
        out.push_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end(), GrLexLess{});
    return out;
}

SeriesTable series_coefficients(const RationalGF& g, const Exponents& bound) {
    // N = D G with D_0 = 1 gives G_m = N_m - sum_{k != 0} D_k G_{m-k}.
    const TPoly& d = g.denominator();
    const std::size_t zv = [&] {
        for (const auto& [e, c] : d.terms())
            if (c.nvars()) return c.nvars();
        return std::size_t{0};
    }();
    SeriesTable table;
    for (const auto& m : box_exponents(bound)) {
        ZPoly gm = g.numerator().coeff(m);
        if (gm.nvars() == 0) gm = ZPoly(zv);
        for (const auto& [k, dk] : d.terms()) {
            bool nonzero = false, inside = true;
            Exponents rest(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (k[i]) nonzero = true;
                rest[i] = m[i] - k[i];
                if (rest[i] < 0) inside = false;
            }
            if (!nonzero || !inside) continue;
            const ZPoly& prev = table.at(rest);
            if (!prev.is_zero()) gm -= dk * prev;
        }
        table.emplace(m, std::move(gm));
    }
    return table;
}

} // namespace liechar
