#include "liechar/json_io.hpp"

namespace liechar {

namespace {

Integer parse_integer(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (!j.is_string()) throw SchemaMismatch("coefficient must be a decimal string");
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaMismatch("bad integer '" + j.get<std::string>() + "'");
    return v;
}

Exponents parse_exponents(const json& j, std::size_t nvars) {
    auto e = j.get<Exponents>();
    if (e.size() != nvars) throw SchemaMismatch("exponent vector has the wrong length");
    return e;
}

template <class Poly>
json integer_poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.sorted_terms()) out.push_back({{"exp", e}, {"coeff", c.get_str()}});
    return out;
}

template <class Poly>
Poly integer_poly_from_json(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw SchemaMismatch("polynomial must be an array of terms");
    Poly p(nvars);
    for (const auto& t : j) p.add_term(parse_exponents(t.at("exp"), nvars), parse_integer(t.at("coeff")));
    return p;
}

} // namespace

std::string rational_string(const Rational& q) { return q.get_str(); }

json to_json(const LaurentPoly& p) { return integer_poly_to_json(p); }
json to_json(const ZPoly& p) { return integer_poly_to_json(p); }

json to_json(const TPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.sorted_terms()) out.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return out;
}

json int_tpoly_to_json(const TPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.sorted_terms()) {
        if (c.total_degree() != 0 || c.size() != 1) throw Error("expected integer coefficients");
        out.push_back({{"exp", e}, {"coeff", c.terms().begin()->second.get_str()}});
    }
    return out;
}

LaurentPoly laurent_from_json(const json& j, std::size_t nvars) { return integer_poly_from_json<LaurentPoly>(j, nvars); }
ZPoly zpoly_from_json(const json& j, std::size_t nvars) { return integer_poly_from_json<ZPoly>(j, nvars); }

TPoly tpoly_from_json(const json& j, std::size_t tvars, std::size_t zvars) {
    if (!j.is_array()) throw SchemaMismatch("polynomial must be an array of terms");
    TPoly p(tvars);
    for (const auto& t : j) p.add_term(parse_exponents(t.at("exp"), tvars), zpoly_from_json(t.at("coeff"), zvars));
    return p;
}

TPoly int_tpoly_from_json(const json& j, std::size_t tvars, std::size_t zvars) {
    if (!j.is_array()) throw SchemaMismatch("polynomial must be an array of terms");
    TPoly p(tvars);
    for (const auto& t : j) p.add_term(parse_exponents(t.at("exp"), tvars), z_constant(zvars, parse_integer(t.at("coeff"))));
    return p;
}

json weight_to_json(const Weight& w) { return w.coords; }
Weight weight_from_json(const json& j) { return Weight(j.get<Exponents>()); }

json algebra_to_json(const AlgebraData& alg) {
    json form = json::array();
    for (const auto& row : alg.form) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_string(v));
        form.push_back(r);
    }
    json roots = json::array();
    for (const auto& a : alg.positive_roots) roots.push_back(weight_to_json(a));
    json simple = json::array();
    for (const auto& a : alg.simple_roots) simple.push_back(weight_to_json(a));
    return {{"schema_version", kSchemaVersion},
            {"algebra", alg.name()},
            {"family", std::string(1, family_letter(alg.family))},
            {"rank", alg.rank},
            {"cartan", alg.cartan},
            {"form", form},
            {"scale", rational_string(alg.scale)},
            {"simple_roots", simple},
            {"positive_roots", roots},
            {"rho", weight_to_json(alg.rho)},
            {"orbit_sizes", alg.orbit_sizes}};
}

json operator_to_json(const CSOperator& cs) {
    json a = json::array();
    for (const auto& [key, c] : cs.op.second)
        a.push_back({{"j", key.first + 1}, {"k", key.second + 1}, {"poly", to_json(c)}});
    json b = json::array();
    for (const auto& [j, c] : cs.op.first) b.push_back({{"j", j + 1}, {"poly", to_json(c)}});
    json quad = json::array();
    for (const auto& row : cs.eigen.quadratic) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_string(v));
        quad.push_back(r);
    }
    json lin = json::array();
    for (const auto& v : cs.eigen.linear) lin.push_back(rational_string(v));
    return {{"schema_version", kSchemaVersion},
            {"algebra", cs.alg.name()},
            {"a", a},
            {"b", b},
            {"eigen", {{"quadratic", quad}, {"linear", lin}}}};
}

namespace {

Rational parse_rational(const json& j) {
    Rational q;
    if (!j.is_string() || q.set_str(j.get<std::string>(), 10) != 0) throw SchemaMismatch("bad rational");
    q.canonicalize();
    return q;
}

void check_schema(const json& j) {
    if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion)
        throw SchemaMismatch("unsupported schema_version; expected " + std::to_string(kSchemaVersion));
}

} // namespace

CSOperator operator_from_json(const json& j) {
    check_schema(j);
    CSOperator cs{parse_algebra(j.at("algebra").get<std::string>()), ZDiffOp{}, EigenPoly{}};
    const std::size_t r = cs.alg.rank;
    cs.op.nvars = r;
    for (const auto& t : j.at("a"))
        cs.op.add_second(t.at("j").get<std::size_t>() - 1, t.at("k").get<std::size_t>() - 1, zpoly_from_json(t.at("poly"), r));
    for (const auto& t : j.at("b")) cs.op.add_first(t.at("j").get<std::size_t>() - 1, zpoly_from_json(t.at("poly"), r));
    for (const auto& row : j.at("eigen").at("quadratic")) {
        std::vector<Rational> out;
        for (const auto& v : row) out.push_back(parse_rational(v));
        cs.eigen.quadratic.push_back(std::move(out));
    }
    for (const auto& v : j.at("eigen").at("linear")) cs.eigen.linear.push_back(parse_rational(v));
    return cs;
}

json genfun_to_json(const GenFunResult& r, bool with_timings) {
    json factors = json::array();
    for (const auto& f : r.denominator_factors) factors.push_back(to_json(f));
    json support = json::array();
    for (const auto& s : r.support) support.push_back(s);
    json out = {{"schema_version", kSchemaVersion},
                {"algebra", r.algebra},
                {"direction", r.direction ? json(*r.direction) : json(nullptr)},
                {"numerator", to_json(r.gf.numerator())},
                {"denominator", to_json(r.gf.denominator())},
                {"denominator_factors", factors},
                {"dim_P", int_tpoly_to_json(r.dim_gf.P)},
                {"dim_Q", int_tpoly_to_json(r.dim_gf.Q)},
                {"support", support},
                {"fallback", r.used_fallback},
                {"verified", r.verified}};
    if (with_timings) out["timings"] = r.timings;
    return out;
}

GenFunResult genfun_from_json(const json& j) {
    check_schema(j);
    GenFunResult r;
    r.algebra = j.at("algebra").get<std::string>();
    const AlgebraData alg = parse_algebra(r.algebra);
    const std::size_t zv = alg.rank;
    std::size_t tv = zv;
    if (!j.at("direction").is_null()) {
        r.direction = j.at("direction").get<std::vector<int>>();
        tv = 1;
    }
    r.gf = RationalGF(tpoly_from_json(j.at("numerator"), tv, zv), tpoly_from_json(j.at("denominator"), tv, zv));
    for (const auto& f : j.value("denominator_factors", json::array())) r.denominator_factors.push_back(tpoly_from_json(f, tv, zv));
    r.dim_gf.P = int_tpoly_from_json(j.at("dim_P"), tv, zv);
    r.dim_gf.Q = int_tpoly_from_json(j.at("dim_Q"), tv, zv);
    for (const auto& s : j.at("support")) r.support.push_back(s.get<Exponents>());
    r.used_fallback = j.value("fallback", false);
    r.verified = j.at("verified").get<bool>();
    if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
    return r;
}

} // namespace liechar
