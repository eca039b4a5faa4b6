#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <mutex>

#include "liechar/json_io.hpp"

namespace py = pybind11;
using namespace liechar;

namespace {

py::object to_pyint(const Integer& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

Integer from_pyint(const py::handle& h) {
    Integer v;
    if (v.set_str(py::str(h).cast<std::string>(), 10) != 0) throw py::value_error("coefficient must be an integer");
    return v;
}

template <class Poly>
py::dict poly_to_dict(const Poly& p) {
    py::dict out;
    for (const auto& [e, c] : p.sorted_terms()) out[py::tuple(py::cast(e))] = to_pyint(c);
    return out;
}

py::dict tpoly_to_dict(const TPoly& p) {
    py::dict out;
    for (const auto& [e, c] : p.sorted_terms()) out[py::tuple(py::cast(e))] = poly_to_dict(c);
    return out;
}

LaurentPoly laurent_from_dict(const py::dict& d, std::size_t nvars) {
    LaurentPoly p(nvars);
    for (const auto& [k, v] : d) {
        auto e = k.cast<Exponents>();
        if (e.size() != nvars) throw py::value_error("exponent length does not match rank");
        p.add_term(e, from_pyint(v));
    }
    return p;
}

Weight to_weight(const AlgebraData& alg, const std::vector<int>& coords) {
    if (coords.size() != alg.rank) throw py::value_error("weight must have " + std::to_string(alg.rank) + " entries");
    return Weight(coords);
}

// One character table per algebra, shared across calls.
std::shared_ptr<CharacterTable> table_for(const std::string& name) {
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<CharacterTable>> tables;
    const AlgebraData alg = parse_algebra(name);
    std::lock_guard lock(mutex);
    auto& slot = tables[alg.name()];
    if (!slot) slot = std::make_shared<CharacterTable>(build_cs_operator(alg));
    return slot;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Characters of simple Lie algebras in the fundamental characters";

    py::register_exception<Error>(m, "LiecharError", PyExc_RuntimeError);
    py::register_exception<SolverError>(m, "SolverError", m.attr("LiecharError"));
    py::register_exception<UnsupportedAlgebra>(m, "UnsupportedAlgebra", m.attr("LiecharError"));
    py::register_exception<NonDominantWeight>(m, "NonDominantWeight", m.attr("LiecharError"));
    py::register_exception<SchemaMismatch>(m, "SchemaMismatch", m.attr("LiecharError"));

    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    m.def("algebra_json", [](const std::string& name) { return algebra_to_json(parse_algebra(name)).dump(); });

    m.def("weyl_orbit", [](const std::string& name, const std::vector<int>& w) {
        const AlgebraData alg = parse_algebra(name);
        std::vector<Exponents> out;
        for (const auto& v : weyl_orbit(alg, to_weight(alg, w))) out.push_back(v.coords);
        std::sort(out.begin(), out.end(), GrLexLess{});
        return out;
    });

    m.def("eigenvalue", [](const std::string& name, const std::vector<int>& w) {
        const AlgebraData alg = parse_algebra(name);
        return eigenvalue(alg, to_weight(alg, w)).get_str();
    });

    m.def("dimension", [](const std::string& name, const std::vector<int>& w) {
        const AlgebraData alg = parse_algebra(name);
        return to_pyint(dimension(alg, to_weight(alg, w)));
    });

    m.def("char_x", [](const std::string& name, const std::vector<int>& w) {
        const AlgebraData alg = parse_algebra(name);
        return poly_to_dict(char_x(alg, to_weight(alg, w)).poly);
    });

    m.def("rewrite_to_z", [](const std::string& name, const py::dict& laurent) {
        const AlgebraData alg = parse_algebra(name);
        return poly_to_dict(rewrite_to_z(alg, laurent_from_dict(laurent, alg.rank)));
    });

    m.def("character", [](const std::string& name, const std::vector<int>& w) {
        auto table = table_for(name);
        const Weight m = to_weight(table->algebra(), w);
        ZPoly chi;
        {
            py::gil_scoped_release release;
            chi = table->get(m);
        }
        return poly_to_dict(chi);
    });

    m.def("character_text", [](const std::string& name, const std::vector<int>& w) {
        auto table = table_for(name);
        return to_string(table->get(to_weight(table->algebra(), w)));
    });

    m.def(
        "operator_json", [](const std::string& name) { return operator_to_json(table_for(name)->op()).dump(); },
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "genfun_json",
        [](const std::string& name, std::optional<std::vector<int>> direction, bool timings) {
            auto table = table_for(name);
            const GenFunResult r = direction ? ray_genfun(*table, *direction) : generating_function(*table);
            return genfun_to_json(r, timings).dump();
        },
        py::arg("name"), py::arg("direction") = py::none(), py::arg("timings") = false,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "verify_json",
        [](const std::string& text) {
            const GenFunResult r = genfun_from_json(json::parse(text));
            return verify_pde(table_for(r.algebra)->op(), r.gf, r.direction);
        },
        py::call_guard<py::gil_scoped_release>());

    m.def("denominator_factors", [](const std::string& name) {
        const WeylOracle oracle(parse_algebra(name));
        py::list out;
        for (const auto& f : denominator_factors(oracle)) out.append(tpoly_to_dict(f));
        return out;
    });

    m.def("recurrence", [](const std::string& name, std::size_t axis) {
        auto table = table_for(name);
        if (axis < 1 || axis > table->algebra().rank) throw py::value_error("axis out of range");
        const Recurrence rec = recurrence_from_denominator(*table, axis - 1);
        py::list coeffs;
        for (const auto& c : rec.coefficients) coeffs.append(poly_to_dict(c));
        return py::make_tuple(coeffs, rec.threshold);
    });
}
