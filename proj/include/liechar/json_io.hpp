#pragma once

#include <json.hpp>

#include "liechar/cs_operator.hpp"
#include "liechar/genfun.hpp"

namespace liechar {

using json = nlohmann::json;

/// Bumped whenever any emitted JSON layout changes; invalidates the cache.
inline constexpr int kSchemaVersion = 1;

// Polynomials serialize as arrays of {"exp": [...], "coeff": ...} sorted in
// ascending graded-lex order. Integers are decimal strings; TPoly
// coefficients are nested ZPoly arrays.
json to_json(const LaurentPoly& p);
json to_json(const ZPoly& p);
json to_json(const TPoly& p);

/// TPoly whose coefficients are all constants, written with integer coefficients.
json int_tpoly_to_json(const TPoly& p);

LaurentPoly laurent_from_json(const json& j, std::size_t nvars);
ZPoly zpoly_from_json(const json& j, std::size_t nvars);
TPoly tpoly_from_json(const json& j, std::size_t tvars, std::size_t zvars);
TPoly int_tpoly_from_json(const json& j, std::size_t tvars, std::size_t zvars);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

json algebra_to_json(const AlgebraData& alg);
json operator_to_json(const CSOperator& cs);
CSOperator operator_from_json(const json& j);

json genfun_to_json(const GenFunResult& r, bool with_timings = false);
/// Throws SchemaMismatch for a different schema_version.
GenFunResult genfun_from_json(const json& j);

std::string rational_string(const Rational& q);

} // namespace liechar
