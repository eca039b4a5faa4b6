"""Characters of simple Lie algebras as polynomials in the fundamental characters.

Polynomials are dicts mapping exponent tuples to Python ints. Generating
functions use t-exponent tuples mapping to such dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    LiecharError,
    NonDominantWeight,
    SchemaMismatch,
    SolverError,
    UnsupportedAlgebra,
    char_x,
    character,
    character_text,
    denominator_factors,
    dimension,
    recurrence,
    rewrite_to_z,
    weyl_orbit,
)

SCHEMA_VERSION = _core.SCHEMA_VERSION

__all__ = [
    "LiecharError",
    "NonDominantWeight",
    "SchemaMismatch",
    "SolverError",
    "UnsupportedAlgebra",
    "algebra",
    "char_x",
    "character",
    "character_text",
    "cs_operator",
    "denominator_factors",
    "dimension",
    "eigenvalue",
    "generating_function",
    "recurrence",
    "rewrite_to_z",
    "verify",
    "weyl_orbit",
]


def algebra(name):
    return json.loads(_core.algebra_json(name))


def eigenvalue(name, weight):
    return Fraction(_core.eigenvalue(name, list(weight)))


def cs_operator(name):
    return json.loads(_core.operator_json(name))


def generating_function(name, direction=None, timings=False):
    d = None if direction is None else list(direction)
    return json.loads(_core.genfun_json(name, d, timings))


def verify(result):
    """Re-run the differential-equation check on a generating_function() result."""
    if not isinstance(result, str):
        result = json.dumps(result)
    return _core.verify_json(result)
