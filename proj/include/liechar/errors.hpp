#pragma once

#include <stdexcept>
#include <string>

namespace liechar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedAlgebra : public Error {
public:
    using Error::Error;
};

class NonDominantWeight : public Error {
public:
    using Error::Error;
};

class NonExactDivision : public Error {
public:
    using Error::Error;
};

class NotWeylInvariant : public Error {
public:
    using Error::Error;
};

class NonTermination : public Error {
public:
    using Error::Error;
};

class NegativeMultiplicity : public Error {
public:
    using Error::Error;
};

class HalfIntegerCoefficient : public Error {
public:
    using Error::Error;
};

// Solver failures. The CLI maps all of these to exit status 3.
class SolverError : public Error {
public:
    using Error::Error;
};

class ResonantDenominator : public SolverError {
public:
    using SolverError::SolverError;
};

class NonIntegerCoefficient : public SolverError {
public:
    using SolverError::SolverError;
};

class InconsistentSystem : public SolverError {
public:
    using SolverError::SolverError;
};

class DegreeOverflow : public SolverError {
public:
    using SolverError::SolverError;
};

class SchemaMismatch : public Error {
public:
    using Error::Error;
};

} // namespace liechar
