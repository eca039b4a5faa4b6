#pragma once

#include <map>

#include "liechar/diffop.hpp"
#include "liechar/polynomial.hpp"

namespace liechar {

/// N / D with polynomial numerator and denominator in the t-variables whose
/// coefficients are z-polynomials. D(0) is the constant 1.
class RationalGF {
public:
    RationalGF() = default;
    RationalGF(TPoly numerator, TPoly denominator);

    const TPoly& numerator() const { return numerator_; }
    const TPoly& denominator() const { return denominator_; }
    std::size_t tvars() const { return denominator_.nvars(); }

    friend bool operator==(const RationalGF&, const RationalGF&) = default;

private:
    TPoly numerator_;
    TPoly denominator_;
};

/// The operator Delta_t - Delta_z acting on functions of (t, z).
struct PdeOperator {
    TDiffOp t_part;
    ZDiffOp z_part;
};

/// Numerator of (Delta_t - Delta_z)(N / D) over the common denominator D^3.
TPoly apply_op_rational(const PdeOperator& op, const RationalGF& g);

/// Taylor coefficient table of N / D on the box [0, bound]; missing entries are zero.
using SeriesTable = std::map<Exponents, ZPoly, GrLexLess>;
SeriesTable series_coefficients(const RationalGF& g, const Exponents& bound);

/// All exponent vectors in [0, bound], ascending graded-lex.
std::vector<Exponents> box_exponents(const Exponents& bound);

} // namespace liechar
