#pragma once

#include <random>

#include "liechar/polynomial.hpp"

namespace fixture {

template <class Poly>
Poly random_poly(std::mt19937& rng, std::size_t nvars, int lo, int hi, int terms) {
    std::uniform_int_distribution<int> expo(lo, hi);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Poly p(nvars);
    for (int k = 0; k < terms; ++k) {
        liechar::Exponents e(nvars);
        for (auto& v : e) v = expo(rng);
        p.add_term(e, liechar::Integer(coeff(rng)));
    }
    return p;
}

} // namespace fixture
