#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace liechar {

/// Exponent vector of a monomial. Entries may be negative for Laurent
/// monomials in the torus variables x_l.
using Exponents = std::vector<int>;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t seed = e.size();
        for (int v : e)
            seed ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        return seed;
    }
};

/// Total degree first, then lexicographic with the first variable most
/// significant. Compatible with addition of exponent vectors.
inline int grlex_compare(const Exponents& a, const Exponents& b) {
    long da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

struct GrLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_compare(a, b) < 0; }
};

/// A weight w = n_1 lambda_1 + ... + n_r lambda_r, stored by its
/// coordinates in the fundamental-weight basis.
struct Weight {
    Exponents coords;

    Weight() = default;
    explicit Weight(Exponents c) : coords(std::move(c)) {}
    Weight(std::initializer_list<int> c) : coords(c) {}

    static Weight zero(std::size_t rank) { return Weight(Exponents(rank, 0)); }
    static Weight fundamental(std::size_t rank, std::size_t j) {
        Weight w = zero(rank);
        w.coords[j] = 1;
        return w;
    }

    std::size_t rank() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    bool dominant() const {
        for (int v : coords)
            if (v < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (int v : coords)
            if (v != 0) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    Weight& operator*=(int k) {
        for (int& v : coords) v *= k;
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) { return a *= -1; }
    friend Weight operator*(int k, Weight a) { return a *= k; }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept { return ExponentsHash{}(w.coords); }
};

} // namespace liechar
