#include "liechar/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace liechar {

namespace {

using Vec = std::vector<int>;

int dot(const Vec& a, const Vec& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Simple roots in an orthonormal realization.
std::vector<Vec> orthonormal_simple_roots(Family f, std::size_t n) {
    const std::size_t dim = f == Family::A ? n + 1 : n;
    std::vector<Vec> roots;
    for (std::size_t i = 0; i + 1 < n + (f == Family::A ? 1 : 0); ++i) {
        Vec a(dim, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
    }
    if (f == Family::A) return roots;
    Vec last(dim, 0);
    switch (f) {
    case Family::B:
        last[n - 1] = 1;
        break;
    case Family::C:
        last[n - 1] = 2;
        break;
    case Family::D:
        last[n - 2] = 1;
        last[n - 1] = 1;
        break;
    case Family::A:
        break;
    }
    roots.push_back(last);
    return roots;
}

RationalMatrix invert(const IntMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

Integer gcd_num(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Generator g > 0 of the additive group spanned by the values of a
// quadratic q(m) with q(0) = 0 on the integer lattice. The values at e_i,
// 2 e_i and e_i + e_j generate that group.
Rational value_group_generator(const AlgebraData& alg) {
    const std::size_t r = alg.rank;
    std::vector<Rational> samples;
    for (std::size_t i = 0; i < r; ++i) {
        samples.push_back(eigenvalue(alg, Weight::fundamental(r, i)));
        samples.push_back(eigenvalue(alg, 2 * Weight::fundamental(r, i)));
        for (std::size_t j = i + 1; j < r; ++j)
            samples.push_back(eigenvalue(alg, Weight::fundamental(r, i) + Weight::fundamental(r, j)));
    }
    Integer den = 1;
    for (const auto& s : samples) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.get_den_mpz_t());
    Integer g = 0;
    for (const auto& s : samples) {
        Rational scaled = s * den;
        g = gcd_num(g, scaled.get_num());
    }
    Rational out(g, den);
    out.canonicalize();
    return out;
}

} // namespace

char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

std::string AlgebraData::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

Weight AlgebraData::reflect(const Weight& v, std::size_t i) const {
    Weight out = v;
    const int k = v[i];
    if (k == 0) return out;
    for (std::size_t l = 0; l < rank; ++l) out[l] -= k * cartan[i][l];
    return out;
}

Rational AlgebraData::inner(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j)
            if (b[j] != 0) s += form[i][j] * a[i] * b[j];
    }
    return s;
}

std::int64_t AlgebraData::height(const Weight& w) const {
    std::int64_t h = 0;
    for (std::size_t i = 0; i < rank; ++i) h += height_weights[i] * w[i];
    return h;
}

bool AlgebraData::weight_less(const Weight& a, const Weight& b) const {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
}

AlgebraData AlgebraData::rescaled(const Rational& c) const {
    if (c <= 0) throw Error("form rescaling factor must be positive");
    AlgebraData out = *this;
    out.scale *= c;
    for (auto& row : out.form)
        for (auto& v : row) v *= c;
    return out;
}

AlgebraData build_algebra(Family family, std::size_t rank) {
    if (rank == 0) throw UnsupportedAlgebra("rank must be at least 1");
    if (family == Family::D && rank < 3)
        throw UnsupportedAlgebra("D" + std::to_string(rank) + " is not simple; D requires rank >= 3");

    AlgebraData alg;
    alg.family = family;
    alg.rank = rank;

    const auto simple = orthonormal_simple_roots(family, rank);
    int short_len = dot(simple[0], simple[0]);
    for (const auto& a : simple) short_len = std::min(short_len, dot(a, a));

    alg.cartan.assign(rank, Vec(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            alg.cartan[i][j] = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]);

    // <lambda_i, lambda_j> = (C^-1)_{ji} (alpha_i, alpha_i) / 2, normalized so
    // that short roots have length^2 = 2.
    const RationalMatrix inv = invert(alg.cartan);
    alg.form.assign(rank, std::vector<Rational>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            alg.form[i][j] = inv[j][i] * dot(simple[i], simple[i]) / short_len;

    for (std::size_t i = 0; i < rank; ++i) alg.simple_roots.emplace_back(alg.cartan[i]);
    alg.rho = Weight(Vec(rank, 1));

    // Levels of the fundamental weights: row sums of C^-1.
    Integer den = 1;
    std::vector<Rational> level(rank, 0);
    for (std::size_t l = 0; l < rank; ++l) {
        for (std::size_t k = 0; k < rank; ++k) level[l] += inv[l][k];
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), level[l].get_den_mpz_t());
    }
    for (std::size_t l = 0; l < rank; ++l) {
        Rational v = level[l] * den;
        alg.height_weights.push_back(v.get_num().get_si());
    }

    // Positive roots by root-string closure: for a root beta and simple
    // alpha_i, beta + alpha_i is a root iff q > 0 where p - q = <beta, alpha_i^vee>.
    std::set<Vec> known;
    std::vector<Vec> layer;
    for (std::size_t i = 0; i < rank; ++i) {
        Vec e(rank, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    auto to_fundamental = [&](const Vec& s) {
        Vec w(rank, 0);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t l = 0; l < rank; ++l) w[l] += s[i] * alg.cartan[i][l];
        return w;
    };
    std::vector<Vec> all = layer;
    while (!layer.empty()) {
        std::vector<Vec> next;
        for (const auto& beta : layer) {
            const Vec bf = to_fundamental(beta);
            for (std::size_t i = 0; i < rank; ++i) {
                int p = 0;
                Vec down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.contains(down)) break;
                    ++p;
                }
                const int q = p - bf[i];
                if (q <= 0) continue;
                Vec up = beta;
                up[i] += 1;
                if (known.insert(up).second) {
                    next.push_back(up);
                    all.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    for (const auto& s : all) {
        alg.positive_roots_simple.push_back(s);
        alg.positive_roots.emplace_back(to_fundamental(s));
    }

    for (std::size_t j = 0; j < rank; ++j) alg.orbit_sizes.push_back(weyl_orbit(alg, Weight::fundamental(rank, j)).size());

    // Smallest rescaling making epsilon integer-valued on the weight lattice.
    // Reproduces the A1 (2), A2 (3/2) and C2 (1) normalizations.
    alg.scale = 1;
    const Rational g = value_group_generator(alg);
    return alg.rescaled(1 / g);
}

AlgebraData parse_algebra(std::string_view spec) {
    if (spec.size() < 2) throw UnsupportedAlgebra("algebra must look like C2");
    Family f;
    switch (std::toupper(static_cast<unsigned char>(spec[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw UnsupportedAlgebra("unsupported family '" + std::string(1, spec[0]) + "'");
    }
    std::size_t rank = 0;
    for (char ch : spec.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw UnsupportedAlgebra("bad rank in '" + std::string(spec) + "'");
        rank = rank * 10 + static_cast<std::size_t>(ch - '0');
        if (rank > 64) throw UnsupportedAlgebra("rank too large");
    }
    return build_algebra(f, rank);
}

WeightSet weyl_orbit(const AlgebraData& alg, const Weight& w) {
    WeightSet seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight v = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < alg.rank; ++i) {
            if (v[i] == 0) continue;
            Weight u = alg.reflect(v, i);
            if (seen.insert(u).second) queue.push_back(std::move(u));
        }
    }
    return seen;
}

Rational eigenvalue(const AlgebraData& alg, const Weight& m) {
    return alg.inner(m, m) + 2 * alg.inner(m, alg.rho);
}

Integer dimension(const AlgebraData& alg, const Weight& m) {
    if (!m.dominant()) throw NonDominantWeight("dimension requires a dominant weight, got " + m.str());
    const Weight shifted = m + alg.rho;
    Rational d = 1;
    for (const auto& alpha : alg.positive_roots) d *= alg.inner(shifted, alpha) / alg.inner(alg.rho, alpha);
    if (d.get_den() != 1) throw Error("Weyl dimension formula produced a non-integer");
    return d.get_num();
}

std::vector<Weight> dominant_box(std::size_t rank, int max_coord) {
    std::vector<Weight> out;
    Weight w = Weight::zero(rank);
    while (true) {
        out.push_back(w);
        std::size_t i = 0;
        while (i < rank && w[i] == max_coord) w[i++] = 0;
        if (i == rank) break;
        ++w[i];
    }
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        int sa = 0, sb = 0;
        for (int v : a.coords) sa += v;
        for (int v : b.coords) sb += v;
        if (sa != sb) return sa < sb;
        return a.coords > b.coords;
    });
    return out;
}

} // namespace liechar
