#ifndef THETAMAP_TEST_UTIL_HPP
#define THETAMAP_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "theta/lattice.hpp"
#include "theta/qseries.hpp"

namespace theta::test {

inline QSeries series(std::initializer_list<std::pair<Rational, Rational>> terms,
                      Rational bound) {
    QSeries f(std::move(bound));
    for (const auto& [e, c] : terms) f.add_term(e, c);
    return f;
}

inline GramMatrix gram2(const Rational& a, const Rational& b, const Rational& c) {
    return GramMatrix::validate({{a, b}, {b, c}});
}

inline GramMatrix gram_diag(const std::vector<Rational>& d) {
    RationalMatrix e(d.size(), std::vector<Rational>(d.size(), Rational(0)));
    for (std::size_t i = 0; i < d.size(); ++i) e[i][i] = d[i];
    return GramMatrix::validate(e);
}

// Small random rational with denominator <= max_den.
inline Rational random_rational(std::mt19937& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// Random positive definite rational form: M^t M + diag of small positives,
// for a random integer matrix M.
inline GramMatrix random_pd_form(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-2, 2);
    std::uniform_int_distribution<long> diag(1, 3);
    RationalMatrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
        for (auto& e : row) e = entry(rng);
    RationalMatrix g = mat_mul(mat_transpose(m), m);
    for (std::size_t i = 0; i < n; ++i) g[i][i] += diag(rng);
    // sprinkle rational noise that keeps symmetry and definiteness
    for (std::size_t i = 0; i < n; ++i) {
        Rational eps = frac(std::uniform_int_distribution<long>(0, 2)(rng), 4);
        g[i][i] += eps;
    }
    return GramMatrix::validate(g);
}

// Random unimodular integer matrix: product of elementary shears and
// signed permutations.
inline std::vector<std::vector<long>> random_unimodular(std::mt19937& rng, std::size_t n) {
    std::vector<std::vector<long>> t(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            if (coin(rng))
                for (std::size_t r = 0; r < n; ++r) t[r][i] = -t[r][i];
            continue;
        }
        long k = shear(rng);
        for (std::size_t r = 0; r < n; ++r) t[r][j] += k * t[r][i];
    }
    return t;
}

}  // namespace theta::test

#endif
