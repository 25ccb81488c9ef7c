#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "test_util.hpp"
#include "theta/constructions.hpp"
#include "theta/invariants.hpp"
#include "theta/threads.hpp"

using namespace theta;
using theta::test::series;

namespace {

std::optional<Rational> leading_exponent(const QSeries& f) {
    for (const auto& [e, c] : f.terms())
        if (c != 0) return e;
    return std::nullopt;
}

}  // namespace

TEST_CASE("theta series golden values") {
    CHECK(theta_series(gaussian().gram, 17) ==
          series({{0, 1}, {1, 4}, {2, 4}, {4, 4}, {5, 8}, {8, 4}, {9, 4}, {10, 8},
                  {13, 8}, {16, 4}, {17, 8}},
                 17));
    CHECK(theta_series(eisenstein().gram, 19) ==
          series({{0, 1}, {1, 6}, {3, 6}, {4, 6}, {7, 12}, {9, 6}, {12, 6}, {13, 12},
                  {16, 6}, {19, 12}},
                 19));
    CHECK(theta_series(e8().gram, 10) ==
          series({{0, 1}, {2, 240}, {4, 2160}, {6, 6720}, {8, 17520}, {10, 30240}}, 10));
}

TEST_CASE("theta scaling law") {
    // theta(cA) has the terms of theta(A, X/c) with exponents scaled by c
    GramMatrix a = eisenstein().gram;
    RationalMatrix doubled = a.entries();
    for (auto& row : doubled)
        for (auto& e : row) e *= 2;
    QSeries f = theta_series(GramMatrix::validate(doubled), 10);
    QSeries g = theta_series(a, 5);
    QSeries expect(Rational(10));
    for (const auto& [e, c] : g.terms()) expect.add_term(2 * e, c);
    CHECK(f == expect);
}

TEST_CASE("dtheta along the base point is the q-derivative") {
    for (const GramMatrix& a : {eisenstein().gram, test::gram2(3, 1, 5)}) {
        SymMatrix dir(a.entries());
        CHECK(dtheta(a, dir, 8) == qderiv(theta_series(a, 8)));
    }
}

TEST_CASE("dtheta symmetry vanishing and errors") {
    auto id2 = GramMatrix::validate(identity_matrix(2));
    SymMatrix offdiag({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    SymMatrix split({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
    CHECK(dtheta(id2, offdiag, 12).is_zero());
    CHECK(dtheta(id2, split, 12).is_zero());
    SymMatrix dir3(identity_matrix(3));
    CHECK_THROWS_AS(dtheta(id2, dir3, 4), DimensionMismatch);
}

TEST_CASE("theta11 on diag(1,2): both routes, pinned q^2 coefficient") {
    GramMatrix a = test::gram_diag({Rational(1), Rational(2)});
    Theta11Report d = theta11_direct(a, 10);
    Theta11Report h = theta11_harmonic(a, 10);
    CHECK(d.series.coeff(2) == 1);
    CHECK(h.series.coeff(2) == 1);
    CHECK(d.series == h.series);
    CHECK(d.route == Theta11Route::direct);
    CHECK(h.route == Theta11Route::harmonic);
    CHECK(d.bound == 10);
}

TEST_CASE("theta11 vanishing examples, both routes") {
    CHECK(theta11_direct(gaussian().gram, 12).series.is_zero());
    CHECK(theta11_harmonic(gaussian().gram, 12).series.is_zero());
    CHECK(theta11_direct(eisenstein().gram, 12).series.is_zero());
    CHECK(theta11_harmonic(eisenstein().gram, 12).series.is_zero());
    CHECK(theta11_direct(e8().gram, 6).series.is_zero());
    CHECK(theta11_harmonic(e8().gram, 6).series.is_zero());
}

TEST_CASE("theta11 nonzero example") {
    // q^6 coefficient: the four pairs (+-e1, +-e1) contribute
    // 4 (3^2/2 - 3*3/4) = 9
    QSeries f = theta11_direct(test::gram2(3, 1, 5), 8).series;
    CHECK(f.coeff(6) == 9);
    CHECK(!f.is_zero());
}

TEST_CASE("route agreement on random forms") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 2 + trial % 2;
        GramMatrix a = test::random_pd_form(rng, n);
        CHECK(theta11_direct(a, 6).series == theta11_harmonic(a, 6).series);
    }
}

TEST_CASE("theta11_direct is deterministic across thread counts") {
    GramMatrix a = power(eisenstein(), 2).gram;  // rank 4, enough vectors to split
    setenv("THETA_THREADS", "1", 1);
    QSeries lone = theta11_direct(a, 12).series;
    setenv("THETA_THREADS", "3", 1);
    QSeries three = theta11_direct(a, 12).series;
    unsetenv("THETA_THREADS");
    CHECK(lone == three);
    CHECK(lone.is_zero());  // power of a root lattice
}

TEST_CASE("unimodular invariance of the invariants") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + trial % 2;
        GramMatrix a = test::random_pd_form(rng, n);
        GramMatrix b = transform(a, test::random_unimodular(rng, n));
        CHECK(theta_series(a, 6) == theta_series(b, 6));
        CHECK(theta11_direct(a, 6).series == theta11_direct(b, 6).series);
        if (n == 2)
            CHECK(wronskian(a, 6).normalized_square == wronskian(b, 6).normalized_square);
    }
}

TEST_CASE("wronskian vanishing examples") {
    CHECK(wronskian(gaussian().gram, 8).raw_det.is_zero());
    // invariant under the reflection fixing each axis
    CHECK(wronskian(test::gram_diag({Rational(1), Rational(3)}), 8).raw_det.is_zero());
}

TEST_CASE("wronskian nondegenerate rank-2 example") {
    WronskianResult w = wronskian(test::gram2(3, 1, 5), 16);
    CHECK(leading_exponent(w.raw_det) == Rational(8));
    CHECK(sgn(w.gram_det) > 0);
    CHECK(leading_exponent(w.normalized_square) == Rational(16));
    // the square is exact: raw^2 = gram_det * normalized_square
    CHECK(mul(w.raw_det, w.raw_det) == scale(w.gram_det, w.normalized_square));
}

TEST_CASE("wronskian basis independence") {
    GramMatrix a = test::gram2(3, 1, 5);
    TangentBasis tb = tangent_basis(a);
    REQUIRE(tb.vectors.size() == 2);
    // recombined basis: {v0 + v1, v1}
    RationalMatrix sum_entries = tb.vectors[0].entries();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) sum_entries[i][j] += tb.vectors[1].at(i, j);
    TangentBasis other{a, {SymMatrix(sum_entries), tb.vectors[1]}, {}};
    other.killing_gram.assign(2, std::vector<Rational>(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            other.killing_gram[i][j] = killing_pair(a, other.vectors[i], other.vectors[j]);
    CHECK(wronskian(tb, 16).normalized_square == wronskian(other, 16).normalized_square);
}

TEST_CASE("wronskian of a rank-1 form is trivial") {
    WronskianResult w = wronskian(GramMatrix::validate({{Rational(2)}}), 5);
    CHECK(w.raw_det == QSeries::constant(1, 5));
    CHECK(w.normalized_square == QSeries::constant(1, 5));
}

TEST_CASE("vanishing equivalence: theta11, dthetas and wronskian rows") {
    auto joint = [](const GramMatrix& a, const Rational& x) {
        TangentBasis tb = tangent_basis(a);
        bool all_dtheta_zero = true;
        for (const auto& b : tb.vectors)
            if (!dtheta(a, b, x).is_zero()) all_dtheta_zero = false;
        bool t11_zero = theta11_direct(a, x).series.is_zero();
        bool raw_zero = wronskian(tb, x).raw_det.is_zero();
        // theta11 == sum of squares: zero iff every generator vanishes,
        // and row-wise zero forces the determinant to vanish
        CHECK(t11_zero == all_dtheta_zero);
        if (all_dtheta_zero) CHECK(raw_zero);
        return t11_zero;
    };
    CHECK(joint(eisenstein().gram, 10));
    CHECK(!joint(test::gram2(3, 1, 5), 10));
}

TEST_CASE("wronskian_weight") {
    CHECK(wronskian_weight(2) == 16);
    CHECK(wronskian_weight(3) == 75);
    CHECK(wronskian_weight(8) == 2800);
}

TEST_CASE("rankin_cohen_f1 antisymmetry at equal weights") {
    QSeries f = theta_series(GramMatrix::validate({{Rational(1)}}), 8);
    QSeries g = theta_series(GramMatrix::validate({{Rational(3)}}), 8);
    CHECK(rankin_cohen_f1(f, 1, f, 1).is_zero());
    CHECK(rankin_cohen_f1(f, 1, g, 1) == scale(-1, rankin_cohen_f1(g, 1, f, 1)));
}

TEST_CASE("direct-sum formula against the pair-sum oracle") {
    auto check_sum = [](const GramMatrix& a1, const GramMatrix& a2, const Rational& x) {
        const long n1 = static_cast<long>(a1.dim()), n2 = static_cast<long>(a2.dim());
        QSeries formula = theta11_direct_sum(
            theta_series(a1, x), theta11_direct(a1, x).series, n1,
            theta_series(a2, x), theta11_direct(a2, x).series, n2);
        CHECK(formula == theta11_direct(direct_sum(a1, a2), x).series);
        return formula;
    };
    GramMatrix z = GramMatrix::validate({{Rational(1)}});
    GramMatrix z4 = GramMatrix::validate({{Rational(4)}});
    // Z (+) 2Z: the calibration case that pins the F1^2 constant
    CHECK(!check_sum(z, z4, 12).is_zero());
    CHECK(check_sum(z, z, 12).is_zero());
    CHECK(check_sum(gaussian().gram, gaussian().gram, 12).is_zero());
    // mixed ranks with a nonvanishing summand invariant
    check_sum(test::gram_diag({Rational(1), Rational(2)}),
              GramMatrix::validate({{Rational(3)}}), 10);
    check_sum(test::gram_diag({Rational(1), Rational(2)}), eisenstein().gram, 8);
    check_sum(z, root_A(3).gram, 8);
}

TEST_CASE("direct_sum basics") {
    GramMatrix one = GramMatrix::validate({{Rational(1)}});
    CHECK(direct_sum(one, one) == GramMatrix::validate(identity_matrix(2)));
    GramMatrix a22 = direct_sum(eisenstein().gram, eisenstein().gram);
    CHECK(a22.dim() == 4);
    CHECK(a22.at(0, 1) == Rational(1, 2));
    CHECK(a22.at(0, 2) == 0);
    CHECK(a22.at(2, 3) == Rational(1, 2));
    // theta is multiplicative over direct sums
    GramMatrix b = test::gram_diag({Rational(2)});
    CHECK(theta_series(direct_sum(eisenstein().gram, b), 8) ==
          mul(theta_series(eisenstein().gram, 8), theta_series(b, 8)));
}

TEST_CASE("compare_invariants") {
    std::mt19937 rng(31);
    GramMatrix a = test::gram2(3, 1, 5);
    GramMatrix b = transform(a, test::random_unimodular(rng, 2));
    InvariantComparison eq = compare_invariants(a, b, 8);
    CHECK(eq.theta_equal);
    CHECK(eq.theta11_equal);
    CHECK(!eq.theta_first_diff);

    InvariantComparison d1 = compare_invariants(
        GramMatrix::validate(identity_matrix(2)), test::gram_diag({Rational(1), Rational(2)}), 8);
    CHECK(!d1.theta_equal);
    CHECK(d1.theta_first_diff == Rational(1));

    InvariantComparison d2 = compare_invariants(gaussian().gram, eisenstein().gram, 8);
    CHECK(!d2.theta_equal);
    CHECK(d2.theta_first_diff == Rational(1));

    CHECK_THROWS_AS(compare_invariants(gaussian().gram, e8().gram, 4), DimensionMismatch);
}

TEST_CASE("first_difference") {
    QSeries f = series({{0, 1}, {2, 3}}, 6);
    QSeries g = series({{0, 1}, {2, 3}, {4, 1}}, 6);
    CHECK(first_difference(f, f) == std::nullopt);
    CHECK(first_difference(f, g) == Rational(4));
    // differences above the common bound are not reported
    QSeries short_g = series({{0, 1}, {2, 3}, {4, 1}}, 3);
    CHECK(first_difference(f, short_g) == std::nullopt);
}
