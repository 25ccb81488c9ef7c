#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "test_util.hpp"
#include "theta/constructions.hpp"
#include "theta/invariants.hpp"
#include "theta/lattice.hpp"

using namespace theta;

TEST_CASE("validate") {
    CHECK_NOTHROW(GramMatrix::validate(identity_matrix(2)));
    CHECK_THROWS_AS(GramMatrix::validate({{Rational(1), Rational(2)},
                                          {Rational(2), Rational(1)}}),
                    NotPositiveDefinite);
    CHECK_THROWS_AS(GramMatrix::validate({{Rational(1), Rational(2)},
                                          {Rational(1), Rational(1)}}),
                    NotSymmetric);
    CHECK_NOTHROW(GramMatrix::validate({{Rational(1), Rational(1, 2)},
                                        {Rational(1, 2), Rational(1)}}));
}

TEST_CASE("cholesky_float") {
    auto q = cholesky_float(test::gram_diag({Rational(4), Rational(9)}));
    CHECK(q[0][0] == doctest::Approx(2.0));
    CHECK(q[1][1] == doctest::Approx(3.0));
    CHECK(q[0][1] == doctest::Approx(0.0));
    auto e = cholesky_float(eisenstein().gram);
    CHECK(e[0][0] == doctest::Approx(1.0));
    CHECK(e[0][1] == doctest::Approx(0.5));
    CHECK(e[1][1] == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("enumerate_vectors small cases") {
    auto id2 = GramMatrix::validate(identity_matrix(2));
    auto v = enumerate_vectors(id2, 1);
    REQUIRE(v.size() == 5);
    // lexicographic order on coords
    CHECK(v[0].coords == std::vector<long>{-1, 0});
    CHECK(v[1].coords == std::vector<long>{0, -1});
    CHECK(v[2].coords == std::vector<long>{0, 0});
    CHECK(v[3].coords == std::vector<long>{0, 1});
    CHECK(v[4].coords == std::vector<long>{1, 0});
    CHECK(enumerate_vectors(eisenstein().gram, 1).size() == 7);
    CHECK(enumerate_vectors(e8().gram, 2).size() == 241);
}

TEST_CASE("enumeration against brute-force box scan") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 2;
        GramMatrix a = test::random_pd_form(rng, n);
        Rational x(3 + trial % 5);
        auto got = enumerate_vectors(a, x);
        // independent scan over a generous fixed box
        std::set<std::vector<long>> expect;
        const long r = 12;
        std::vector<long> c(n, -r);
        while (true) {
            if (a.norm_of(c) <= x) expect.insert(c);
            std::size_t i = 0;
            while (i < n && ++c[i] > r) c[i++] = -r;
            if (i == n) break;
        }
        REQUIRE(got.size() == expect.size());
        for (const auto& v : got) {
            CHECK(expect.count(v.coords) == 1);
            CHECK(v.norm == a.norm_of(v.coords));
        }
        // symmetry and odd count
        CHECK(got.size() % 2 == 1);
        for (const auto& v : got) {
            std::vector<long> neg(v.coords);
            for (auto& e : neg) e = -e;
            CHECK(expect.count(neg) == 1);
        }
    }
}

TEST_CASE("transform") {
    auto id2 = GramMatrix::validate(identity_matrix(2));
    CHECK(transform(id2, {{1, 0}, {0, 1}}) == id2);
    auto sheared = transform(id2, {{1, 1}, {0, 1}});
    CHECK(sheared == test::gram2(1, 1, 2));
    auto flipped = transform(eisenstein().gram, {{1, 0}, {0, -1}});
    CHECK(flipped == test::gram2(1, Rational(-1, 2), 1));
    CHECK(flipped == construct("Lp3").gram);
    CHECK_THROWS_AS(transform(id2, {{2, 0}, {0, 1}}), NotUnimodular);
}

TEST_CASE("transform preserves the theta series") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + trial % 3;
        GramMatrix a = test::random_pd_form(rng, n);
        auto t = test::random_unimodular(rng, n);
        CHECK(theta_series(a, 6) == theta_series(transform(a, t), 6));
    }
}

TEST_CASE("gram JSON round trip and rejection") {
    GramMatrix a = eisenstein().gram;
    CHECK(parse_gram_json(render_gram_json(a)) == a);
    CHECK_THROWS_AS(parse_gram_json("{\"n\":2}"), ParseError);
    CHECK_THROWS_AS(
        parse_gram_json(R"({"n":2,"gram":[["1","2"],["1","1"]]})"), NotSymmetric);
    CHECK_THROWS_AS(
        parse_gram_json(R"({"n":2,"gram":[["1","2"],["2","1"]]})"), NotPositiveDefinite);
    CHECK_THROWS_AS(
        parse_gram_json(R"({"n":2,"gram":[["1.5","0"],["0","1"]]})"), ParseError);
}

TEST_CASE("length_spectrum") {
    auto sp = length_spectrum(test::gram_diag({Rational(1), Rational(2)}), 4);
    REQUIRE(sp.size() == 4);
    CHECK(sp[0] == std::pair<Rational, long>{1, 2});
    CHECK(sp[1] == std::pair<Rational, long>{2, 2});
    CHECK(sp[2] == std::pair<Rational, long>{3, 4});
    CHECK(sp[3] == std::pair<Rational, long>{4, 2});
}
