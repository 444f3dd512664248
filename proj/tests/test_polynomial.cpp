#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "eqloc/eqloc.hpp"
#include "property_suites.hpp"
#include "support.hpp"

using namespace eqloc;

namespace {

Polynomial parse2(const char* text) { return parse_polynomial(text, 2); }

}  // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK(to_string(parse_rational("5")) == "5");
    CHECK(to_string(parse_rational("+7/1")) == "7");
    CHECK(parse_rational("0/9") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/ 2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);

    // canonical form is maintained by the arithmetic itself
    Rational q = Rational(6) / Rational(-4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
}

TEST_CASE("monomial order is graded lexicographic, t0 > t1") {
    Monomial t0sq{{2, 0}}, t0t1{{1, 1}}, t1{{0, 1}}, unit{{0, 0}};
    CHECK(grlex_greater(t0sq, t0t1));
    CHECK(grlex_greater(t0t1, t1));
    CHECK(grlex_greater(t1, unit));
    CHECK(!grlex_greater(unit, unit));
}

TEST_CASE("polynomial addition") {
    // (x + y) + (x - y) = 2x
    CHECK(parse2("t0 + t1") + parse2("t0 - t1") == parse2("2*t0"));
    // p + 0 = p
    Polynomial p = parse2("t0^2 - 2/3*t0*t1 + 1");
    CHECK(p + Polynomial::zero(2) == p);
    // binomial square via mul
    Polynomial xy = parse2("t0 + t1");
    CHECK(xy * xy == parse2("t0^2 + 2*t0*t1 + t1^2"));
}

TEST_CASE("polynomial multiplication") {
    CHECK(parse2("t0 + t1") * parse2("t0 - t1") == parse2("t0^2 - t1^2"));
    Polynomial p = parse2("t0^3 - 5*t1");
    CHECK(p * Polynomial::one(2) == p);
    CHECK_THROWS_AS(p * Polynomial::one(3), RankMismatch);
}

TEST_CASE("three-node Vandermonde product matches the determinant oracle") {
    auto t = [](std::size_t i) { return Polynomial::variable(3, i); };
    Polynomial prod = (t(1) - t(0)) * (t(2) - t(0)) * (t(2) - t(1));
    Polynomial det = oracle::vandermonde_det({t(0), t(1), t(2)});
    CHECK(prod == det);
}

TEST_CASE("exact division by a linear form") {
    LinearForm x_plus_y({Rational(1), Rational(1)});
    auto q = parse2("t0^2 - t1^2").divide_by_linear(x_plus_y);
    REQUIRE(q.has_value());
    CHECK(*q == parse2("t0 - t1"));

    CHECK(!parse2("t0^2 + t1^2").divide_by_linear(x_plus_y).has_value());
    CHECK_THROWS_AS(parse2("t0").divide_by_linear(LinearForm::zero(2)), ZeroDivisorForm);

    // division works when the pivot variable is not the first one
    LinearForm y_only({Rational(0), Rational(3)});
    auto q2 = parse2("3*t0*t1 + 6*t1^2").divide_by_linear(y_only);
    REQUIRE(q2.has_value());
    CHECK(*q2 == parse2("t0 + 2*t1"));
}

TEST_CASE("clearing denominators of the projective localization sum divides back out") {
    // numerator built from the n = 2 sum over fixed points with the common
    // denominator (t0-t1)(t0-t2)(t1-t2); each factor divides after summation
    const TorusModel m = builtin_cpn(2);
    auto result = localize(m, EquivariantIntegrand::power(2));
    std::set<LinearForm> all_factors;
    for (const auto& [name, c] : result.contributions)
        for (const auto& [f, mult] : c.denominator()) all_factors.insert(f);
    // cross-multiplied numerator: sum * product of all distinct factors
    Polynomial cleared = Polynomial::zero(3);
    for (const auto& [name, c] : result.contributions) {
        Polynomial piece = c.numerator();
        for (const auto& f : all_factors)
            if (!c.denominator().contains(f)) piece = piece * Polynomial::from_linear_form(f);
        cleared = cleared + piece;
    }
    for (const auto& f : all_factors) {
        auto q = cleared.divide_by_linear(f);
        REQUIRE(q.has_value());
        cleared = *q;
    }
    CHECK(cleared == Polynomial::one(3));
}

TEST_CASE("canonical rendering") {
    CHECK(parse2("t0^2 - 2/3*t0*t1 + 1").to_string() == "t0^2 - 2/3*t0*t1 + 1");
    CHECK(Polynomial::zero(2).to_string() == "0");
    CHECK((-Polynomial::one(2)).to_string() == "-1");
    CHECK(parse2("-t0 - 1/2").to_string() == "-t0 - 1/2");
    Polynomial p = Polynomial::variable(4, 3).pow(2) * Rational(-5);
    CHECK(p.to_string() == "-5*t3^2");
}

TEST_CASE("parse round-trips the canonical format") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = testsupport::random_polynomial(rng, 3);
        CHECK(parse_polynomial(p.to_string(), 3) == p);
    }
    CHECK_THROWS_AS(parse_polynomial("t9", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t0 t1", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", 2), ParseError);
}

TEST_CASE("ring laws on random inputs") {
    CHECK(properties::ring_laws(200));
}

TEST_CASE("division round-trip on random inputs") {
    CHECK(properties::division_round_trip(200));
}
