#include <doctest.h>

#include <cmath>
#include <limits>

#include "litgame/errors.hpp"
#include "litgame/probability.hpp"

using namespace litgame;

TEST_CASE("Probability accepts the closed unit interval") {
    CHECK(Probability(0.0).value() == 0.0);
    CHECK(Probability(1.0).value() == 1.0);
    CHECK(Probability(0.25).complement() == 0.75);
}

TEST_CASE("Probability rejects values outside [0, 1]") {
    CHECK_THROWS_AS(Probability(-1e-300), ValidationError);
    CHECK_THROWS_AS(Probability(1.0000000001), ValidationError);
    CHECK_THROWS_AS(Probability(std::numeric_limits<double>::quiet_NaN()), ValidationError);
    CHECK_THROWS_AS(Probability(std::numeric_limits<double>::infinity()), ValidationError);
    CHECK_THROWS_AS(Probability(-std::numeric_limits<double>::infinity()), ValidationError);
}

TEST_CASE("from_computed clamps rounding noise but not real escapes") {
    CHECK(Probability::from_computed(1.0 + 1e-15).value() == 1.0);
    CHECK(Probability::from_computed(-1e-15).value() == 0.0);
    CHECK_THROWS_AS(Probability::from_computed(1.01), InvariantViolation);
    CHECK_THROWS_AS(Probability::from_computed(std::nan("")), InvariantViolation);
}

TEST_CASE("parse_probability") {
    CHECK(parse_probability("0.9", "x").value() == 0.9);
    CHECK(parse_probability("+1", "x").value() == 1.0);
    CHECK(parse_probability("1e-3", "x").value() == 0.001);
    CHECK_THROWS_AS(parse_probability("", "x"), ParseError);
    CHECK_THROWS_AS(parse_probability("abc", "x"), ParseError);
    CHECK_THROWS_AS(parse_probability("0.5x", "x"), ParseError);
    CHECK_THROWS_AS(parse_probability("1.7", "x"), ValidationError);
    CHECK_THROWS_AS(parse_probability("-0.1", "x"), ValidationError);
    CHECK_THROWS_AS(parse_probability("nan", "x"), ValidationError);
    CHECK_THROWS_AS(parse_probability("inf", "x"), ValidationError);
}

TEST_CASE("TestCharacteristics derived error rates") {
    const TestCharacteristics chars(0.9, 0.7);
    CHECK(chars.false_positive_rate().value() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(chars.false_negative_rate().value() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK_THROWS_AS(TestCharacteristics(1.2, 0.5), ValidationError);
    CHECK_THROWS_AS(TestCharacteristics(0.5, -0.5), ValidationError);
}

TEST_CASE("PriorBelief derives p_innocent") {
    const PriorBelief prior(0.6);
    CHECK(prior.p_innocent().value() == 1.0 - 0.6);
    CHECK(prior.p_guilty().value() + prior.p_innocent().value() == doctest::Approx(1.0));
    CHECK_THROWS_AS(PriorBelief(2.0), ValidationError);
}
