#include "cosetbound/errors.hpp"
#include "cosetbound/rational.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cosetbound;
using testutil::q;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-2, 6) == Rational(-1, 3));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-3, 9).str() == "-1/3");
    CHECK(Rational(7, 3).den() == 3);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(1, 2) * q(2, 3) == q(1, 3));
    CHECK(q(1, 2) - q(1, 2) == q(0));
    CHECK(q(3, 4) / q(3, 2) == q(1, 2));
    CHECK(q(-5, 7).inverse() == q(-7, 5));
    CHECK(q(-5, 7).abs() == q(5, 7));
    CHECK(q(1, 3) < q(1, 2));
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
    CHECK_THROWS_AS(q(0).inverse(), std::domain_error);
}

TEST_CASE("rational parsing round-trips") {
    CHECK(Rational::parse("2/4") == q(1, 2));
    CHECK(Rational::parse("-7") == q(-7));
    CHECK(Rational::parse("0") == q(0));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);

    testutil::Rng rng(20240801);
    for (int round = 0; round < 200; ++round) {
        const Rational r = rng.rational(1000, 999);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("generalized binomial coefficients") {
    const Rational half(1, 2);
    CHECK(binomial(half, 0) == q(1));
    CHECK(binomial(q(17, 5), 0) == q(1));
    CHECK(binomial(half, 2) == q(-1, 8));
    CHECK(binomial(q(5), 2) == q(10));

    // natural u with i > u vanishes
    for (long u = 0; u <= 6; ++u)
        for (unsigned long i = static_cast<unsigned long>(u) + 1; i <= 8; ++i)
            CHECK(binomial(q(u), i) == q(0));

    // Pascal recurrence at rational arguments
    testutil::Rng rng(7);
    for (int round = 0; round < 50; ++round) {
        const Rational u = rng.rational(9, 9);
        const unsigned long i = static_cast<unsigned long>(rng.integer(1, 6));
        CHECK(binomial(u, i) + binomial(u, i - 1) == binomial(u + q(1), i));
    }
}

TEST_CASE("to_long accepts exactly the machine integers") {
    CHECK(q(-12).to_long() == -12);
    CHECK_THROWS_AS(q(1, 2).to_long(), std::domain_error);
}
