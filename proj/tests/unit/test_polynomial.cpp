#include "cosetbound/polynomial.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cosetbound;
using testutil::poly;
using testutil::q;

TEST_CASE("polynomial normalization drops trailing zeros") {
    CHECK(Polynomial({q(1), q(2), q(0)}) == poly({1, 2}));
    CHECK(Polynomial({q(0), q(0)}).is_zero());
    CHECK(poly({}).degree() == -1);
    CHECK(poly({0, 0, 3}).degree() == 2);
}

TEST_CASE("polynomial arithmetic and evaluation") {
    const Polynomial p = poly({1, 2, 1}); // (1+z)^2
    CHECK(poly({1, 1}) * poly({1, 1}) == p);
    CHECK(p.eval(q(1)) == q(4));
    CHECK(p.derivative() == poly({2, 2}));
    CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
    CHECK((p - p).is_zero());
}

TEST_CASE("division with remainder") {
    Polynomial quot, rem;
    Polynomial::divmod(poly({-1, 0, 0, 1}), poly({-1, 1}), quot, rem); // z^3-1 = (z-1)(z^2+z+1)
    CHECK(quot == poly({1, 1, 1}));
    CHECK(rem.is_zero());

    Polynomial::divmod(poly({1, 0, 1}), poly({1, 1}), quot, rem);
    CHECK(rem == poly({2}));
    CHECK_THROWS_AS(Polynomial::divmod(poly({1}), poly({}), quot, rem), std::domain_error);
    CHECK_THROWS_AS(poly({1, 0, 1}) / poly({1, 1}), std::domain_error);

    testutil::Rng rng(11);
    for (int round = 0; round < 100; ++round) {
        const Polynomial a = rng.polynomial(6, 4);
        const Polynomial b = rng.nonzero_polynomial(3, 4);
        Polynomial qq, rr;
        Polynomial::divmod(a, b, qq, rr);
        CHECK(a == qq * b + rr);
        CHECK(rr.degree() < b.degree());
    }
}

TEST_CASE("gcd and lcm are monic and divide") {
    const Polynomial a = poly({-1, 0, 1});  // z^2-1
    const Polynomial b = poly({1, 2, 1});   // (z+1)^2
    CHECK(gcd(a, b) == poly({1, 1}));
    CHECK(lcm(a, b) == (a / poly({1, 1})) * b);
    CHECK(gcd(poly({}), poly({})).is_zero());
    CHECK(gcd(poly({0, 3}), poly({})) == poly({0, 1}));

    testutil::Rng rng(13);
    for (int round = 0; round < 100; ++round) {
        const Polynomial x = rng.nonzero_polynomial(4, 3);
        const Polynomial y = rng.nonzero_polynomial(4, 3);
        const Polynomial g = gcd(x, y);
        CHECK((x / g) * g == x);
        CHECK((y / g) * g == y);
        CHECK(g.is_monic());
    }
}

TEST_CASE("shift composes with evaluation") {
    CHECK(poly({1, -1}).shifted(q(-1)) == poly({2, -1})); // 1-z at z-1 gives 2-z
    CHECK(poly({0, 1}).shifted(q(5)) == poly({5, 1}));

    testutil::Rng rng(17);
    for (int round = 0; round < 100; ++round) {
        const Polynomial p = rng.polynomial(5, 4);
        const Rational c = rng.rational(5, 3);
        const Rational at = rng.rational(5, 3);
        CHECK(p.shifted(c).eval(at) == p.eval(at + c));
    }
}
