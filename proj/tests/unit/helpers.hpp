#pragma once

#include "cosetbound/polynomial.hpp"
#include "cosetbound/rational.hpp"
#include "cosetbound/rational_function.hpp"
#include "cosetbound/series.hpp"

#include <random>
#include <vector>

namespace testutil {

using cosetbound::Polynomial;
using cosetbound::Rational;
using cosetbound::RationalFunction;
using cosetbound::TruncatedSeries;

inline Rational q(long num, long den = 1) {
    return {num, den};
}

inline Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// z, 1-z and friends
inline RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
    return {poly(num), poly(den)};
}

inline TruncatedSeries series(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const long v : coeffs) c.emplace_back(v);
    return TruncatedSeries(std::move(c));
}

struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine);
    }

    Rational rational(long max_abs_num, long max_den) {
        return {integer(-max_abs_num, max_abs_num), integer(1, max_den)};
    }

    Rational nonzero_rational(long max_abs_num, long max_den) {
        while (true) {
            Rational r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    Polynomial polynomial(int max_degree, long max_abs_coeff) {
        const int deg = static_cast<int>(integer(0, max_degree));
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) c.emplace_back(integer(-max_abs_coeff, max_abs_coeff));
        return Polynomial(std::move(c));
    }

    Polynomial nonzero_polynomial(int max_degree, long max_abs_coeff) {
        while (true) {
            Polynomial p = polynomial(max_degree, max_abs_coeff);
            if (!p.is_zero()) return p;
        }
    }

    // nonzero, denominator nonzero at the origin (expandable as a series)
    RationalFunction rational_function(int max_degree, long max_abs_coeff) {
        const Polynomial num = nonzero_polynomial(max_degree, max_abs_coeff);
        while (true) {
            Polynomial den = nonzero_polynomial(max_degree, max_abs_coeff);
            if (!den.coeff(0).is_zero()) return {num, den};
        }
    }

    // additionally nonzero at the origin
    RationalFunction unit_rational_function(int max_degree, long max_abs_coeff) {
        while (true) {
            RationalFunction f = rational_function(max_degree, max_abs_coeff);
            if (!f.num().coeff(0).is_zero()) return f;
        }
    }

    // random 1-unit series of the given order
    TruncatedSeries one_unit(int order, long max_abs_num, long max_den) {
        std::vector<Rational> c(static_cast<std::size_t>(order));
        c[0] = Rational(1);
        for (int i = 1; i < order; ++i) c[static_cast<std::size_t>(i)] = rational(max_abs_num, max_den);
        return TruncatedSeries(std::move(c));
    }

    std::mt19937_64 engine;
};

} // namespace testutil
