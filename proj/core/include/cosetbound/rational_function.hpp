#pragma once

#include "cosetbound/polynomial.hpp"
#include "cosetbound/rational.hpp"

#include <iosfwd>
#include <vector>

namespace cosetbound {

// Quotient of polynomials num/den in lowest terms: gcd(num, den) = 1 and den
// monic. Zero is 0/1. Field operations are exact.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& constant) // NOLINT: implicit embedding of Q
        : num_(constant), den_(Rational(1)) {}
    RationalFunction(Polynomial num); // NOLINT: implicit embedding of Q[z]
    RationalFunction(Polynomial num, Polynomial den); // throws std::domain_error on den = 0

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_constant() const; // throws std::domain_error when not constant

    // max(deg num, deg den); 0 for the zero function.
    long degree() const;

    Rational eval(const Rational& at) const; // throws PoleError at a pole
    bool defined_and_nonzero_at(const Rational& at) const;

    // f(z + c); a field automorphism of Q(z).
    RationalFunction shifted(const Rational& c) const;

    RationalFunction derivative() const;
    RationalFunction inverse() const; // throws std::domain_error on zero
    RationalFunction pow(long e) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

// First c in the order 0, 1, -1, 2, -2, ... at which every given function is
// defined and nonzero. Each nonzero function excludes finitely many
// candidates, so the scan terminates. All inputs must be nonzero.
Rational choose_basepoint(const std::vector<RationalFunction>& fs);

// Product form constant * prod_i poly_i^exp_i. The factor polynomials are
// non-constant, monic and pairwise coprime; exponents are nonzero integers.
// Irreducibility of the factors is not required (and not checked).
class FactoredRationalFunction {
public:
    struct Factor {
        Polynomial poly;
        long exp = 0;
    };

    // Validates the invariants above; throws std::domain_error on violation.
    FactoredRationalFunction(Rational constant, std::vector<Factor> factors);

    const Rational& constant() const { return constant_; }
    const std::vector<Factor>& factors() const { return factors_; }

    RationalFunction expand() const;

private:
    Rational constant_;
    std::vector<Factor> factors_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

} // namespace cosetbound
