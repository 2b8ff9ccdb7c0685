#pragma once

#include "cosetbound/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace cosetbound {

// Dense univariate polynomial over Rational, coefficients ascending by
// degree. The stored sequence never ends in a zero; the zero polynomial
// stores no coefficients at all.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant); // NOLINT: implicit constant embedding
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial variable(); // z
    static Polynomial monomial(const Rational& c, std::size_t degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const;
    const Rational& leading() const; // throws std::domain_error on zero
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& at) const;
    Polynomial derivative() const;
    Polynomial shifted(const Rational& c) const; // p(z + c)
    Polynomial monic() const;                    // leading coefficient scaled to 1
    Polynomial pow(unsigned long e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

    // Exact quotient; throws std::domain_error when b does not divide a.
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b);

private:
    void normalize();
    std::vector<Rational> c_;
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Monic lcm; zero when either argument is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace cosetbound
