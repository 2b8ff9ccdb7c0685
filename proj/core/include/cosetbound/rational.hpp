#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cosetbound {

// Exact rational scalar, always in lowest terms with positive denominator.
// Zero is 0/1. All arithmetic is exact; there is no floating point anywhere
// in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, mirrors Z -> Q
    Rational(long num, long den);
    explicit Rational(mpz_class num, mpz_class den = 1);

    // Accepts the canonical text form: optional '-', digits, optional "/digits".
    static Rational parse(std::string_view text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Value as a machine integer; requires is_integer() and fitting range.
    long to_long() const;

    // Canonical form "p/q", with "/q" omitted when q = 1.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws std::domain_error on /0

    Rational inverse() const; // throws std::domain_error on zero
    Rational abs() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_; // kept canonical at all times
};

// Generalized binomial coefficient u(u-1)...(u-i+1)/i!, with value 1 at i = 0.
Rational binomial(const Rational& u, unsigned long i);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace cosetbound
