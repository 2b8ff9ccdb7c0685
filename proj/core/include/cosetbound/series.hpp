#pragma once

#include "cosetbound/rational.hpp"
#include "cosetbound/rational_function.hpp"

#include <iosfwd>
#include <vector>

namespace cosetbound {

// Formal power series truncated to a fixed order M: the coefficients of
// z^0 .. z^{M-1}. Binary operations truncate to the minimum order of their
// operands; equality requires equal orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coeffs); // order = size >= 1

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(const Rational& value, int order);
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& at_origin() const { return c_[0]; }
    bool is_zero() const;

    // Index of the first nonzero coefficient, or -1 when none within order.
    int valuation() const;

    TruncatedSeries truncated(int order) const; // order in [1, this->order()]

    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rational& s) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries inverse() const;    // throws NotAUnitError when coeff(0) = 0
    TruncatedSeries derivative() const; // order M-1; requires order >= 2

    // Throws std::invalid_argument when orders differ.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> c_;
};

// Power-series expansion of f at the origin to the given order.
// Throws PoleAtOriginError when den(0) = 0.
TruncatedSeries expand(const RationalFunction& f, int order);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

} // namespace cosetbound
