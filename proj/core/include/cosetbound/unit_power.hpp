#pragma once

#include "cosetbound/rational.hpp"
#include "cosetbound/series.hpp"

#include <vector>

namespace cosetbound {

// Series with constant coefficient exactly 1. These form a group under
// multiplication, and carry well-defined powers f^u for every rational u:
// f^u = sum_i binomial(u, i) (f-1)^i, which is a finite sum per coefficient
// because f-1 has positive valuation. Truncation is therefore exact.
class OnePlusSeries {
public:
    explicit OnePlusSeries(TruncatedSeries body); // throws std::domain_error unless body(0) = 1

    static OnePlusSeries one(int order) { return OnePlusSeries(TruncatedSeries::one(order)); }

    const TruncatedSeries& series() const { return body_; }
    int order() const { return body_.order(); }

    OnePlusSeries inverse() const;
    friend OnePlusSeries operator*(const OnePlusSeries& a, const OnePlusSeries& b);
    friend bool operator==(const OnePlusSeries& a, const OnePlusSeries& b) {
        return a.body_ == b.body_;
    }

private:
    TruncatedSeries body_;
};

struct UnitDecomposition {
    Rational lead;      // f(0)
    OnePlusSeries unit; // f / f(0)
};

// Splits f = lead * unit with unit in 1 + z*Q[[z]].
// Throws NotAUnitError when f(0) = 0.
UnitDecomposition decompose_unit(const TruncatedSeries& f);

// g^u for rational u, exact through the truncation order.
OnePlusSeries pow(const OnePlusSeries& g, const Rational& u);

// Tuple of 1-units sharing one truncation order.
class SeriesTuple {
public:
    explicit SeriesTuple(std::vector<OnePlusSeries> entries); // >= 1 entry, equal orders

    std::size_t size() const { return entries_.size(); }
    const OnePlusSeries& entry(std::size_t j) const { return entries_[j]; }
    int order() const { return entries_.front().order(); }

private:
    std::vector<OnePlusSeries> entries_;
};

// Rational exponent vector, applied componentwise against a SeriesTuple of
// matching length.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<Rational> components);
    static ExponentVector integers(const std::vector<long long>& values);

    std::size_t size() const { return c_.size(); }
    const Rational& component(std::size_t j) const { return c_[j]; }
    const std::vector<Rational>& components() const { return c_; }
    bool is_integral() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) = default;

private:
    std::vector<Rational> c_;
};

// B^u = prod_j entry_j ^ u_j. Lengths must match.
OnePlusSeries pow(const SeriesTuple& tuple, const ExponentVector& u);

} // namespace cosetbound
