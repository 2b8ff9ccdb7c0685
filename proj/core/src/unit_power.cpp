#include "cosetbound/unit_power.hpp"

#include "cosetbound/errors.hpp"

#include <stdexcept>
#include <utility>

namespace cosetbound {

OnePlusSeries::OnePlusSeries(TruncatedSeries body) : body_(std::move(body)) {
    if (!body_.at_origin().is_one())
        throw std::domain_error("series is not a 1-unit: constant term != 1");
}

OnePlusSeries OnePlusSeries::inverse() const {
    return OnePlusSeries(body_.inverse());
}

OnePlusSeries operator*(const OnePlusSeries& a, const OnePlusSeries& b) {
    return OnePlusSeries(a.body_ * b.body_);
}

UnitDecomposition decompose_unit(const TruncatedSeries& f) {
    if (f.at_origin().is_zero())
        throw NotAUnitError("series with zero constant term has no unit decomposition");
    const Rational lead = f.at_origin();
    return {lead, OnePlusSeries(f.scaled(lead.inverse()))};
}

OnePlusSeries pow(const OnePlusSeries& g, const Rational& u) {
    const int order = g.order();
    // d = g - 1 has valuation >= 1, so term i contributes nothing below z^i
    // and the partial sum through i = order-1 is exact.
    const TruncatedSeries d = g.series() - TruncatedSeries::one(order);
    TruncatedSeries acc = TruncatedSeries::one(order);
    TruncatedSeries d_power = TruncatedSeries::one(order);
    Rational coeff(1);
    for (int i = 1; i < order; ++i) {
        d_power = d_power * d;
        if (d_power.is_zero()) break;
        coeff *= (u - Rational(i - 1)) / Rational(i);
        acc = acc + d_power.scaled(coeff);
    }
    return OnePlusSeries(std::move(acc));
}

SeriesTuple::SeriesTuple(std::vector<OnePlusSeries> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("series tuple needs >= 1 entry");
    for (const auto& e : entries_)
        if (e.order() != entries_.front().order())
            throw std::invalid_argument("series tuple entries must share one order");
}

ExponentVector::ExponentVector(std::vector<Rational> components) : c_(std::move(components)) {
    if (c_.empty()) throw std::invalid_argument("exponent vector needs >= 1 component");
}

ExponentVector ExponentVector::integers(const std::vector<long long>& values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (const long long v : values) c.emplace_back(static_cast<long>(v));
    return ExponentVector(std::move(c));
}

bool ExponentVector::is_integral() const {
    for (const auto& c : c_)
        if (!c.is_integer()) return false;
    return true;
}

OnePlusSeries pow(const SeriesTuple& tuple, const ExponentVector& u) {
    if (tuple.size() != u.size())
        throw std::invalid_argument("exponent vector length does not match tuple");
    OnePlusSeries acc = OnePlusSeries::one(tuple.order());
    for (std::size_t j = 0; j < tuple.size(); ++j)
        acc = acc * pow(tuple.entry(j), u.component(j));
    return acc;
}

} // namespace cosetbound
