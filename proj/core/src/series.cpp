#include "cosetbound/series.hpp"

#include "cosetbound/errors.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cosetbound {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs order >= 1");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 1) throw std::invalid_argument("series needs order >= 1");
    return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order)));
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
    TruncatedSeries s = zero(order);
    s.c_[0] = value;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
}

int TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order < 1 || order > this->order())
        throw std::invalid_argument("truncation order out of range");
    return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + order));
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rational> sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(sum));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rational> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = a.c_[i] - b.c_[i];
    return TruncatedSeries(std::move(diff));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.c_.size(), b.c_.size());
    std::vector<Rational> prod(n);
    for (std::size_t i = 0; i < n && i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n && j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return TruncatedSeries(std::move(prod));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw NotAUnitError("series with zero constant term has no inverse");
    const Rational lead_inv = c_[0].inverse();
    std::vector<Rational> inv(c_.size());
    inv[0] = lead_inv;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * inv[k - i];
        inv[k] = -acc * lead_inv;
    }
    return TruncatedSeries(std::move(inv));
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() < 2) throw std::invalid_argument("derivative needs order >= 2");
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return TruncatedSeries(std::move(d));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series comparison requires equal orders");
    return a.c_ == b.c_;
}

TruncatedSeries expand(const RationalFunction& f, int order) {
    if (order < 1) throw std::invalid_argument("series needs order >= 1");
    if (f.den().coeff(0).is_zero())
        throw PoleAtOriginError("expansion of a function with a pole at the origin");
    const auto to_series = [order](const Polynomial& p) {
        std::vector<Rational> c(static_cast<std::size_t>(order));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i);
        return TruncatedSeries(std::move(c));
    };
    return to_series(f.num()) * to_series(f.den()).inverse();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    os << "[";
    for (int i = 0; i < s.order(); ++i) {
        if (i > 0) os << ", ";
        os << s.coeff(i);
    }
    return os << "] + O(z^" << s.order() << ")";
}

} // namespace cosetbound
