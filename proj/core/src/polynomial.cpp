#include "cosetbound/polynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cosetbound {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::variable() {
    return Polynomial({Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

bool Polynomial::is_monic() const {
    return !c_.empty() && c_.back().is_one();
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

Rational Polynomial::eval(const Rational& at) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Horner against (z + c): acc <- acc*(z + c) + coefficient.
    Polynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        std::vector<Rational> next(acc.c_.size() + 1);
        for (std::size_t j = 0; j < acc.c_.size(); ++j) {
            next[j + 1] += acc.c_[j];
            next[j] += acc.c_[j] * c;
        }
        acc = Polynomial(std::move(next));
        acc += Polynomial(c_[i]);
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial base = *this, acc(Rational(1));
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = {};
    r = a;
    const Rational inv_lead = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        const Rational factor = r.leading() * inv_lead;
        q += Polynomial::monomial(factor, shift);
        r -= b * Polynomial::monomial(factor, shift);
    }
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    Polynomial q, r;
    Polynomial::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial q, r;
        Polynomial::divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return ((a / gcd(a, b)) * b).monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (!c.is_one()) os << c << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

} // namespace cosetbound
