#include "cosetbound/rational_function.hpp"

#include "cosetbound/errors.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cosetbound {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        num_ *= lead.inverse();
        den_ = den_.monic();
    }
}

Rational RationalFunction::as_constant() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

long RationalFunction::degree() const {
    return std::max<long>(std::max(num_.degree(), den_.degree()), 0);
}

Rational RationalFunction::eval(const Rational& at) const {
    const Rational d = den_.eval(at);
    if (d.is_zero()) throw PoleError("evaluation at a pole: z = " + at.str());
    return num_.eval(at) / d;
}

bool RationalFunction::defined_and_nonzero_at(const Rational& at) const {
    return !den_.eval(at).is_zero() && !num_.eval(at).is_zero();
}

RationalFunction RationalFunction::shifted(const Rational& c) const {
    return {num_.shifted(c), den_.shifted(c)};
}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero function");
    return {den_, num_};
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return {num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e))};
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    num_ *= o.den_;
    den_ *= o.num_;
    if (den_.is_zero()) throw std::domain_error("division by the zero function");
    normalize();
    return *this;
}

Rational choose_basepoint(const std::vector<RationalFunction>& fs) {
    for (const auto& f : fs)
        if (f.is_zero()) throw std::domain_error("choose_basepoint over a zero function");
    const auto all_ok = [&](const Rational& c) {
        for (const auto& f : fs)
            if (!f.defined_and_nonzero_at(c)) return false;
        return true;
    };
    Rational c(0);
    if (all_ok(c)) return c;
    for (long k = 1;; ++k) {
        if (all_ok(Rational(k))) return Rational(k);
        if (all_ok(Rational(-k))) return Rational(-k);
    }
}

FactoredRationalFunction::FactoredRationalFunction(Rational constant, std::vector<Factor> factors)
    : constant_(std::move(constant)), factors_(std::move(factors)) {
    if (constant_.is_zero()) throw std::domain_error("factored form with zero constant");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& [poly, exp] = factors_[i];
        if (poly.degree() < 1) throw std::domain_error("factored form with constant factor");
        if (!poly.is_monic()) throw std::domain_error("factored form with non-monic factor");
        if (exp == 0) throw std::domain_error("factored form with zero exponent");
        for (std::size_t j = i + 1; j < factors_.size(); ++j) {
            if (gcd(poly, factors_[j].poly).degree() > 0)
                throw std::domain_error("factored form with non-coprime factors");
        }
    }
}

RationalFunction FactoredRationalFunction::expand() const {
    RationalFunction result{constant_};
    for (const auto& [poly, exp] : factors_) result *= RationalFunction(poly).pow(exp);
    return result;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    if (f.den() == Polynomial(Rational(1))) return os << "(" << f.num() << ")";
    return os << "(" << f.num() << ")/(" << f.den() << ")";
}

} // namespace cosetbound
