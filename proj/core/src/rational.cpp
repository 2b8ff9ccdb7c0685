#include "cosetbound/rational.hpp"

#include "cosetbound/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace cosetbound {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
    if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // ^-?[0-9]+(/[0-9]+)?$ with a nonzero part after '/'
    const auto bad = [&] { return ParseError("invalid rational: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0) throw bad();
    if (i != text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        digits = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
        if (digits == 0 || i != text.size()) throw bad();
    }
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0) throw bad();
    if (v.get_den() == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
    const mpz_class n = num();
    if (!n.fits_slong_p()) throw std::domain_error("integer out of machine range: " + str());
    return n.get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational binomial(const Rational& u, unsigned long i) {
    Rational result(1);
    for (unsigned long j = 0; j < i; ++j) {
        result *= u - Rational(static_cast<long>(j));
        result /= Rational(static_cast<long>(j) + 1);
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace cosetbound
