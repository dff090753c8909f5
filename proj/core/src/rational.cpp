#include <frobx/rational.hpp>

#include <cctype>
#include <ostream>

namespace frobx {

Rational::Rational(const Int& num, const Int& den) {
    if (den.is_zero())
        throw ZeroDenominator("rational with denominator 0");
    // cpp_rational insists on a positive denominator
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(Int(-num), Int(-den));
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_.is_zero())
        throw ZeroDenominator("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    std::string_view num_part = rest;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part)))
        throw MalformedRational("malformed rational literal: \"" + std::string(text) + "\"");

    Int num{std::string(num_part)};
    if (negative)
        num = -num;
    if (!has_den)
        return Rational(num);
    Int den{std::string(den_part)};
    if (den.is_zero())
        throw ZeroDenominator("zero denominator in rational literal: \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (denominator() != 1) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace frobx
