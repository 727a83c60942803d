#include "hcm/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <ostream>
#include <utility>

namespace hcm {

namespace {

BigInt gcd_abs(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd_abs(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DivisionByZero("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

namespace {

// Canonical unsigned integer spelling: "0" or a nonzero digit followed by
// digits. Returns the number of characters consumed, 0 on mismatch.
std::size_t scan_canonical_digits(std::string_view s) {
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) return 0;
    if (s[0] == '0') return 1;
    std::size_t i = 1;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    std::size_t nd = scan_canonical_digits(s);
    if (nd == 0) throw ParseError(1, "invalid rational '" + std::string(text) + "'");
    BigInt num(std::string(s.substr(0, nd)));
    if (negative && num == 0)
        throw ParseError(1, "invalid rational '" + std::string(text) + "': negative zero");
    s.remove_prefix(nd);
    BigInt den = 1;
    if (!s.empty()) {
        if (s[0] != '/')
            throw ParseError(1, "invalid rational '" + std::string(text) + "'");
        s.remove_prefix(1);
        std::size_t dd = scan_canonical_digits(s);
        if (dd == 0 || dd != s.size())
            throw ParseError(1, "invalid rational '" + std::string(text) + "'");
        den = BigInt(std::string(s.substr(0, dd)));
        if (den < 2)
            throw ParseError(1, "invalid rational '" + std::string(text) +
                                    "': denominator must be omitted when 1");
        if (gcd_abs(num, den) != 1)
            throw ParseError(1, "invalid rational '" + std::string(text) +
                                    "': not in lowest terms");
    }
    if (negative) num = -num;
    return Rational(unchecked{}, std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hcm
