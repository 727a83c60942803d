#ifndef HCM_RATIONAL_HPP
#define HCM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hcm/errors.hpp"

namespace hcm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Canonical form is an invariant, not a convention: the denominator is
/// always positive, numerator and denominator are always coprime, and zero
/// is always 0/1. Every constructor and operator normalizes, so values may
/// be compared field-by-field.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}  // NOLINT: implicit on purpose
    Rational(long long v) : num_(v), den_(1) {}
    explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(unchecked{}, -a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    /// Parses exactly the canonical grammar produced by str(): an optional
    /// leading '-' on the numerator, no leading zeros, a "/q" part only when
    /// q >= 2, and the fraction already in lowest terms. Anything else
    /// throws ParseError (reported on line 1; callers embed line context).
    static Rational parse(std::string_view text);

private:
    struct unchecked {};
    Rational(unchecked, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hcm

#endif
