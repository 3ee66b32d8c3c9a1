#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace chern {

using Integer = mpz_class;

/// Exact rational scalar. Always kept normalized: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Every arithmetic result is re-normalized, so no
/// operation can observe a non-canonical value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "p/q" or "p" (optional leading sign, base 10). Throws
    /// std::invalid_argument on malformed text, std::domain_error on q = 0.
    static Rational from_string(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// The value as an Integer; throws std::domain_error unless is_integer().
    Integer to_integer() const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r(a); r += b; return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r(a); r -= b; return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r(a); r *= b; return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        Rational r(a); r /= b; return r;
    }
    friend Rational operator-(const Rational& a) {
        Rational r; r.v_ = -a.v_; return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

/// base^exp with exact arithmetic; negative exponents invert (throws on 0).
Rational pow(const Rational& base, int exp);

/// Binomial coefficient; 0 outside 0 <= k <= n.
Integer binomial(int n, int k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace chern
