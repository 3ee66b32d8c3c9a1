#include "chern/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace chern {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// mpz_set_str takes "-123" but not "+123".
Integer parse_integer(std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text)) {
        throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
    }
    Integer num = parse_integer(num_text);
    if (slash == std::string_view::npos) return Rational(num);

    std::string_view den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text)) {
        throw std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
    }
    return Rational(num, parse_integer(den_text));
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
    return numerator();
}

Rational pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    const bool invert = exp < 0;
    if (invert && base.is_zero()) throw std::domain_error("pow: zero base, negative exponent");
    const auto e = static_cast<unsigned long>(invert ? -static_cast<long>(exp) : exp);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return invert ? Rational(den, num) : Rational(num, den);
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace chern
