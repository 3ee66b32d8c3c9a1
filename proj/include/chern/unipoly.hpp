#pragma once

#include <limits>
#include <string>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

/// Formal expansion parameter of a genus series.
enum class Param : unsigned char { Y, Z };

const char* param_name(Param p);

/// Dense univariate polynomial over Rational in a formal parameter,
/// truncated at a fixed exponent cap. Trailing zero coefficients are always
/// trimmed. A constant (or zero) carries no parameter and composes with
/// either tag; combining two non-constant polynomials requires equal tags,
/// and the result cap is the minimum of the operand caps.
class UniPoly {
public:
    static constexpr int kNoCap = std::numeric_limits<int>::max();

    UniPoly() = default;  // zero, cap-free
    UniPoly(Param var, int cap) : var_(var), cap_(check_cap(cap)) {}
    UniPoly(Param var, int cap, std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& value);
    static UniPoly monomial(Param var, int cap, int exponent, const Rational& value);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int cap() const { return cap_; }
    Param var() const { return var_; }

    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& scale(const Rational& s);

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);

    /// Value equality: coefficients match and the parameter tags are
    /// compatible (any tag matches a constant). Caps are bookkeeping, not
    /// part of the value.
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str() const;

private:
    static int check_cap(int cap);
    static Param merge_var(const UniPoly& a, const UniPoly& b);
    void truncate_and_trim();

    Param var_ = Param::Y;
    int cap_ = kNoCap;
    std::vector<Rational> c_;
};

}  // namespace chern
