#pragma once

#include <vector>

#include "chern/genus_kind.hpp"
#include "chern/rational.hpp"
#include "chern/unipoly.hpp"

namespace chern {

/// Truncated bivariate series sum_{j<=xcap, k<=pcap} a[j][k] x^j t^k where x
/// stands for one Chern root and t is the formal parameter named by var().
/// Multiplication truncates at both caps; two series with parameter content
/// must share the tag, while a parameter-free series (pcap 0, or no k >= 1
/// entries) composes with either.
class FactorSeries {
public:
    FactorSeries(Param var, int xcap, int pcap);

    Param var() const { return var_; }
    int xcap() const { return xcap_; }
    int pcap() const { return pcap_; }

    const Rational& at(int j, int k) const { return a_[index(j, k)]; }
    void set(int j, int k, const Rational& value) { a_[index(j, k)] = value; }
    void add_at(int j, int k, const Rational& value) { a_[index(j, k)] += value; }

    /// Row j as a polynomial in the parameter, with cap pcap().
    UniPoly x_coefficient(int j) const;

    /// Copy of this series on a different truncation window (entries outside
    /// the new window are dropped, missing ones are zero).
    FactorSeries embedded(int xcap, int pcap) const;

    FactorSeries& operator+=(const FactorSeries& o);
    friend FactorSeries operator+(const FactorSeries& a, const FactorSeries& b);
    friend FactorSeries operator*(const FactorSeries& a, const FactorSeries& b);
    FactorSeries& scale(const Rational& s);

    friend bool operator==(const FactorSeries& a, const FactorSeries& b);
    friend bool operator!=(const FactorSeries& a, const FactorSeries& b) { return !(a == b); }

    /// True when no entry with k >= 1 is nonzero (the series does not see t).
    bool parameter_free() const;

private:
    std::size_t index(int j, int k) const;

    Param var_;
    int xcap_;
    int pcap_;
    std::vector<Rational> a_;
};

/// Taylor coefficients of u / (1 - e^{-u}) through order xcap, as a
/// single-variable series (pcap 0). Computed by term-by-term inversion of
/// (1 - e^{-u}) / u, so the defining identity is the only input.
FactorSeries series_todd(int xcap);

/// Coefficients of e^{scale * u}: [1, a, a^2/2!, ...].
FactorSeries series_exp_scaled(const Rational& scale, int xcap);

/// The per-Chern-root factor of the requested genus.
///
/// In the y parametrization: ChiY -> (1 + y e^{-x}) * todd(x),
/// AY multiplies by e^{-x/2}, LY by (1 + e^{-x}).
/// In the z parametrization every transcendental occurrence of x is replaced
/// by x*z: the core is x(1-z) + todd(x*z), AY multiplies by e^{-xz/2}, LY by
/// (1 + e^{-xz}).
FactorSeries genus_factor(GenusKind kind, Param param, int xcap, int pcap);

}  // namespace chern
