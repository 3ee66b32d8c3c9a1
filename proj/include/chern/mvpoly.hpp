#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chern/factor_series.hpp"
#include "chern/rational.hpp"
#include "chern/unipoly.hpp"

namespace chern {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lexicographic term order, leading terms first: higher total degree
/// wins, ties broken by the lexicographically larger exponent vector.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial in the Chern-root variables x_1..x_n over
/// a coefficient ring (Rational or UniPoly). Terms of total degree above the
/// variable count are dropped at construction and after every product: only
/// the degree-n component survives evaluation against a fundamental class,
/// so nothing of value is lost and the n-fold factor products stay tractable.
template <class C>
class MvPoly {
public:
    using Terms = std::map<Exponents, C, TermOrder>;

    explicit MvPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("MvPoly: negative variable count");
    }

    static MvPoly constant(int nvars, const C& value) {
        MvPoly p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), value);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of the given exponent vector (zero if absent).
    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(const Exponents& e, const C& value) {
        if (e.size() != static_cast<std::size_t>(nvars_)) {
            throw std::invalid_argument("MvPoly: exponent vector length mismatch");
        }
        for (int x : e) {
            if (x < 0) throw std::invalid_argument("MvPoly: negative exponent");
        }
        if (value.is_zero() || total_degree(e) > nvars_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, value);
        } else {
            it->second += value;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MvPoly& operator+=(const MvPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MvPoly& operator-=(const MvPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    /// this += factor * o. Both term maps share one order, so this is a
    /// linear merge rather than a lookup per term.
    MvPoly& add_scaled(const MvPoly& o, const C& factor) {
        check_same_vars(o);
        if (factor.is_zero()) return *this;
        Terms merged;
        const TermOrder before;
        auto ia = terms_.begin();
        auto ib = o.terms_.begin();
        while (ia != terms_.end() || ib != o.terms_.end()) {
            if (ib == o.terms_.end() ||
                (ia != terms_.end() && before(ia->first, ib->first))) {
                merged.emplace_hint(merged.end(), ia->first, std::move(ia->second));
                ++ia;
            } else if (ia == terms_.end() || before(ib->first, ia->first)) {
                C scaled = ib->second * factor;
                if (!scaled.is_zero()) {
                    merged.emplace_hint(merged.end(), ib->first, std::move(scaled));
                }
                ++ib;
            } else {
                C sum = std::move(ia->second);
                sum += ib->second * factor;
                if (!sum.is_zero()) merged.emplace_hint(merged.end(), ia->first, std::move(sum));
                ++ia;
                ++ib;
            }
        }
        terms_.swap(merged);
        return *this;
    }

    MvPoly& scale(const C& factor) {
        MvPoly r(nvars_);
        r.add_scaled(*this, factor);
        terms_.swap(r.terms_);
        return *this;
    }

    friend MvPoly operator+(const MvPoly& a, const MvPoly& b) {
        MvPoly r = a;
        r += b;
        return r;
    }

    friend MvPoly operator-(const MvPoly& a, const MvPoly& b) {
        MvPoly r = a;
        r -= b;
        return r;
    }

    friend MvPoly operator-(const MvPoly& a) {
        MvPoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MvPoly operator*(const MvPoly& a, const MvPoly& b) {
        a.check_same_vars(b);
        // The genus pipeline multiplies by per-root factors living in a
        // single variable; shifting one coordinate preserves the term order,
        // which turns that product into linear merges.
        if (int var = 0; single_variable_support(b, var)) return mul_by_univariate(a, b, var);
        if (int var = 0; single_variable_support(a, var)) return mul_by_univariate(b, a, var);
        MvPoly r(a.nvars_);
        Exponents e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.nvars_) continue;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                C c = ca * cb;
                if (c.is_zero()) continue;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(e, std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    friend bool operator==(const MvPoly& a, const MvPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MvPoly& a, const MvPoly& b) { return !(a == b); }

private:
    void check_same_vars(const MvPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MvPoly: variable count mismatch");
    }

    /// True when every term involves at most one common variable; var_out is
    /// that variable (0 for a constant).
    static bool single_variable_support(const MvPoly& p, int& var_out) {
        int var = -1;
        for (const auto& [e, c] : p.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (var != -1 && var != static_cast<int>(i)) return false;
                var = static_cast<int>(i);
            }
        }
        var_out = var < 0 ? 0 : var;
        return true;
    }

    /// a * b where b lives in the single variable var: each power j of that
    /// variable turns a's term sequence into an ordered stream (a common
    /// shift of one coordinate preserves the term order, and the terms
    /// overflowing the degree cap form a prefix), so the product is one
    /// k-way merge emitting keys in final order.
    static MvPoly mul_by_univariate(const MvPoly& a, const MvPoly& b, int var) {
        MvPoly out(a.nvars_);
        struct Head {
            typename Terms::const_iterator it;
            const C* factor;
            int shift;
            Exponents key;
        };
        std::vector<Head> heads;
        for (const auto& [eb, cb] : b.terms_) {
            const int j = eb[static_cast<std::size_t>(var)];
            auto it = a.terms_.begin();
            while (it != a.terms_.end() && total_degree(it->first) + j > a.nvars_) ++it;
            if (it == a.terms_.end()) continue;
            Exponents key = it->first;
            key[static_cast<std::size_t>(var)] += j;
            heads.push_back(Head{it, &cb, j, std::move(key)});
        }
        const TermOrder before;
        const auto advance = [&](std::size_t h) {
            ++heads[h].it;
            if (heads[h].it == a.terms_.end()) {
                heads.erase(heads.begin() + static_cast<std::ptrdiff_t>(h));
                return;
            }
            heads[h].key = heads[h].it->first;
            heads[h].key[static_cast<std::size_t>(var)] += heads[h].shift;
        };
        while (!heads.empty()) {
            std::size_t lead = 0;
            for (std::size_t h = 1; h < heads.size(); ++h) {
                if (before(heads[h].key, heads[lead].key)) lead = h;
            }
            Exponents key = heads[lead].key;
            C sum = heads[lead].it->second * (*heads[lead].factor);
            advance(lead);
            for (std::size_t h = 0; h < heads.size();) {
                if (heads[h].key == key) {
                    sum += heads[h].it->second * (*heads[h].factor);
                    advance(h);  // erase may shift later heads down; recheck index h
                } else {
                    ++h;
                }
            }
            if (!sum.is_zero()) out.terms_.emplace_hint(out.terms_.end(), std::move(key), std::move(sum));
        }
        return out;
    }

    int nvars_;
    Terms terms_;
};

/// Instantiates the per-root factor at variable var_index (0-based): the
/// coefficient of x_{var_index}^j is the parameter polynomial sum_k a[j][k] t^k.
inline MvPoly<UniPoly> substitute(const FactorSeries& series, int var_index, int nvars) {
    if (var_index < 0 || var_index >= nvars) {
        throw std::out_of_range("substitute: root index out of range");
    }
    if (series.xcap() < nvars) {
        throw std::invalid_argument("substitute: series x-order cap below variable count");
    }
    MvPoly<UniPoly> p(nvars);
    for (int j = 0; j <= nvars; ++j) {
        UniPoly c = series.x_coefficient(j);
        if (c.is_zero()) continue;
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(var_index)] = j;
        p.add_term(e, c);
    }
    return p;
}

/// Slice of a parameter-valued polynomial at t^k.
inline MvPoly<Rational> param_coefficient(const MvPoly<UniPoly>& f, int k) {
    MvPoly<Rational> out(f.nvars());
    for (const auto& [e, c] : f.terms()) out.add_term(e, c.coeff(k));
    return out;
}

/// Exact evaluation at a rational point.
inline Rational evaluate_at(const MvPoly<Rational>& f, const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(f.nvars())) {
        throw std::invalid_argument("evaluate_at: point dimension mismatch");
    }
    Rational acc(0);
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (e[i] != 0) term *= pow(point[i], e[i]);
        }
        acc += term;
    }
    return acc;
}

}  // namespace chern
