#pragma once

#include <map>
#include <string>
#include <vector>

#include "chern/json.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace chern {

/// A rational linear combination of Chern numbers c_lambda[M] for partitions
/// lambda of a fixed weight n: the canonical output form for any genus index
/// or identity side. No zero coefficients are stored; keys are kept in
/// canonical partition order.
class ChernCombo {
public:
    explicit ChernCombo(int weight);

    int weight() const { return weight_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * c_key; the key weight must equal the combo weight.
    void add(const Partition& key, const Rational& coeff);

    Rational coeff(const Partition& key) const;

    ChernCombo& operator+=(const ChernCombo& o);
    ChernCombo& operator-=(const ChernCombo& o);
    ChernCombo& scale(const Rational& s);

    friend ChernCombo operator+(const ChernCombo& a, const ChernCombo& b) {
        ChernCombo r = a;
        r += b;
        return r;
    }
    friend ChernCombo operator-(const ChernCombo& a, const ChernCombo& b) {
        ChernCombo r = a;
        r -= b;
        return r;
    }
    friend ChernCombo operator*(const Rational& s, const ChernCombo& c) {
        ChernCombo r = c;
        r.scale(s);
        return r;
    }

    friend bool operator==(const ChernCombo& a, const ChernCombo& b) {
        return a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ChernCombo& a, const ChernCombo& b) { return !(a == b); }

    /// Human-readable form in canonical order, e.g. "c2·c1 - 3·c3"; "0" when empty.
    std::string str() const;

private:
    int weight_;
    std::map<Partition, Rational> terms_;
};

/// Adds coeff * c_{parts[0]} * c_{parts[1]} * ... with the closed-form
/// conventions: a part equal to 0 is the unit c_0 and is dropped; any
/// negative part makes the whole term vanish. After dropping units the parts
/// must sum to the combo weight.
void add_chern_monomial(ChernCombo& combo, std::vector<int> parts, const Rational& coeff);

/// {"weight": n, "terms": [{"partition": [...], "coeff": "p/q"}, ...]}
/// with partitions in canonical order.
njson combo_to_json(const ChernCombo& combo);
ChernCombo combo_from_json(const njson& j);

}  // namespace chern
