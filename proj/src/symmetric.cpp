#include "chern/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "chern/errors.hpp"

namespace chern {

MvPoly<Rational> elementary(int k, int n) {
    if (n < 0) throw std::invalid_argument("elementary: negative variable count");
    MvPoly<Rational> out(n);
    if (k < 0 || k > n) return out;
    if (k == 0) return MvPoly<Rational>::constant(n, Rational(1));
    // Walk the k-subsets of {0..n-1} in lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    Exponents e(static_cast<std::size_t>(n), 0);
    while (true) {
        std::fill(e.begin(), e.end(), 0);
        for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
        out.add_term(e, Rational(1));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return out;
}

namespace {

// Homogeneous symmetric polynomials compressed to one coefficient per
// monomial orbit: the key is the sorted exponent pattern. The canonical
// partition order lists [n] first, which is exactly the graded-lex leading
// monomial, so begin() of such a map is the elimination pivot.
using PatternPoly = std::map<Partition, Rational>;

// f * e_k in pattern form, gathered backwards: the coefficient at pattern nu
// sums f's coefficients at nu - 1_S over all k-subsets S of the n slots.
PatternPoly pattern_mul_elementary(const PatternPoly& f, int k, int n) {
    PatternPoly out;
    if (f.empty() || k > n) return out;
    const int weight = f.begin()->first.weight() + k;
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (const Partition& nu : partitions_of(weight)) {
        if (nu.length() > static_cast<std::size_t>(n)) continue;
        Exponents padded(static_cast<std::size_t>(n), 0);
        std::copy(nu.parts().begin(), nu.parts().end(), padded.begin());
        Rational acc(0);
        // walk the k-subsets of the n slots
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            bool valid = true;
            for (int i : subset) {
                if (padded[static_cast<std::size_t>(i)] < 1) {
                    valid = false;
                    break;
                }
            }
            if (valid) {
                std::vector<int> alpha;
                alpha.reserve(padded.size());
                for (std::size_t i = 0; i < padded.size(); ++i) alpha.push_back(padded[i]);
                for (int i : subset) alpha[static_cast<std::size_t>(i)] -= 1;
                std::erase(alpha, 0);
                auto it = f.find(Partition(std::move(alpha)));
                if (it != f.end()) acc += it->second;
            }
            int pos = k - 1;
            while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++subset[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) {
                subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
        if (!acc.is_zero()) out.emplace(nu, std::move(acc));
    }
    return out;
}

// Pattern form of e_{lambda_1} * ... * e_{lambda_l}, memoized per (n, lambda).
// Entries are immutable once inserted and map nodes are stable, so handing
// out references is safe across threads.
const PatternPoly& basis_pattern(const Partition& lambda, int n) {
    static std::map<std::pair<int, Partition>, PatternPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_pair(n, lambda);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PatternPoly prod{{Partition(), Rational(1)}};
        for (int part : lambda.parts()) prod = pattern_mul_elementary(prod, part, n);
        it = cache.emplace(key, std::move(prod)).first;
    }
    return it->second;
}

constexpr int kEliminationGuard = 1 << 20;

template <class C>
C scaled_by(const C& value, const Rational& s);

template <>
Rational scaled_by<Rational>(const Rational& value, const Rational& s) {
    return value * s;
}

template <>
UniPoly scaled_by<UniPoly>(const UniPoly& value, const Rational& s) {
    UniPoly out = value;
    out.scale(s);
    return out;
}

// The shared elimination: works over Rational or parameter-polynomial
// coefficients, since the basis side is always rational.
template <class C>
std::map<Partition, C> reduce_patterns(const MvPoly<C>& f, int n) {
    if (f.nvars() != n) {
        throw std::invalid_argument("reduce_to_chern: variable count disagrees with weight");
    }
    std::map<Partition, C> out;
    if (f.is_zero()) return out;
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) != n) {
            throw non_homogeneous_error("reduce_to_chern: input not homogeneous of degree " +
                                        std::to_string(n));
        }
    }
    if (!is_symmetric(f)) {
        throw non_symmetric_error("reduce_to_chern: input changes under a transposition");
    }

    // orbit representatives: terms with non-increasing exponents
    std::map<Partition, C> rem;
    for (const auto& [e, c] : f.terms()) {
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
            std::vector<int> parts;
            for (int x : e) {
                if (x > 0) parts.push_back(x);
            }
            rem.emplace(Partition(std::move(parts)), c);
        }
    }

    int guard = 0;
    while (!rem.empty()) {
        if (++guard > kEliminationGuard) {
            throw no_termination_error("reduce_to_chern: elimination failed to terminate");
        }
        const Partition mu = rem.begin()->first;
        const C coeff = std::move(rem.begin()->second);
        rem.erase(rem.begin());
        // The leading monomial of prod_j e_{mu'_j} is x^mu, so subtracting
        // the conjugate product cancels the lead exactly.
        const Partition lambda = mu.conjugate();
        for (const auto& [pattern, base] : basis_pattern(lambda, n)) {
            if (pattern == mu) continue;  // the unit lead, just consumed
            auto it = rem.find(pattern);
            if (it == rem.end()) {
                rem.emplace(pattern, scaled_by(coeff, -base));
            } else {
                it->second += scaled_by(coeff, -base);
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        out.emplace(lambda, std::move(coeff));
    }
    return out;
}

}  // namespace

ChernCombo reduce_to_chern(const MvPoly<Rational>& f, int n) {
    ChernCombo out(n);
    for (auto& [lambda, coeff] : reduce_patterns(f, n)) out.add(lambda, coeff);
    return out;
}

std::map<Partition, UniPoly> reduce_to_chern_batch(const MvPoly<UniPoly>& f, int n) {
    return reduce_patterns(f, n);
}

std::string_view h_name(HExpr which) {
    switch (which) {
        case HExpr::H1: return "h1";
        case HExpr::H11: return "h11";
        case HExpr::H2: return "h2";
        case HExpr::H12: return "h12";
        case HExpr::H22: return "h22";
        case HExpr::H3: return "h3";
    }
    throw std::invalid_argument("unknown h expression tag");
}

namespace {

// prod_{k != skip_a, skip_b} (1 + x_k)
MvPoly<Rational> ones_product_excluding(int n, int skip_a, int skip_b) {
    MvPoly<Rational> prod = MvPoly<Rational>::constant(n, Rational(1));
    for (int k = 0; k < n; ++k) {
        if (k == skip_a || k == skip_b) continue;
        MvPoly<Rational> factor = MvPoly<Rational>::constant(n, Rational(1));
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = 1;
        factor.add_term(e, Rational(1));
        prod = prod * factor;
    }
    return prod;
}

MvPoly<Rational> mv_monomial(int n, std::initializer_list<std::pair<int, int>> powers) {
    MvPoly<Rational> m(n);
    Exponents e(static_cast<std::size_t>(n), 0);
    for (auto [var, power] : powers) e[static_cast<std::size_t>(var)] = power;
    m.add_term(e, Rational(1));
    return m;
}

}  // namespace

MvPoly<Rational> h_polynomial(HExpr which, int n) {
    if (n < 1) throw std::invalid_argument("h_polynomial: n must be at least 1");
    MvPoly<Rational> acc(n);
    switch (which) {
        case HExpr::H1:
        case HExpr::H2:
        case HExpr::H3: {
            const int power = which == HExpr::H1 ? 1 : which == HExpr::H2 ? 2 : 3;
            for (int i = 0; i < n; ++i) {
                acc += mv_monomial(n, {{i, power}}) * ones_product_excluding(n, i, -1);
            }
            break;
        }
        case HExpr::H11:
        case HExpr::H12:
        case HExpr::H22: {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    MvPoly<Rational> head(n);
                    if (which == HExpr::H11) {
                        head = mv_monomial(n, {{i, 1}, {j, 1}});
                    } else if (which == HExpr::H22) {
                        head = mv_monomial(n, {{i, 2}, {j, 2}});
                    } else {
                        head = mv_monomial(n, {{i, 2}, {j, 1}}) + mv_monomial(n, {{i, 1}, {j, 2}});
                    }
                    acc += head * ones_product_excluding(n, i, j);
                }
            }
            break;
        }
    }
    return acc;
}

ChernCombo h_reduced(HExpr which, int n) {
    return reduce_to_chern(h_component(h_polynomial(which, n), n), n);
}

ChernCombo h_closed_form(HExpr which, int n) {
    if (n < 1) throw std::invalid_argument("h_closed_form: n must be at least 1");
    ChernCombo combo(n);
    switch (which) {
        case HExpr::H1:
            add_chern_monomial(combo, {n}, Rational(n));
            break;
        case HExpr::H11:
            add_chern_monomial(combo, {n}, Rational(static_cast<long>(n) * (n - 1), 2));
            break;
        case HExpr::H2:
            add_chern_monomial(combo, {n}, Rational(-n));
            add_chern_monomial(combo, {n - 1, 1}, Rational(1));
            break;
        case HExpr::H12:
            add_chern_monomial(combo, {n}, Rational(-static_cast<long>(n) * (n - 2)));
            add_chern_monomial(combo, {n - 1, 1}, Rational(n - 2));
            break;
        case HExpr::H22:
            add_chern_monomial(combo, {n}, Rational(static_cast<long>(n) * (n - 3), 2));
            add_chern_monomial(combo, {n - 1, 1}, Rational(-(n - 2)));
            add_chern_monomial(combo, {n - 2, 2}, Rational(1));
            break;
        case HExpr::H3:
            add_chern_monomial(combo, {n}, Rational(n));
            add_chern_monomial(combo, {n - 1, 1}, Rational(-1));
            add_chern_monomial(combo, {n - 2, 1, 1}, Rational(1));
            add_chern_monomial(combo, {n - 2, 2}, Rational(-2));
            break;
    }
    return combo;
}

Report verify_h_identities(int n) {
    if (n < 2) throw std::invalid_argument("verify_h_identities: n must be at least 2");
    Report report;
    for (HExpr which : {HExpr::H1, HExpr::H11, HExpr::H2, HExpr::H12, HExpr::H22, HExpr::H3}) {
        ChernCombo lhs = h_reduced(which, n);
        ChernCombo rhs = h_closed_form(which, n);
        const bool pass = lhs == rhs;
        report.push_back(IdentityCheck{n, std::string(h_name(which)), pass, std::move(lhs),
                                       std::move(rhs)});
    }
    return report;
}

}  // namespace chern
