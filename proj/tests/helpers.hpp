#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "chern/chern_combo.hpp"
#include "chern/mvpoly.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"
#include "chern/unipoly.hpp"

namespace chern::testing {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline Rational rand_rational(std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return Rational(static_cast<long>(num(rng)), static_cast<long>(den(rng)));
}

inline UniPoly rand_unipoly(std::mt19937& rng, Param var, int cap) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(cap) + 1);
    for (auto& c : coeffs) c = rand_rational(rng);
    return UniPoly(var, cap, std::move(coeffs));
}

inline MvPoly<Rational> rand_mvpoly(std::mt19937& rng, int nvars, int terms) {
    MvPoly<Rational> p(nvars);
    std::uniform_int_distribution<int> exp(0, nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = exp(rng);
        p.add_term(e, rand_rational(rng));
    }
    return p;
}

/// Values e_0..e_n at a point, read off the coefficients of prod_i (1 + t x_i).
/// Deliberately avoids the library's elementary() so combo evaluation is an
/// independent oracle.
inline std::vector<Rational> elementary_values_at(const std::vector<Rational>& point) {
    std::vector<Rational> e(point.size() + 1, Rational(0));
    e[0] = Rational(1);
    std::size_t filled = 0;
    for (const Rational& x : point) {
        ++filled;
        for (std::size_t k = filled; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

/// sum_lambda combo(lambda) * prod_j e_{lambda_j}(point).
inline Rational eval_combo_at(const ChernCombo& combo, const std::vector<Rational>& point) {
    const std::vector<Rational> e = elementary_values_at(point);
    Rational acc(0);
    for (const auto& [key, coeff] : combo.terms()) {
        Rational term = coeff;
        for (int part : key.parts()) term *= e[static_cast<std::size_t>(part)];
        acc += term;
    }
    return acc;
}

inline std::vector<Rational> rand_point(std::mt19937& rng, int nvars) {
    std::vector<Rational> point(static_cast<std::size_t>(nvars));
    for (auto& x : point) x = rand_rational(rng, 5);
    return point;
}

/// Monomial symmetric polynomial m_mu in nvars variables: the sum of all
/// distinct permutations of the exponent pattern mu.
inline MvPoly<Rational> monomial_symmetric(const Partition& mu, int nvars) {
    MvPoly<Rational> out(nvars);
    if (mu.length() > static_cast<std::size_t>(nvars)) {
        throw std::invalid_argument("monomial_symmetric: more parts than variables");
    }
    Exponents e(static_cast<std::size_t>(nvars), 0);
    std::copy(mu.parts().begin(), mu.parts().end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
        out.add_term(e, Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline Partition rand_partition(std::mt19937& rng, int n) {
    std::vector<int> parts;
    int remaining = n;
    int max_part = n;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick(1, std::min(max_part, remaining));
        const int part = pick(rng);
        parts.push_back(part);
        remaining -= part;
        max_part = part;
    }
    return Partition(std::move(parts));
}

}  // namespace chern::testing
