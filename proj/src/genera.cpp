#include "chern/genera.hpp"

#include <stdexcept>
#include <string>

#include "chern/mvpoly.hpp"
#include "chern/symmetric.hpp"

namespace chern {

namespace {

void check_dimension(int n, int max_n, const char* where) {
    if (n < 1) throw std::invalid_argument(std::string(where) + ": n must be at least 1");
    if (n > max_n) {
        throw std::invalid_argument(std::string(where) + ": n = " + std::to_string(n) +
                                    " exceeds the resource cap " + std::to_string(max_n) +
                                    " (raise max_n to override)");
    }
}

/// Degree-n component of prod_{i=1}^{n} F(x_i), coefficients polynomial in
/// the series parameter. Sequential left fold keeps results bit-identical
/// run to run.
MvPoly<UniPoly> genus_product_top(const FactorSeries& factor, int n) {
    MvPoly<UniPoly> prod = MvPoly<UniPoly>::constant(n, UniPoly::constant(Rational(1)));
    for (int i = 0; i < n; ++i) prod = prod * substitute(factor, i, n);
    return h_component(prod, n);
}

}  // namespace

namespace {

// One batched elimination covers every parameter power; slice afterwards.
std::vector<ChernCombo> reduced_slices(const MvPoly<UniPoly>& top, int n, int count) {
    const std::map<Partition, UniPoly> reduced = reduce_to_chern_batch(top, n);
    std::vector<ChernCombo> slices(static_cast<std::size_t>(count), ChernCombo(n));
    for (const auto& [lambda, poly] : reduced) {
        for (int k = 0; k < count; ++k) {
            slices[static_cast<std::size_t>(k)].add(lambda, poly.coeff(k));
        }
    }
    return slices;
}

}  // namespace

GenusTable genus_table(GenusKind kind, int n, int max_n) {
    check_dimension(n, max_n, "genus_table");
    const FactorSeries factor = genus_factor(kind, Param::Y, n, n);
    const MvPoly<UniPoly> top = genus_product_top(factor, n);
    return GenusTable{kind, n, reduced_slices(top, n, n + 1)};
}

ZExpansion z_expand(GenusKind kind, int n, int order, int max_n) {
    check_dimension(n, max_n, "z_expand");
    if (order < 0) throw std::invalid_argument("z_expand: negative order");
    const FactorSeries factor = genus_factor(kind, Param::Z, n, order);
    const MvPoly<UniPoly> top = genus_product_top(factor, n);
    return ZExpansion{kind, n, order, reduced_slices(top, n, order + 1)};
}

ChernCombo weighted_alternating_sum(const GenusTable& table, int k) {
    if (k < 0 || k > table.n) {
        throw std::invalid_argument("weighted_alternating_sum: k must lie in 0..n");
    }
    ChernCombo acc(table.n);
    for (int p = 0; p <= table.n; ++p) {
        Integer weight = binomial(p, k);
        if (p % 2 != 0) weight = -weight;
        acc += Rational(weight) * table.rows[static_cast<std::size_t>(p)];
    }
    return acc;
}

namespace {

ChernCombo dirac_closed_form(int n, int k) {
    ChernCombo combo(n);
    switch (k) {
        case 0:
            add_chern_monomial(combo, {n}, Rational(1));
            break;
        case 1:
            add_chern_monomial(combo, {n}, Rational(n, 2));
            add_chern_monomial(combo, {n - 1, 1}, Rational(1, 2));
            break;
        case 2:
            add_chern_monomial(combo, {n}, Rational(static_cast<long>(n) * (3 * n - 5), 24));
            add_chern_monomial(combo, {n - 1, 1}, Rational(3 * n - 2, 12));
            add_chern_monomial(combo, {n - 2, 1, 1}, Rational(1, 8));
            break;
        default:
            throw std::invalid_argument("dirac_closed_form: only k = 0, 1, 2 have closed forms");
    }
    return combo;
}

ChernCombo signature_closed_form(int n, int k) {
    ChernCombo combo(n);
    switch (k) {
        case 0:
            add_chern_monomial(combo, {n}, pow(Rational(2), n));
            break;
        case 1:
            add_chern_monomial(combo, {n}, Rational(n));
            add_chern_monomial(combo, {n - 1, 1}, Rational(1));
            combo.scale(pow(Rational(2), n - 1));
            break;
        case 2:
            add_chern_monomial(combo, {n}, Rational(static_cast<long>(n) * (3 * n - 5), 6));
            add_chern_monomial(combo, {n - 1, 1}, Rational(3 * n - 2, 3));
            add_chern_monomial(combo, {n - 2, 1, 1}, Rational(1));
            add_chern_monomial(combo, {n - 2, 2}, Rational(-1));
            combo.scale(pow(Rational(2), n - 2));
            break;
        default:
            throw std::invalid_argument("signature_closed_form: only k = 0, 1, 2 have closed forms");
    }
    return combo;
}

}  // namespace

Report verify_twisted_indices(int n) {
    if (n < 2) throw std::invalid_argument("verify_twisted_indices: n must be at least 2");
    Report report;
    const GenusTable dirac = genus_table(GenusKind::AY, n);
    const GenusTable signature = genus_table(GenusKind::LY, n);
    for (int k = 0; k <= 2; ++k) {
        ChernCombo lhs = weighted_alternating_sum(dirac, k);
        ChernCombo rhs = dirac_closed_form(n, k);
        report.push_back(IdentityCheck{n, "ay-k" + std::to_string(k), lhs == rhs, std::move(lhs),
                                       std::move(rhs)});
    }
    for (int k = 0; k <= 2; ++k) {
        ChernCombo lhs = weighted_alternating_sum(signature, k);
        ChernCombo rhs = signature_closed_form(n, k);
        report.push_back(IdentityCheck{n, "ly-k" + std::to_string(k), lhs == rhs, std::move(lhs),
                                       std::move(rhs)});
    }
    return report;
}

Report verify_libgober_wood(int n) {
    if (n < 2) throw std::invalid_argument("verify_libgober_wood: n must be at least 2");
    const GenusTable chi = genus_table(GenusKind::ChiY, n);
    ChernCombo lhs = weighted_alternating_sum(chi, 2);

    ChernCombo rhs(n);
    add_chern_monomial(rhs, {n}, Rational(static_cast<long>(n) * (3 * n - 5), 24));
    add_chern_monomial(rhs, {n - 1, 1}, Rational(1, 12));

    // Independent route: the z^2 coefficient computed in the z
    // parametrization must split as (1/12) h2 + (1/4) h11.
    const ChernCombo z2 = z_expand(GenusKind::ChiY, n, 2).coeffs[2];
    const ChernCombo split =
        Rational(1, 12) * h_reduced(HExpr::H2, n) + Rational(1, 4) * h_reduced(HExpr::H11, n);

    const bool pass = lhs == rhs && z2 == split && z2 == lhs;
    Report report;
    report.push_back(IdentityCheck{n, "libgober-wood", pass, std::move(lhs), std::move(rhs)});
    return report;
}

njson table_to_json(const GenusTable& table) {
    njson rows = njson::array();
    for (const auto& row : table.rows) rows.push_back(combo_to_json(row));
    return njson{{"kind", kind_name(table.kind)}, {"n", table.n}, {"rows", std::move(rows)}};
}

njson expansion_to_json(const ZExpansion& expansion) {
    njson coeffs = njson::array();
    for (const auto& c : expansion.coeffs) coeffs.push_back(combo_to_json(c));
    return njson{{"kind", kind_name(expansion.kind)},
                 {"n", expansion.n},
                 {"order", expansion.order},
                 {"coeffs", std::move(coeffs)}};
}

}  // namespace chern
