#pragma once

#include <vector>

#include "chern/chern_combo.hpp"
#include "chern/factor_series.hpp"
#include "chern/genus_kind.hpp"
#include "chern/json.hpp"
#include "chern/report.hpp"

namespace chern {

/// Dimensions above this need an explicit override; term counts grow
/// combinatorially with n.
inline constexpr int kDefaultMaxDimension = 10;

/// Row p is the Chern-number expression of chi^p, A(M, Lambda^p T*), or
/// L(M, Lambda^p T*), for p = 0..n.
struct GenusTable {
    GenusKind kind;
    int n;
    std::vector<ChernCombo> rows;
};

/// Coefficients of the genus polynomial re-expanded around y = -1 in powers
/// of z = 1 + y, each a weight-n combo.
struct ZExpansion {
    GenusKind kind;
    int n;
    int order;
    std::vector<ChernCombo> coeffs;
};

/// Expands prod_i F(x_i) with F the y-parametrized per-root factor, takes the
/// degree-n component, and reduces each power of y to the Chern basis.
GenusTable genus_table(GenusKind kind, int n, int max_n = kDefaultMaxDimension);

/// Same pipeline in the z parametrization, computed directly (not by
/// transforming the y table), so the binomial-transform relation between the
/// two is a genuine cross-check.
ZExpansion z_expand(GenusKind kind, int n, int order, int max_n = kDefaultMaxDimension);

/// sum_p (-1)^p binom(p, k) row_p. For k = 0, 1, 2 these are the left sides
/// of the six twisted-index identities. Requires 0 <= k <= n.
ChernCombo weighted_alternating_sum(const GenusTable& table, int k);

/// Checks the six alternating-sum identities for the twisted Dirac (A_y) and
/// twisted signature (L_y) tables against their closed forms.
Report verify_twisted_indices(int n);

/// Checks the Libgober-Wood relation: sum_p (-1)^p binom(p,2) chi^p equals
/// n(3n-5)/24 c_n + 1/12 c_1 c_{n-1}, and that the z^2 coefficient of the
/// chi_y expansion decomposes as (1/12) h2 + (1/4) h11. One entry per n.
Report verify_libgober_wood(int n);

njson table_to_json(const GenusTable& table);
njson expansion_to_json(const ZExpansion& expansion);

}  // namespace chern
