#pragma once

#include <map>
#include <string_view>
#include <utility>

#include "chern/chern_combo.hpp"
#include "chern/mvpoly.hpp"
#include "chern/partition.hpp"
#include "chern/report.hpp"

namespace chern {

/// The k-th elementary symmetric polynomial e_k(x_1..x_n). k outside 0..n
/// yields the zero polynomial.
MvPoly<Rational> elementary(int k, int n);

/// The homogeneous component of the given total degree.
template <class C>
MvPoly<C> h_component(const MvPoly<C>& f, int degree) {
    MvPoly<C> out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (total_degree(e) == degree) out.add_term(e, c);
    }
    return out;
}

/// True when f is invariant under all variable transpositions. Checked via
/// the adjacent transpositions, which generate the symmetric group.
template <class C>
bool is_symmetric(const MvPoly<C>& f) {
    const int n = f.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        for (const auto& [e, c] : f.terms()) {
            if (e[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(i + 1)]) continue;
            Exponents swapped = e;
            std::swap(swapped[static_cast<std::size_t>(i)],
                      swapped[static_cast<std::size_t>(i + 1)]);
            if (f.coeff(swapped) != c) return false;
        }
    }
    return true;
}

/// Expresses a symmetric polynomial, homogeneous of degree n in n variables,
/// in the Chern-class basis: the unique combo C with
/// sum_lambda C(lambda) * prod_j e_{lambda_j}(x) = f.
///
/// Leading-term elimination: repeatedly subtract lc(f) times the product of
/// elementary symmetric polynomials whose graded-lex leading monomial matches
/// f's, until nothing remains. Once symmetry is checked, every monomial orbit
/// is represented by its sorted exponent pattern, so the elimination runs on
/// at most p(n) coefficients. Throws non_symmetric_error /
/// non_homogeneous_error on bad input; an iteration guard throws
/// no_termination_error (unreachable for valid input, since the leading
/// monomial strictly decreases).
ChernCombo reduce_to_chern(const MvPoly<Rational>& f, int n);

/// Batched reduction over parameter-polynomial coefficients: the entry for
/// lambda holds, at parameter power k, the lambda-coefficient of
/// reduce_to_chern(param_coefficient(f, k), n). One elimination pass serves
/// every power at once.
std::map<Partition, UniPoly> reduce_to_chern_batch(const MvPoly<UniPoly>& f, int n);

/// The six symmetric expressions whose degree-n components have closed forms
/// in c_n, c_1 c_{n-1}, c_1^2 c_{n-2}, c_2 c_{n-2}.
enum class HExpr : unsigned char { H1, H11, H2, H12, H22, H3 };

std::string_view h_name(HExpr which);

/// The defining symmetric polynomial, built literally. Singles run over one
/// index i (H1: x_i, H2: x_i^2, H3: x_i^3, each times prod_{j!=i}(1+x_j));
/// pairs run over i < j (H11: x_i x_j, H12: x_i^2 x_j + x_i x_j^2,
/// H22: x_i^2 x_j^2, each times prod_{k!=i,j}(1+x_k)).
MvPoly<Rational> h_polynomial(HExpr which, int n);

/// Degree-n component of h_polynomial, reduced to the Chern basis.
ChernCombo h_reduced(HExpr which, int n);

/// The closed form as a combo, e.g. H2 -> -n c_n + c_1 c_{n-1}. Small-n
/// degenerations follow the c_0 = 1 / c_{k<0} = 0 conventions.
ChernCombo h_closed_form(HExpr which, int n);

/// Checks all six identities h_reduced == h_closed_form at dimension n.
Report verify_h_identities(int n);

}  // namespace chern
