#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "chern/mvpoly.hpp"
#include "helpers.hpp"

using namespace chern;
using chern::testing::make_rng;
using chern::testing::rand_mvpoly;
using chern::testing::rand_point;

namespace {

MvPoly<Rational> one_plus_x(int nvars, int index) {
    MvPoly<Rational> p = MvPoly<Rational>::constant(nvars, Rational(1));
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

}  // namespace

TEST_CASE("binomial product in two variables") {
    const MvPoly<Rational> prod = one_plus_x(2, 0) * one_plus_x(2, 1);
    CHECK(prod.term_count() == 4);
    CHECK(prod.coeff({0, 0}) == Rational(1));
    CHECK(prod.coeff({1, 0}) == Rational(1));
    CHECK(prod.coeff({0, 1}) == Rational(1));
    CHECK(prod.coeff({1, 1}) == Rational(1));
}

TEST_CASE("products beyond the degree cap vanish") {
    MvPoly<Rational> xy(2);
    xy.add_term({1, 1}, Rational(1));
    MvPoly<Rational> x(2);
    x.add_term({1, 0}, Rational(1));
    CHECK((xy * x).is_zero());

    // terms above the cap are refused at construction too
    MvPoly<Rational> p(2);
    p.add_term({2, 1}, Rational(5));
    CHECK(p.is_zero());
}

TEST_CASE("square expansion") {
    MvPoly<Rational> s = MvPoly<Rational>::constant(2, Rational(1));
    s.add_term({1, 0}, Rational(1));
    s.add_term({0, 1}, Rational(1));
    const MvPoly<Rational> sq = s * s;
    CHECK(sq.coeff({0, 0}) == Rational(1));
    CHECK(sq.coeff({1, 0}) == Rational(2));
    CHECK(sq.coeff({0, 1}) == Rational(2));
    CHECK(sq.coeff({2, 0}) == Rational(1));
    CHECK(sq.coeff({1, 1}) == Rational(2));
    CHECK(sq.coeff({0, 2}) == Rational(1));
    CHECK(sq.term_count() == 6);
}

TEST_CASE("variable count mismatch is an error") {
    const MvPoly<Rational> a = MvPoly<Rational>::constant(2, Rational(1));
    const MvPoly<Rational> b = MvPoly<Rational>::constant(3, Rational(1));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("term order puts the graded-lex leading term first") {
    MvPoly<Rational> p(3);
    p.add_term({1, 0, 0}, Rational(1));
    p.add_term({0, 0, 1}, Rational(1));
    p.add_term({2, 1, 0}, Rational(1));
    p.add_term({1, 2, 0}, Rational(1));
    auto it = p.terms().begin();
    CHECK(it->first == Exponents{2, 1, 0});
    ++it;
    CHECK(it->first == Exponents{1, 2, 0});
}

TEST_CASE("ring laws on random sparse polynomials") {
    auto rng = make_rng(51);
    for (int trial = 0; trial < 12; ++trial) {
        const MvPoly<Rational> a = rand_mvpoly(rng, 3, 5);
        const MvPoly<Rational> b = rand_mvpoly(rng, 3, 5);
        const MvPoly<Rational> c = rand_mvpoly(rng, 3, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MvPoly<Rational>(3));
    }
}

TEST_CASE("substituting the Todd series at a root") {
    const MvPoly<UniPoly> p = substitute(series_todd(2), 0, 2);
    CHECK(p.coeff({0, 0}) == UniPoly::constant(Rational(1)));
    CHECK(p.coeff({1, 0}) == UniPoly::constant(Rational(1, 2)));
    CHECK(p.coeff({2, 0}) == UniPoly::constant(Rational(1, 12)));
    CHECK(p.coeff({0, 1}).is_zero());
}

TEST_CASE("substituting a constant series gives the identity polynomial") {
    FactorSeries one(Param::Y, 3, 0);
    one.set(0, 0, Rational(1));
    const MvPoly<UniPoly> p = substitute(one, 1, 2);
    CHECK(p.term_count() == 1);
    CHECK(p.coeff({0, 0}) == UniPoly::constant(Rational(1)));
}

TEST_CASE("substituting the exponential series at the second root") {
    const MvPoly<UniPoly> p = substitute(series_exp_scaled(Rational(-1), 2), 1, 2);
    CHECK(p.coeff({0, 0}) == UniPoly::constant(Rational(1)));
    CHECK(p.coeff({0, 1}) == UniPoly::constant(Rational(-1)));
    CHECK(p.coeff({0, 2}) == UniPoly::constant(Rational(1, 2)));
    CHECK(p.coeff({1, 0}).is_zero());
}

TEST_CASE("substitute validates its arguments") {
    CHECK_THROWS_AS(substitute(series_todd(3), 3, 3), std::out_of_range);
    CHECK_THROWS_AS(substitute(series_todd(3), -1, 3), std::out_of_range);
    CHECK_THROWS_AS(substitute(series_todd(2), 0, 3), std::invalid_argument);
}

TEST_CASE("parameter slices of a bivariate product") {
    // (1 + y e^{-x_1})(1 + y e^{-x_2}) has y-degree 2 and its y^2 slice is
    // e^{-x_1} e^{-x_2}.
    FactorSeries f(Param::Y, 2, 2);
    f.set(0, 0, Rational(1));
    const FactorSeries e = series_exp_scaled(Rational(-1), 2);
    for (int j = 0; j <= 2; ++j) f.set(j, 1, e.at(j, 0));
    const MvPoly<UniPoly> prod = substitute(f, 0, 2) * substitute(f, 1, 2);

    const MvPoly<Rational> y0 = param_coefficient(prod, 0);
    CHECK(y0 == MvPoly<Rational>::constant(2, Rational(1)));

    const MvPoly<Rational> y2 = param_coefficient(prod, 2);
    CHECK(y2.coeff({0, 0}) == Rational(1));
    CHECK(y2.coeff({1, 0}) == Rational(-1));
    CHECK(y2.coeff({1, 1}) == Rational(1));
    CHECK(param_coefficient(prod, 3).is_zero());
}

TEST_CASE("evaluation at rational points") {
    auto rng = make_rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const MvPoly<Rational> a = rand_mvpoly(rng, 3, 4);
        const MvPoly<Rational> b = rand_mvpoly(rng, 3, 4);
        const auto point = rand_point(rng, 3);
        CHECK(evaluate_at(a + b, point) == evaluate_at(a, point) + evaluate_at(b, point));
    }
    MvPoly<Rational> p(2);
    p.add_term({1, 1}, Rational(3));
    CHECK(evaluate_at(p, {Rational(1, 2), Rational(4)}) == Rational(6));
    CHECK(evaluate_at(MvPoly<Rational>(2), {Rational(1), Rational(1)}) == Rational(0));
    CHECK_THROWS_AS(evaluate_at(p, {Rational(1)}), std::invalid_argument);
}
