#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "chern/errors.hpp"
#include "chern/symmetric.hpp"
#include "helpers.hpp"

using namespace chern;
using chern::testing::eval_combo_at;
using chern::testing::make_rng;
using chern::testing::monomial_symmetric;
using chern::testing::rand_partition;
using chern::testing::rand_point;
using chern::testing::rand_rational;

TEST_CASE("partition enumeration in canonical order") {
    const auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    const auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].weight() == 0);
    CHECK(p0[0].parts().empty());

    CHECK(partitions_of(6).size() == 11);
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("partition list matches an independent count and is well formed") {
    // p(n, m) = partitions of n with parts <= m, by the standard recurrence.
    std::vector<std::vector<long>> table(13, std::vector<long>(13, 0));
    for (int m = 0; m <= 12; ++m) table[0][static_cast<std::size_t>(m)] = 1;
    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= 12; ++m) {
            long count = table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m - 1)];
            if (n >= m) count += table[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(m)];
            table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = count;
        }
    }
    for (int n = 1; n <= 10; ++n) {
        const auto list = partitions_of(n);
        CHECK(static_cast<long>(list.size()) == table[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)]);
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(list[i].weight() == n);
            CHECK(seen.insert(list[i].parts()).second);  // distinct
            if (i > 0) CHECK(list[i - 1] < list[i]);     // strictly ordered
        }
    }
}

TEST_CASE("partition conjugation") {
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
}

TEST_CASE("elementary symmetric polynomials") {
    const MvPoly<Rational> e2 = elementary(2, 3);
    CHECK(e2.term_count() == 3);
    CHECK(e2.coeff({1, 1, 0}) == Rational(1));
    CHECK(e2.coeff({1, 0, 1}) == Rational(1));
    CHECK(e2.coeff({0, 1, 1}) == Rational(1));

    CHECK(elementary(0, 5) == MvPoly<Rational>::constant(5, Rational(1)));

    const MvPoly<Rational> e3 = elementary(3, 3);
    CHECK(e3.term_count() == 1);
    CHECK(e3.coeff({1, 1, 1}) == Rational(1));

    CHECK(elementary(4, 3).is_zero());
    CHECK(elementary(-1, 3).is_zero());
}

TEST_CASE("homogeneous component extraction") {
    MvPoly<Rational> f = MvPoly<Rational>::constant(2, Rational(1));
    f.add_term({1, 0}, Rational(1));
    f.add_term({1, 1}, Rational(1));
    const MvPoly<Rational> top = h_component(f, 2);
    CHECK(top.term_count() == 1);
    CHECK(top.coeff({1, 1}) == Rational(1));
    CHECK(h_component(MvPoly<Rational>(2), 2).is_zero());
}

TEST_CASE("the degree-three worked example reduces to c1c2 - 3c3") {
    // h(x1+x2+x3 + sum_{i != j} x_i^2 x_j) keeps only the cubic part.
    MvPoly<Rational> f = monomial_symmetric(Partition({1}), 3) +
                         monomial_symmetric(Partition({2, 1}), 3);
    const MvPoly<Rational> top = h_component(f, 3);
    CHECK(top.term_count() == 6);

    const ChernCombo combo = reduce_to_chern(top, 3);
    ChernCombo expected(3);
    expected.add(Partition({2, 1}), Rational(1));
    expected.add(Partition({3}), Rational(-3));
    CHECK(combo == expected);
}

TEST_CASE("basis elements reduce to themselves") {
    const ChernCombo combo = reduce_to_chern(elementary(2, 2), 2);
    ChernCombo expected(2);
    expected.add(Partition({2}), Rational(1));
    CHECK(combo == expected);
}

TEST_CASE("power sum of squares against the random-point oracle") {
    MvPoly<Rational> f(2);
    f.add_term({2, 0}, Rational(1));
    f.add_term({0, 2}, Rational(1));
    const ChernCombo combo = reduce_to_chern(f, 2);

    ChernCombo expected(2);
    expected.add(Partition({1, 1}), Rational(1));
    expected.add(Partition({2}), Rational(-2));
    CHECK(combo == expected);

    auto rng = make_rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto point = rand_point(rng, 2);
        CHECK(evaluate_at(f, point) == eval_combo_at(combo, point));
    }
}

TEST_CASE("reduction rejects invalid input") {
    MvPoly<Rational> asymmetric(2);
    asymmetric.add_term({2, 0}, Rational(1));
    CHECK_THROWS_AS(reduce_to_chern(asymmetric, 2), non_symmetric_error);

    MvPoly<Rational> mixed = elementary(1, 2) + elementary(2, 2);
    CHECK_THROWS_AS(reduce_to_chern(mixed, 2), non_homogeneous_error);

    CHECK_THROWS_AS(reduce_to_chern(MvPoly<Rational>(2), 3), std::invalid_argument);
    CHECK(reduce_to_chern(MvPoly<Rational>(2), 2).is_zero());
}

TEST_CASE("round trip through the partition basis") {
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            MvPoly<Rational> prod = MvPoly<Rational>::constant(n, Rational(1));
            for (int part : lambda.parts()) prod = prod * elementary(part, n);
            const ChernCombo combo = reduce_to_chern(prod, n);
            ChernCombo expected(n);
            expected.add(lambda, Rational(1));
            CHECK(combo == expected);
        }
    }
}

TEST_CASE("reduction is linear") {
    auto rng = make_rng(733);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 4;
        const MvPoly<Rational> f = monomial_symmetric(rand_partition(rng, n), n);
        const MvPoly<Rational> g = monomial_symmetric(rand_partition(rng, n), n);
        const Rational a = rand_rational(rng);
        const Rational b = rand_rational(rng);
        MvPoly<Rational> mix = f;
        mix.scale(a);
        mix.add_scaled(g, b);
        ChernCombo expected = Rational(a) * reduce_to_chern(f, n);
        expected += b * reduce_to_chern(g, n);
        CHECK(reduce_to_chern(mix, n) == expected);
    }
}

TEST_CASE("reduction agrees with re-expansion and random evaluation") {
    auto rng = make_rng(977);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
        MvPoly<Rational> f(n);
        for (int pieces = 0; pieces < 3; ++pieces) {
            MvPoly<Rational> m = monomial_symmetric(rand_partition(rng, n), n);
            m.scale(rand_rational(rng));
            f += m;
        }
        const ChernCombo combo = reduce_to_chern(f, n);

        // exact re-expansion through the elementary basis
        MvPoly<Rational> rebuilt(n);
        for (const auto& [lambda, coeff] : combo.terms()) {
            MvPoly<Rational> prod = MvPoly<Rational>::constant(n, Rational(1));
            for (int part : lambda.parts()) prod = prod * elementary(part, n);
            rebuilt.add_scaled(prod, coeff);
        }
        CHECK(rebuilt == f);

        // independent random-point oracle
        for (int sample = 0; sample < 4; ++sample) {
            const auto point = rand_point(rng, n);
            CHECK(evaluate_at(f, point) == eval_combo_at(combo, point));
        }
    }
}

TEST_CASE("closed forms of the h expressions") {
    for (int n = 2; n <= 6; ++n) {
        ChernCombo h1(n);
        add_chern_monomial(h1, {n}, Rational(n));
        CHECK(h_reduced(HExpr::H1, n) == h1);

        ChernCombo h2(n);
        add_chern_monomial(h2, {n}, Rational(-n));
        add_chern_monomial(h2, {n - 1, 1}, Rational(1));
        CHECK(h_reduced(HExpr::H2, n) == h2);
    }

    const ChernCombo h22 = h_reduced(HExpr::H22, 4);
    ChernCombo expected(4);
    expected.add(Partition({4}), Rational(2));
    expected.add(Partition({3, 1}), Rational(-2));
    expected.add(Partition({2, 2}), Rational(1));
    CHECK(h22 == expected);
}

TEST_CASE("h expressions against the random-point oracle") {
    auto rng = make_rng(211);
    for (int n : {2, 3, 4, 5}) {
        for (HExpr which : {HExpr::H1, HExpr::H11, HExpr::H2, HExpr::H12, HExpr::H22, HExpr::H3}) {
            const MvPoly<Rational> top = h_component(h_polynomial(which, n), n);
            const ChernCombo combo = h_reduced(which, n);
            for (int sample = 0; sample < 3; ++sample) {
                const auto point = rand_point(rng, n);
                CHECK(evaluate_at(top, point) == eval_combo_at(combo, point));
            }
        }
    }
}

TEST_CASE("all six identities hold for n up to 8") {
    for (int n = 2; n <= 8; ++n) {
        const Report report = verify_h_identities(n);
        REQUIRE(report.size() == 6);
        for (const auto& check : report) {
            CAPTURE(check.n);
            CAPTURE(check.identity);
            CHECK(check.pass);
        }
    }
    CHECK_THROWS_AS(verify_h_identities(1), std::invalid_argument);
}

TEST_CASE("pair expressions degenerate cleanly at n = 2") {
    const Report report = verify_h_identities(2);
    for (const auto& check : report) {
        if (check.identity == "h12" || check.identity == "h22") {
            CHECK(check.pass);
            CHECK(check.lhs.is_zero());
            CHECK(check.rhs.is_zero());
        }
    }
}
