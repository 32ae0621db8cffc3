/* Copyright 2026 The expfactor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <doctest.h>

#include "expfactor/factor.hpp"
#include "support.hpp"

using namespace expfactor;
using namespace testsupport;

namespace {

using VSeries = LieSeries<Rational>;
using NSeries = LieSeries<GrassmannScalar>;

const SplitSpec minus_zero_plus{Part::minus, Part::zero_plus};

template <class S>
LieSeries<S> term(const PluginPtr& p, int order, const BasisIndex& x, const Monomial& m, const S& c) {
    return LieSeries<S>::term(p, Truncation{order, true}, x, m, c);
}

VSeries vterm(int order, const BasisIndex& x, const Monomial& m, const Rational& c = 1) {
    return term<Rational>(virasoro(), order, x, m, c);
}

// g+ = sum_j A_j L_j, g- = sum_j B_-j L_-j over the given modes.
std::pair<VSeries, VSeries> virasoro_generators(const std::vector<int>& modes, int order) {
    VSeries gp(virasoro(), Truncation{order, true}), gm(virasoro(), Truncation{order, true});
    for (int j : modes) {
        gp.add(L(j), mono({A(j)}), 1);
        gm.add(L(-j), mono({B(-j)}), 1);
    }
    return {gp, gm};
}

} // namespace

TEST_CASE("factorize examples") {
    const VSeries hm = vterm(2, L(-2), mono({B(-2)}));
    const VSeries hp = vterm(2, L(1), mono({A(1)}));

    const auto trivial = factorize(hm, VSeries(virasoro(), Truncation{2, true}), minus_zero_plus, 2);
    CHECK(trivial.left == hm);
    CHECK(trivial.right.is_zero());

    // Gm = Hm + 1/2 pi-([Hp, Hm]) with [L_1, L_-2] = 3 L_-1
    const auto r = factorize(hm, hp, minus_zero_plus, 2);
    VSeries gm = hm;
    gm.add(L(-1), mono({A(1), B(-2)}), Rational(1, 2) * virasoro_oracle(1, -2).first);
    CHECK(r.left == gm);
    CHECK(r.left.coefficient(L(-1), mono({A(1), B(-2)})) == Rational(3, 2));
    CHECK(r.right == hp);

    // [L_1, L_-1] = 2 L_0 lands on the zero_plus side
    const VSeries hm1 = vterm(2, L(-1), mono({B(-1)}));
    const auto r1 = factorize(hm1, hp, minus_zero_plus, 2);
    VSeries gp1 = hp;
    gp1.add(L(0), mono({A(1), B(-1)}), Rational(1, 2) * virasoro_oracle(1, -1).first);
    CHECK(r1.left == hm1);
    CHECK(r1.right == gp1);
}

TEST_CASE("uniformize examples") {
    // e (x) x and e (x) x^-1 commute: [e, e] = 0 and (e, e) = 0.
    const auto yp = term<Rational>(sl2_affine(), 3, AffineAlgebra::gen(0, 1), mono({A(1)}), 1);
    const auto xm = term<Rational>(sl2_affine(), 3, AffineAlgebra::gen(0, -1), mono({B(-1)}), 1);
    const auto swap = uniformize(yp, xm, minus_zero_plus, 3);
    CHECK(swap.left == xm);
    CHECK(swap.right == yp);

    const VSeries p1 = vterm(2, L(1), mono({A(1)}));
    const VSeries m2 = vterm(2, L(-2), mono({B(-2)}));
    const auto r = uniformize(p1, m2, minus_zero_plus, 2);
    VSeries left = m2;
    left.add(L(-1), mono({A(1), B(-2)}), virasoro_oracle(1, -2).first);
    CHECK(r.left == left);
    CHECK(r.left.coefficient(L(-1), mono({A(1), B(-2)})) == Rational(3));

    const VSeries m1 = vterm(2, L(-1), mono({B(-1)}));
    const auto r1 = uniformize(p1, m1, minus_zero_plus, 2);
    VSeries right = p1;
    right.add(L(0), mono({A(1), B(-1)}), virasoro_oracle(1, -1).first);
    CHECK(r1.right == right);
    CHECK(r1.left == m1);
}

TEST_CASE("triple_factorize of zero") {
    const VSeries zero(virasoro(), Truncation{3, true});
    const auto r = triple_factorize(zero, zero, 3);
    CHECK(r.psi_minus.is_zero());
    CHECK(r.psi_plus.is_zero());
    CHECK(r.psi_zero.is_zero());
}

TEST_CASE("triple_factorize on Virasoro, support {1, 2}") {
    const auto [gp, gm] = virasoro_generators({1, 2}, 2);
    const auto r = triple_factorize(gp, gm, 2);
    const auto [zero, gamma] = split_central(r.psi_zero);
    CHECK(zero.coefficient(L(0), mono({A(1), B(-1)})) == Rational(2));
    CHECK(zero.coefficient(L(0), mono({A(2), B(-2)})) == Rational(4));
    CHECK(gamma.coefficient(VirasoroAlgebra::c(), mono({A(2), B(-2)})) == Rational(1, 2));
    CHECK(gamma.coefficient(VirasoroAlgebra::c(), mono({A(1), B(-1)})).is_zero());
    CHECK(r.psi_plus.coefficient(L(1), mono({A(2), B(-1)})) == Rational(3));
    CHECK(r.diagnostics.order == 2);
    CHECK(r.diagnostics.terms_minus == r.psi_minus.size());
    CHECK(r.diagnostics.terms_zero == r.psi_zero.size());
}

TEST_CASE("triple_factorize on the NS envelope") {
    const Truncation t{2, true};
    SUBCASE("doubled support {1}") {
        NSeries gp(ns1(), t), gm(ns1(), t);
        gp.add(G(1), mono({Ad(1)}), gen(1));
        gm.add(G(-1), mono({Bd(-1)}), gen(-1));
        const auto r = triple_factorize(gp, gm, 2);
        const GrassmannScalar a_a = GrassmannScalar::from_products({{{1, -1}, 1}});  // a_1/2 a_-1/2
        CHECK(r.psi_zero.coefficient(L(0), mono({Ad(1), Bd(-1)})) == a_a * Rational(-2));
    }
    SUBCASE("doubled support {3}") {
        NSeries gp(ns1(), t), gm(ns1(), t);
        gp.add(G(3), mono({Ad(3)}), gen(3));
        gm.add(G(-3), mono({Bd(-3)}), gen(-3));
        const auto r = triple_factorize(gp, gm, 2);
        const GrassmannScalar a_a = GrassmannScalar::from_products({{{3, -3}, 1}});  // a_3/2 a_-3/2
        CHECK(r.psi_zero.coefficient(NeveuSchwarzAlgebra::c(), mono({Ad(3), Bd(-3)})) == a_a * Rational(-2, 3));
    }
}

TEST_CASE("residual exactness, membership and schedule agreement on random inputs") {
    Rng rng(2026);
    struct Case {
        PluginPtr plugin;
        bool grassmann;
    };
    for (const Case& c : {Case{virasoro(), false}, Case{sl2_affine(), false}, Case{ns1(), true}}) {
        CAPTURE(c.plugin->name());
        for (int trial = 0; trial < 4; ++trial) {
            auto run = [&](auto tag) {
                using S = decltype(tag);
                const int n = 4;
                const auto left = basis_where(c.plugin, 2, Part::minus);
                const auto right = basis_where(c.plugin, 2, Part::zero_plus, true);
                const auto hm = random_series<S>(rng, c.plugin, n, left, 4, 2, 1, 0);
                const auto hp = random_series<S>(rng, c.plugin, n, right, 4, 2, 0, 1);
                const auto r = factorize(hm, hp, minus_zero_plus, n);
                CHECK((cbh_eval(r.left, r.right, n) - (hm + hp)).is_zero());
                CHECK(r.left.project(Part::minus) == r.left);
                CHECK(r.right.project(Part::zero_plus) == r.right);
                for (const auto& [k, v] : r.left.terms()) CHECK(k.second.minus_order() >= 1);
                for (const auto& [k, v] : r.right.terms()) CHECK(k.second.plus_order() >= 1);
                const auto replay = factorize(hm, hp, minus_zero_plus, n, {SweepSchedule::by_bidegree});
                CHECK(replay.left == r.left);
                CHECK(replay.right == r.right);

                const auto yp = random_series<S>(rng, c.plugin, n, right, 3, 2, 0, 1);
                const auto xm = random_series<S>(rng, c.plugin, n, left, 3, 2, 1, 0);
                const auto u = uniformize(yp, xm, minus_zero_plus, n);
                CHECK((cbh_eval(u.left, u.right, n) - cbh_eval(yp, xm, n)).is_zero());
                const auto u2 = uniformize(yp, xm, minus_zero_plus, n, {SweepSchedule::by_bidegree});
                CHECK(u2.left == u.left);
                CHECK(u2.right == u.right);
            };
            if (c.grassmann) run(GrassmannScalar());
            else run(Rational());
        }
    }
}

TEST_CASE("lowest-order forms") {
    Rng rng(4242);
    const auto left = basis_where(virasoro(), 3, Part::minus);
    const auto right = basis_where(virasoro(), 3, Part::zero_plus);
    for (int trial = 0; trial < 10; ++trial) {
        // linear inputs: every term has order one
        const auto hm = random_series<Rational>(rng, virasoro(), 2, left, 3, 1, 1, 0);
        const auto hp = random_series<Rational>(rng, virasoro(), 2, right, 3, 1, 0, 1);
        const auto f = factorize(hm, hp, minus_zero_plus, 2);
        const auto half = bracket(hp, hm) * Rational(1, 2);
        CHECK(f.left == hm + half.project(Part::minus));
        CHECK(f.right == hp + half.project(Part::zero_plus));

        const auto u = uniformize(hp, hm, minus_zero_plus, 2);
        const auto full = bracket(hp, hm);
        CHECK(u.left == hm + full.project(Part::minus));
        CHECK(u.right == hp + full.project(Part::zero_plus));
    }
}

TEST_CASE("order-two closed forms and remainder structure of the triple") {
    const std::vector<int> modes{1, 2, 3};
    const int n = 4;
    const auto [gp, gm] = virasoro_generators(modes, n);
    const auto r = triple_factorize(gp, gm, n);
    for (int j : modes)
        for (int m : modes) {
            // [p_j, p_-m] = [L_j, L_-m] goes to the part of degree j - m
            const auto [l, z] = virasoro_oracle(j, -m);
            const Monomial am = mono({A(j), B(-m)});
            const auto& target = j - m < 0 ? r.psi_minus : (j - m > 0 ? r.psi_plus : r.psi_zero);
            CHECK(target.coefficient(L(j - m), am) == l);
            if (j == m) CHECK(r.psi_zero.coefficient(VirasoroAlgebra::c(), am) == z);
        }
    for (const auto* psi : {&r.psi_minus, &r.psi_plus, &r.psi_zero})
        for (const auto& [k, v] : psi->terms()) {
            const Monomial& m = k.second;
            if (m.total_order() >= 2) {
                CHECK(m.minus_order() >= 1);
                CHECK(m.plus_order() >= 1);
            }
        }
    CHECK(r.psi_minus.project(Part::minus) == r.psi_minus);
    CHECK(r.psi_plus.project(Part::plus) == r.psi_plus);
    CHECK(r.psi_zero.project(Part::zero) == r.psi_zero);
}

TEST_CASE("triple replays identically under the bidegree schedule") {
    const auto [gp, gm] = virasoro_generators({1, 2}, 4);
    const auto a = triple_factorize(gp, gm, 4);
    const auto b = triple_factorize(gp, gm, 4, {SweepSchedule::by_bidegree});
    CHECK(a.psi_minus == b.psi_minus);
    CHECK(a.psi_plus == b.psi_plus);
    CHECK(a.psi_zero == b.psi_zero);
}

TEST_CASE("commuting inputs pass through unchanged") {
    // e (x) x^j all commute with one another and pair to zero under the form
    const auto gp = term<Rational>(sl2_affine(), 3, AffineAlgebra::gen(0, 1), mono({A(1)}), 2);
    const auto gm = term<Rational>(sl2_affine(), 3, AffineAlgebra::gen(0, -2), mono({B(-2)}), 5);
    const auto r = triple_factorize(gp, gm, 3);
    CHECK(r.psi_minus == gm);
    CHECK(r.psi_plus == gp);
    CHECK(r.psi_zero.is_zero());
}

TEST_CASE("precondition violations") {
    const VSeries plus = vterm(2, L(1), mono({A(1)}));
    const VSeries minus = vterm(2, L(-1), mono({B(-1)}));
    CHECK_THROWS_AS(factorize(plus, plus, minus_zero_plus, 2), DomainError);
    CHECK_THROWS_AS(factorize(minus, minus, minus_zero_plus, 2), DomainError);
    // right side without a plus-type variable
    CHECK_THROWS_AS(factorize(minus, vterm(2, L(1), mono({B(-1)})), minus_zero_plus, 2), DomainError);
    CHECK_THROWS_AS(uniformize(minus, plus, minus_zero_plus, 2), DomainError);
    CHECK_THROWS_AS(factorize(minus, plus, SplitSpec{Part::zero, Part::zero_plus}, 2), DomainError);
    CHECK_THROWS_AS(factorize(minus, plus, SplitSpec{Part::minus, Part::plus}, 2), DomainError);
    const VSeries aux = vterm(2, L(1), mono({A(1), VarLabel::t()}));
    CHECK_THROWS_AS(triple_factorize(aux, minus, 2), DomainError);
    CHECK_THROWS_AS(erase_auxiliary(vterm(3, L(1), mono({A(1), VarLabel::s(), VarLabel::s()})), 3),
                    InternalConsistencyError);
    CHECK(erase_auxiliary(vterm(3, L(1), mono({A(1), VarLabel::s()})), 3) == vterm(3, L(1), mono({A(1)})));
}

TEST_CASE("split specs") {
    CHECK(minus_zero_plus.to_string() == "minus|zero_plus");
    CHECK(minus_zero_plus.covers(L(0)));
    CHECK_FALSE(SplitSpec{Part::minus, Part::plus}.covers(L(0)));
    CHECK_THROWS_AS((SplitSpec{Part::plus, Part::zero_plus}.check()), DomainError);
    CHECK(parse_part("zero_plus") == Part::zero_plus);
    CHECK_THROWS_AS(parse_part("middle"), DomainError);
}
