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

#include <set>

#include "expfactor/algebras.hpp"
#include "support.hpp"

using namespace expfactor;
using namespace testsupport;

namespace {

BasisCombination combo(std::initializer_list<std::pair<BasisIndex, Rational>> terms) { return BasisCombination(terms); }

// Order-insensitive comparison of bracket outputs.
std::map<BasisIndex, Rational> as_map(const BasisCombination& c) {
    std::map<BasisIndex, Rational> out;
    for (const auto& [x, v] : c) out[x] += v;
    return out;
}

BasisIndex e_at(int n) { return AffineAlgebra::gen(0, n); }
BasisIndex f_at(int n) { return AffineAlgebra::gen(1, n); }
BasisIndex h_at(int n) { return AffineAlgebra::gen(2, n); }

} // namespace

TEST_CASE("virasoro brackets") {
    const auto& v = *virasoro();
    const BasisIndex c = VirasoroAlgebra::c();
    CHECK(as_map(v.bracket(L(2), L(-2))) == as_map(combo({{L(0), 4}, {c, Rational(1, 2)}})));
    CHECK(v.bracket(L(3), c).empty());
    CHECK(v.bracket(c, L(3)).empty());
    CHECK(as_map(v.bracket(L(1), L(-1))) == as_map(combo({{L(0), 2}})));
    CHECK(v.bracket(L(4), L(4)).empty());

    SUBCASE("agrees with the defining relation on a window") {
        for (int m = -6; m <= 6; ++m)
            for (int n = -6; n <= 6; ++n) {
                const auto [l, z] = virasoro_oracle(m, n);
                std::map<BasisIndex, Rational> expected;
                if (!l.is_zero()) expected[L(m + n)] = l;
                if (!z.is_zero()) expected[c] = z;
                CHECK(as_map(v.bracket(L(m), L(n))) == expected);
            }
    }
}

TEST_CASE("affine sl2 brackets with the trace form") {
    const auto& a = *sl2_affine();
    CHECK(as_map(a.bracket(e_at(1), f_at(-1))) == as_map(combo({{h_at(0), 1}, {AffineAlgebra::k(), 1}})));
    CHECK(as_map(a.bracket(h_at(2), h_at(-2))) == as_map(combo({{AffineAlgebra::k(), 4}})));
    CHECK(a.bracket(e_at(3), AffineAlgebra::k()).empty());

    SUBCASE("agrees with matrix commutators and the matrix trace") {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int m = -2; m <= 2; ++m)
                    for (int n = -2; n <= 2; ++n) {
                        std::vector<Rational> ui(3), uj(3);
                        ui[static_cast<std::size_t>(i)] = 1;
                        uj[static_cast<std::size_t>(j)] = 1;
                        const Mat2 x = mat_combination(ui), y = mat_combination(uj);
                        Mat2 comm{};
                        for (int r = 0; r < 2; ++r)
                            for (int c = 0; c < 2; ++c)
                                for (int k = 0; k < 2; ++k) comm[r][c] += x[r][k] * y[k][c] - y[r][k] * x[k][c];
                        // decompose comm = p e + q f + s h
                        std::map<BasisIndex, Rational> expected;
                        if (!comm[0][1].is_zero()) expected[e_at(m + n)] = comm[0][1];
                        if (!comm[1][0].is_zero()) expected[f_at(m + n)] = comm[1][0];
                        if (!comm[0][0].is_zero()) expected[h_at(m + n)] = comm[0][0];
                        const Rational central = m + n == 0 ? trace_form(x, y) * Rational(m) : Rational(0);
                        if (!central.is_zero()) expected[AffineAlgebra::k()] = central;
                        CHECK(as_map(a.bracket(AffineAlgebra::gen(i, m), AffineAlgebra::gen(j, n))) == expected);
                    }
    }
}

TEST_CASE("neveu-schwarz superbrackets") {
    const auto& s = *ns1();
    const BasisIndex c = NeveuSchwarzAlgebra::c();
    CHECK(as_map(s.bracket(G(1), G(-1))) == as_map(combo({{L(0), 2}})));
    CHECK(as_map(s.bracket(G(3), L(-1))) == as_map(combo({{G(1), 2}})));
    CHECK(as_map(s.bracket(G(3), G(-3))) == as_map(combo({{L(0), 2}, {c, Rational(2, 3)}})));
    CHECK(as_map(s.bracket(G(1), G(1))) == as_map(combo({{L(1), 2}})));
    CHECK(s.bracket(G(5), c).empty());

    SUBCASE("agrees with the relations on a window") {
        for (int r2 = -7; r2 <= 7; r2 += 2)
            for (int n = -3; n <= 3; ++n) {
                const Rational gl = ns_gl_oracle(r2, n);
                std::map<BasisIndex, Rational> expected;
                if (!gl.is_zero()) expected[G(r2 + 2 * n)] = gl;
                CHECK(as_map(s.bracket(G(r2), L(n))) == expected);
                std::map<BasisIndex, Rational> flipped;
                if (!gl.is_zero()) flipped[G(r2 + 2 * n)] = -gl;
                CHECK(as_map(s.bracket(L(n), G(r2))) == flipped);
            }
        for (int r2 = -7; r2 <= 7; r2 += 2)
            for (int s2 = -7; s2 <= 7; s2 += 2) {
                std::map<BasisIndex, Rational> expected{{L((r2 + s2) / 2), 2}};
                if (r2 + s2 == 0 && !ns_gg_central_oracle(r2).is_zero()) expected[c] = ns_gg_central_oracle(r2);
                CHECK(as_map(s.bracket(G(r2), G(s2))) == expected);
            }
    }

    SUBCASE("the L-L sector is Virasoro") {
        const auto& v = *virasoro();
        for (int m = -5; m <= 5; ++m)
            for (int n = -5; n <= 5; ++n) {
                std::map<std::string, Rational> lhs, rhs;
                for (const auto& [x, k] : s.bracket(L(m), L(n))) lhs[s.format(x)] = k;
                for (const auto& [x, k] : v.bracket(L(m), L(n))) rhs[v.format(x)] = k;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("formatting and parsing basis names") {
    CHECK(virasoro()->format(L(-3)) == "L_-3");
    CHECK(virasoro()->parse("L_-3") == L(-3));
    CHECK(virasoro()->parse("c") == VirasoroAlgebra::c());
    CHECK_THROWS_AS(virasoro()->parse("L_1/2"), DomainError);
    CHECK_THROWS_AS(virasoro()->parse("G_1/2"), DomainError);
    CHECK(ns1()->format(G(1)) == "G_1/2");
    CHECK(ns1()->format(G(-3)) == "G_-3/2");
    CHECK(ns1()->parse("G_-3/2") == G(-3));
    CHECK(ns1()->parse("L_2") == L(2));
    CHECK_THROWS_AS(ns1()->parse("G_1"), DomainError);
    CHECK_THROWS_AS(NeveuSchwarzAlgebra::G(2), DomainError);
    CHECK(sl2_affine()->format(e_at(2)) == "e@2");
    CHECK(sl2_affine()->format(h_at(-1)) == "h@-1");
    CHECK(sl2_affine()->parse("f@-2") == f_at(-2));
    CHECK(sl2_affine()->parse("k") == AffineAlgebra::k());
    CHECK_THROWS_AS(sl2_affine()->parse("x@1"), DomainError);
    CHECK_THROWS_AS(sl2_affine()->parse("e"), DomainError);
    for (const auto& plugin : {virasoro(), ns1(), sl2_affine()})
        for (const auto& x : plugin->basis_window(3)) CHECK(plugin->parse(plugin->format(x)) == x);
}

TEST_CASE("degree and parity additivity") {
    for (const auto& plugin : {virasoro(), ns1(), sl2_affine()})
        for (const auto& x : plugin->basis_window(4))
            for (const auto& y : plugin->basis_window(4))
                for (const auto& [z, c] : plugin->bracket(x, y)) {
                    CHECK(z.degree == x.degree + y.degree);
                    CHECK(z.parity == (x.parity + y.parity) % 2);
                    CHECK(!c.is_zero());
                }
}

TEST_CASE("validate_plugin on shipped algebras") {
    const ValidationReport v = validate_plugin(*virasoro(), 6);
    CHECK(v.ok);
    CHECK(v.failures.empty());
    CHECK(v.triples_checked > 0);
    CHECK(validate_plugin(*sl2_affine(), 4).ok);
    CHECK(validate_plugin(*ns1(), 4).ok);
}

TEST_CASE("a corrupted sl2 constant is caught") {
    FiniteLieData bad = sl2_data();
    bad.structure[0][1][2] = 2;   // [e, f] := 2h
    bad.structure[1][0][2] = -2;
    const AffineAlgebra plugin(bad, "bad-sl2");
    const ValidationReport r = validate_plugin(plugin, 2);
    CHECK_FALSE(r.ok);
    REQUIRE(r.jacobi_witness.has_value());
    std::set<std::string> families;
    for (const auto& name : *r.jacobi_witness) families.insert(name.substr(0, name.find('@')));
    CHECK(families == std::set<std::string>{"e", "f", "h"});
    bool invariance = false;
    for (const auto& f : plugin.extra_checks()) invariance |= f.find("invariant") != std::string::npos;
    CHECK(invariance);
    CHECK_THROWS_AS(make_affine(bad), DomainError);
}

TEST_CASE("finite-algebra shape checks") {
    FiniteLieData d = sl2_data();
    d.names.push_back("x");
    CHECK_THROWS_AS(AffineAlgebra{d}, DomainError);
    FiniteLieData dup = sl2_data();
    dup.names[1] = "e";
    CHECK_THROWS_AS(AffineAlgebra{dup}, DomainError);
    FiniteLieData k = sl2_data();
    k.names[2] = "k";
    CHECK_THROWS_AS(AffineAlgebra{k}, DomainError);
    FiniteLieData asym = sl2_data();
    asym.form[0][1] = 2;
    CHECK_FALSE(validate_plugin(AffineAlgebra(asym), 1).ok);
}

TEST_CASE("a plugin that breaks skew-symmetry is reported") {
    struct Broken final : LieAlgebraPlugin {
        std::string name() const override { return "broken"; }
        ScalarRing scalar_ring() const override { return ScalarRing::rational; }
        BasisCombination bracket(const BasisIndex& x, const BasisIndex& y) const override {
            if (x.degree == 2 && y.degree == -2) return {{L(0), Rational(1)}};
            return {};
        }
        std::string format(const BasisIndex& x) const override { return "L_" + std::to_string(x.degree / 2); }
        BasisIndex parse(std::string_view) const override { return L(0); }
        std::vector<BasisIndex> basis_window(int w) const override {
            std::vector<BasisIndex> out;
            for (int n = -w; n <= w; ++n) out.push_back(L(n));
            return out;
        }
    };
    const ValidationReport r = validate_plugin(Broken(), 1);
    CHECK_FALSE(r.ok);
    bool skew = false;
    for (const auto& f : r.failures) skew |= f.find("skew") != std::string::npos;
    CHECK(skew);
}

TEST_CASE("the envelope bracket satisfies Jacobi on parity-consistent elements") {
    Rng rng(99);
    const auto basis = ns1()->basis_window(2);
    for (int trial = 0; trial < 25; ++trial) {
        const auto x = random_series<GrassmannScalar>(rng, ns1(), 6, basis, 3, 2, 0, 0);
        const auto y = random_series<GrassmannScalar>(rng, ns1(), 6, basis, 3, 2, 0, 0);
        const auto z = random_series<GrassmannScalar>(rng, ns1(), 6, basis, 3, 2, 0, 0);
        const auto jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        CHECK(jacobi.is_zero());
    }
}
