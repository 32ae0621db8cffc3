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
 // Concrete structure-constant plugins: Virasoro, affine Lie algebras, and the
 // N=1 Neveu-Schwarz superalgebra (used through its Grassmann envelope).

#ifndef EXPFACTOR_ALGEBRAS_HPP
#define EXPFACTOR_ALGEBRAS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expfactor/basis.hpp"
#include "expfactor/rational.hpp"

namespace expfactor {

// [L_m, L_n] = (m - n) L_{m+n} + (m^3 - m)/12 delta_{m+n,0} c,  c central.
class VirasoroAlgebra final : public LieAlgebraPlugin {
public:
    enum Family : int { family_l = 0, family_c = 1 };

    static BasisIndex L(int n) { return {2 * n, family_l, 0, 0, false}; }
    static BasisIndex c() { return {0, family_c, 0, 0, true}; }

    std::string name() const override { return "virasoro"; }
    ScalarRing scalar_ring() const override { return ScalarRing::rational; }
    BasisCombination bracket(const BasisIndex& x, const BasisIndex& y) const override;
    std::string format(const BasisIndex& x) const override;
    BasisIndex parse(std::string_view text) const override;
    std::vector<BasisIndex> basis_window(int max_abs_degree) const override;
};

/* N=1 Neveu-Schwarz superalgebra. Degrees are doubled: L_n has degree 2n,
 * G_r (r in Z + 1/2) has odd degree 2r. The bracket is the superbracket:
 *   [L_m, L_n] as Virasoro,
 *   [G_r, L_n] = (r - n/2) G_{r+n},
 *   [G_r, G_s] = 2 L_{r+s} + (r^2 - 1/4)/3 delta_{r+s,0} c.
 */
class NeveuSchwarzAlgebra final : public LieAlgebraPlugin {
public:
    enum Family : int { family_l = 0, family_g = 1, family_c = 2 };

    static BasisIndex L(int n) { return {2 * n, family_l, 0, 0, false}; }
    // `doubled` must be odd: G(1) is G_{1/2}.
    static BasisIndex G(int doubled);
    static BasisIndex c() { return {0, family_c, 0, 0, true}; }

    std::string name() const override { return "ns1"; }
    ScalarRing scalar_ring() const override { return ScalarRing::grassmann; }
    BasisCombination bracket(const BasisIndex& x, const BasisIndex& y) const override;
    std::string format(const BasisIndex& x) const override;
    BasisIndex parse(std::string_view text) const override;
    std::vector<BasisIndex> basis_window(int max_abs_degree) const override;
};

// A finite-dimensional Lie algebra l with an l-invariant symmetric form.
struct FiniteLieData {
    std::vector<std::string> names;
    // structure[i][j][k]: coefficient of basis k in [x_i, x_j].
    std::vector<std::vector<std::vector<Rational>>> structure;
    std::vector<std::vector<Rational>> form;

    std::size_t dim() const { return names.size(); }
    // Checks shapes only; the axioms are checked by validate_plugin.
    void check_shape() const;
};

// sl2 with [e,f] = h, [h,e] = 2e, [h,f] = -2f and the trace form of the
// fundamental representation: (e,f) = 1, (h,h) = 2.
FiniteLieData sl2_data();

/* Affine algebra l (x) F[x, x^{-1}] + F k with
 *   [g (x) x^m, h (x) x^n] = [g,h] (x) x^{m+n} + (g,h) m delta_{m+n,0} k.
 * The basis element x_i (x) x^n prints as "name@n"; k prints as "k".
 */
class AffineAlgebra final : public LieAlgebraPlugin {
public:
    enum Family : int { family_g = 0, family_k = 1 };

    // Does not validate; use make_affine for checked construction.
    explicit AffineAlgebra(FiniteLieData data, std::string label = "affine");

    static BasisIndex gen(int i, int n) { return {2 * n, family_g, i, 0, false}; }
    static BasisIndex k() { return {0, family_k, 0, 0, true}; }

    const FiniteLieData& data() const { return data_; }
    int index_of(std::string_view name) const;
    Rational form(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    std::string name() const override { return label_; }
    ScalarRing scalar_ring() const override { return ScalarRing::rational; }
    BasisCombination bracket(const BasisIndex& x, const BasisIndex& y) const override;
    std::string format(const BasisIndex& x) const override;
    BasisIndex parse(std::string_view text) const override;
    std::vector<BasisIndex> basis_window(int max_abs_degree) const override;
    std::vector<std::string> extra_checks() const override;

private:
    FiniteLieData data_;
    std::string label_;
};

struct ValidationReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::vector<std::string> failures;
    // First Jacobi violation, as formatted basis names.
    std::optional<std::vector<std::string>> jacobi_witness;
};

// Exhaustive check on the basis window |degree| <= max_abs_degree: degree and
// parity additivity, graded skew-symmetry, centrality, graded Jacobi, plus
// the plugin's extra checks.
ValidationReport validate_plugin(const LieAlgebraPlugin& plugin, int max_abs_degree);

// Builds and validates (window 2); throws DomainError listing violations.
std::shared_ptr<const AffineAlgebra> make_affine(FiniteLieData data, std::string label = "affine");

} // namespace expfactor

#endif // EXPFACTOR_ALGEBRAS_HPP
