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
 // Basis elements of graded Lie (super)algebras and the plugin interface that
 // supplies their structure constants.

#ifndef EXPFACTOR_BASIS_HPP
#define EXPFACTOR_BASIS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expfactor/rational.hpp"

namespace expfactor {

/* A basis element of a graded algebra.
 *
 * `degree` is stored doubled so half-integer gradings stay integral: L_{-3}
 * has degree -6 and G_{1/2} has degree 1. `family` and `sub` are tags owned
 * by the plugin (e.g. family L vs G, or the finite-algebra index of an affine
 * generator). Identity and order use (degree, family, sub) only; parity and
 * centrality are fixed by the owning plugin.
 */
struct BasisIndex {
    int degree = 0;
    int family = 0;
    int sub = 0;
    std::uint8_t parity = 0;
    bool central = false;

    friend bool operator==(const BasisIndex& x, const BasisIndex& y) {
        return x.degree == y.degree && x.family == y.family && x.sub == y.sub;
    }
    friend std::strong_ordering operator<=>(const BasisIndex& x, const BasisIndex& y) {
        if (auto c = x.degree <=> y.degree; c != 0) return c;
        if (auto c = x.family <=> y.family; c != 0) return c;
        return x.sub <=> y.sub;
    }
};

using BasisCombination = std::vector<std::pair<BasisIndex, Rational>>;

enum class ScalarRing { rational, grassmann };

/* Structure constants of a Z-graded Lie algebra or Lie superalgebra.
 *
 * For superalgebras `bracket` is the superbracket; the Grassmann envelope sign
 * is applied by the series layer. Implementations are immutable after
 * construction and may be shared across threads.
 */
class LieAlgebraPlugin {
public:
    virtual ~LieAlgebraPlugin() = default;

    virtual std::string name() const = 0;
    virtual ScalarRing scalar_ring() const = 0;

    // Every output term has degree x.degree + y.degree. Zero coefficients are
    // never returned.
    virtual BasisCombination bracket(const BasisIndex& x, const BasisIndex& y) const = 0;

    virtual std::string format(const BasisIndex& x) const = 0;
    virtual BasisIndex parse(std::string_view text) const = 0;

    // All basis elements with |degree| <= max_abs_degree, in natural
    // (undoubled) units.
    virtual std::vector<BasisIndex> basis_window(int max_abs_degree) const = 0;

    // Plugin-specific axiom checks beyond skew-symmetry and Jacobi (e.g.
    // invariance of an affine bilinear form). Returns violation messages.
    virtual std::vector<std::string> extra_checks() const { return {}; }
};

using PluginPtr = std::shared_ptr<const LieAlgebraPlugin>;

// Formats a doubled index as "3", "-2" or "1/2", "-3/2".
std::string doubled_string(int doubled);
// Inverse of doubled_string; accepts integers and "p/2".
int parse_doubled(std::string_view text);

} // namespace expfactor

#endif // EXPFACTOR_BASIS_HPP
