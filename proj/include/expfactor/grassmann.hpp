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
 // Elements of a rational exterior algebra: the scalar ring of Grassmann
 // envelopes.

#ifndef EXPFACTOR_GRASSMANN_HPP
#define EXPFACTOR_GRASSMANN_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "expfactor/rational.hpp"

namespace expfactor {

// Strictly increasing generator labels. A label is a doubled index, so the
// generator a_{1/2} is stored as 1 and a_{-3/2} as -3.
using GeneratorSet = std::vector<int>;

/* A finite sum of rational multiples of products of anticommuting generators.
 *
 * Canonical form: every key is strictly increasing and no coefficient is zero.
 * A product with a repeated generator vanishes and is never stored.
 */
class GrassmannScalar {
public:
    using Terms = std::map<GeneratorSet, Rational>;

    GrassmannScalar() = default;
    GrassmannScalar(const Rational& r);  // NOLINT: rationals embed as even scalars
    GrassmannScalar(long r) : GrassmannScalar(Rational(r)) {}  // NOLINT

    static GrassmannScalar generator(int label);

    // Builds a canonical element from raw products in arbitrary order:
    // generators are sorted with the transposition sign, squares vanish and
    // like terms are merged.
    static GrassmannScalar from_products(const std::vector<std::pair<std::vector<int>, Rational>>& products);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // 0 or 1 for a homogeneous element (zero counts as even); -1 when mixed.
    int parity() const;
    bool is_homogeneous() const { return parity() >= 0; }

    // Negates the odd part when `p` is odd: x -> (-1)^{p * eta(x)} x, applied
    // term by term so inhomogeneous elements are handled too.
    GrassmannScalar twisted(int p) const;

    GrassmannScalar& operator+=(const GrassmannScalar& rhs);
    GrassmannScalar& operator-=(const GrassmannScalar& rhs);
    GrassmannScalar& operator*=(const GrassmannScalar& rhs) { return *this = *this * rhs; }
    GrassmannScalar& operator*=(const Rational& rhs);

    friend GrassmannScalar operator+(GrassmannScalar lhs, const GrassmannScalar& rhs) { return lhs += rhs; }
    friend GrassmannScalar operator-(GrassmannScalar lhs, const GrassmannScalar& rhs) { return lhs -= rhs; }
    friend GrassmannScalar operator*(const GrassmannScalar& lhs, const GrassmannScalar& rhs);
    friend GrassmannScalar operator*(GrassmannScalar lhs, const Rational& rhs) { return lhs *= rhs; }
    friend GrassmannScalar operator*(const Rational& lhs, GrassmannScalar rhs) { return rhs *= lhs; }
    GrassmannScalar operator-() const;

    friend bool operator==(const GrassmannScalar&, const GrassmannScalar&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const GrassmannScalar& g);

// Concatenates two sorted generator sets into sorted order. Returns the sign
// of the reordering (+1/-1), or 0 when a generator repeats.
int merge_generators(const GeneratorSet& lhs, const GeneratorSet& rhs, GeneratorSet& out);

// Uniform accessors so series code can be written once for both rings.
inline int scalar_parity(const Rational&) { return 0; }
inline int scalar_parity(const GrassmannScalar& g) { return g.parity(); }
inline Rational twisted(const Rational& r, int) { return r; }
inline GrassmannScalar twisted(const GrassmannScalar& g, int p) { return g.twisted(p); }
inline std::string scalar_string(const Rational& r) { return r.to_string(); }
inline std::string scalar_string(const GrassmannScalar& g) { return g.to_string(); }

} // namespace expfactor

#endif // EXPFACTOR_GRASSMANN_HPP
