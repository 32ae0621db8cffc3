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
 // Shared fixtures and independent oracles for the test programs. Nothing in
 // here calls the code under test to produce an expected value.

#ifndef EXPFACTOR_TESTS_SUPPORT_HPP
#define EXPFACTOR_TESTS_SUPPORT_HPP

#include <array>
#include <initializer_list>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "expfactor/algebras.hpp"
#include "expfactor/grassmann.hpp"
#include "expfactor/lie_series.hpp"
#include "expfactor/monomial.hpp"
#include "expfactor/rational.hpp"

namespace testsupport {

using namespace expfactor;

inline PluginPtr virasoro() {
    static const PluginPtr p = std::make_shared<const VirasoroAlgebra>();
    return p;
}

inline PluginPtr ns1() {
    static const PluginPtr p = std::make_shared<const NeveuSchwarzAlgebra>();
    return p;
}

inline PluginPtr sl2_affine() {
    static const PluginPtr p = make_affine(sl2_data(), "affine-sl2");
    return p;
}

// A(n), B(n) take integer modes; Ad, Bd take doubled indices.
inline VarLabel A(int n) { return VarLabel::a(2 * n); }
inline VarLabel B(int n) { return VarLabel::b(2 * n); }
inline VarLabel Ad(int doubled) { return VarLabel::a(doubled); }
inline VarLabel Bd(int doubled) { return VarLabel::b(doubled); }

inline Monomial mono(std::initializer_list<VarLabel> labels) { return Monomial(std::vector<VarLabel>(labels)); }

inline BasisIndex L(int n) { return VirasoroAlgebra::L(n); }
inline BasisIndex G(int doubled) { return NeveuSchwarzAlgebra::G(doubled); }

inline GrassmannScalar gen(int label) { return GrassmannScalar::generator(label); }

// ------------------------------------------------------------ free algebra

using Words = std::map<std::string, Rational>;

inline void add_to(Words& w, const std::string& word, const Rational& c) {
    Rational& slot = w[word];
    slot += c;
    if (slot.is_zero()) w.erase(word);
}

inline Words words_mul(const Words& x, const Words& y) {
    Words out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y) add_to(out, u + v, a * b);
    return out;
}

inline Words words_commutator(const Words& x, const Words& y) {
    Words out = words_mul(x, y);
    for (const auto& [w, c] : words_mul(y, x)) add_to(out, w, -c);
    return out;
}

inline Words words_scaled(Words x, const Rational& c) {
    if (c.is_zero()) return {};
    for (auto& [w, v] : x) v *= c;
    return x;
}

inline Words words_sum(Words x, const Words& y) {
    for (const auto& [w, c] : y) add_to(x, w, c);
    return x;
}

inline Words letter(const std::string& l) { return {{l, Rational(1)}}; }

inline Rational factorial_oracle(int n) {
    Rational out(1);
    for (int i = 2; i <= n; ++i) out *= Rational(i);
    return out;
}

/* log(e^a e^b) word by word, without any series arithmetic.
 *
 * e^a e^b = sum a^i b^j / (i! j!), so (e^a e^b - 1)^k has, at a word w, the
 * sum over splittings of w into k nonempty blocks a^i b^j of prod 1/(i! j!).
 * The log is sum_k (-1)^{k+1}/k of that.
 */
inline Words log_of_product_oracle(int max_degree) {
    Words out;
    for (int n = 1; n <= max_degree; ++n) {
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            std::string w;
            for (int i = 0; i < n; ++i) w += (bits >> (n - 1 - i)) & 1u ? 'b' : 'a';
            // block weight of w[s, e) if it has the shape a^i b^j, else zero
            auto block = [&](int s, int e) -> Rational {
                int i = s;
                while (i < e && w[static_cast<std::size_t>(i)] == 'a') ++i;
                for (int k = i; k < e; ++k)
                    if (w[static_cast<std::size_t>(k)] != 'b') return Rational(0);
                return (factorial_oracle(i - s) * factorial_oracle(e - i)).inverse();
            };
            // ways[pos][k]: weight of splitting w[0, pos) into k blocks
            std::vector<std::vector<Rational>> ways(static_cast<std::size_t>(n + 1),
                                                    std::vector<Rational>(static_cast<std::size_t>(n + 1)));
            ways[0][0] = 1;
            for (int pos = 1; pos <= n; ++pos)
                for (int start = 0; start < pos; ++start) {
                    const Rational wgt = block(start, pos);
                    if (wgt.is_zero()) continue;
                    for (int k = 0; k < n; ++k)
                        ways[static_cast<std::size_t>(pos)][static_cast<std::size_t>(k + 1)] +=
                            ways[static_cast<std::size_t>(start)][static_cast<std::size_t>(k)] * wgt;
                }
            Rational c;
            for (int k = 1; k <= n; ++k)
                c += ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * Rational(k % 2 ? 1 : -1, k);
            if (!c.is_zero()) out[w] = c;
        }
    }
    return out;
}

inline Words degree_part(const Words& w, int n) {
    Words out;
    for (const auto& [word, c] : w)
        if (static_cast<int>(word.size()) == n) out.emplace(word, c);
    return out;
}

// B_k from x / (e^x - 1) by inverting the series sum_k x^k / (k+1)!.
inline std::vector<Rational> bernoulli_oracle(int max_k) {
    std::vector<Rational> d(static_cast<std::size_t>(max_k + 1)), inv(static_cast<std::size_t>(max_k + 1));
    for (int k = 0; k <= max_k; ++k) d[static_cast<std::size_t>(k)] = factorial_oracle(k + 1).inverse();
    inv[0] = 1;
    for (int k = 1; k <= max_k; ++k) {
        Rational s;
        for (int i = 1; i <= k; ++i) s += d[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
        inv[static_cast<std::size_t>(k)] = -s;
    }
    std::vector<Rational> out;
    for (int k = 0; k <= max_k; ++k) out.push_back(inv[static_cast<std::size_t>(k)] * factorial_oracle(k));
    return out;
}

// ------------------------------------------------------ structure constants

// Virasoro coefficients straight from the relation, as (L coefficient, c coefficient).
inline std::pair<Rational, Rational> virasoro_oracle(int m, int n) {
    const Rational l(m - n);
    const Rational c = m + n == 0 ? Rational(m * m * m - m, 12) : Rational(0);
    return {l, c};
}

// Neveu-Schwarz in mode units r = r2/2:
//   [G_r, L_n] = (r - n/2) G_{r+n},  [G_r, G_s] = 2 L_{r+s} + (r^2 - 1/4)/3 delta c.
inline Rational ns_gl_oracle(int r2, int n) { return Rational(r2, 2) - Rational(n, 2); }
inline Rational ns_gg_central_oracle(int r2) {
    const Rational r(r2, 2);
    return (r * r - Rational(1, 4)) / Rational(3);
}

// sl2 in the fundamental representation: 2x2 matrices and the trace form.
using Mat2 = std::array<std::array<Rational, 2>, 2>;

inline Mat2 sl2_matrix(int i) {
    Mat2 m{};
    if (i == 0) m[0][1] = 1;  // e
    if (i == 1) m[1][0] = 1;  // f
    if (i == 2) {             // h
        m[0][0] = 1;
        m[1][1] = -1;
    }
    return m;
}

inline Mat2 mat_combination(const std::vector<Rational>& coeffs) {
    Mat2 out{};
    for (int i = 0; i < 3; ++i) {
        const Mat2 m = sl2_matrix(i);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out[r][c] += coeffs[static_cast<std::size_t>(i)] * m[r][c];
    }
    return out;
}

inline Rational trace_form(const Mat2& x, const Mat2& y) {
    Rational t;
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k) t += x[r][k] * y[k][r];
    return t;
}

// ------------------------------------------------------------- generators

using Rng = std::mt19937;

inline Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    int n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
}

inline int pick(Rng& rng, const std::vector<int>& from) {
    std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
    return from[d(rng)];
}

// Random monomial with `minus` B-labels and `plus` A-labels drawn from the
// given doubled index pools.
inline Monomial random_monomial(Rng& rng, int minus, int plus, const std::vector<int>& a_pool,
                                const std::vector<int>& b_pool) {
    std::vector<VarLabel> labels;
    for (int i = 0; i < minus; ++i) labels.push_back(VarLabel::b(pick(rng, b_pool)));
    for (int i = 0; i < plus; ++i) labels.push_back(VarLabel::a(pick(rng, a_pool)));
    return Monomial(labels);
}

// A scalar of the given parity: rational, or rational times one or two
// distinct Grassmann generators.
template <class S>
S random_scalar(Rng& rng, int parity) {
    if constexpr (std::is_same_v<S, GrassmannScalar>) {
        const std::vector<int> labels{-5, -3, -1, 1, 3, 5};
        if (parity == 1) return gen(pick(rng, labels)) * random_rational(rng);
        std::bernoulli_distribution pure(0.5);
        if (pure(rng)) return GrassmannScalar(random_rational(rng));
        const int x = pick(rng, labels);
        int y = x;
        while (y == x) y = pick(rng, labels);
        return gen(x) * gen(y) * random_rational(rng);
    } else {
        (void)parity;
        return random_rational(rng);
    }
}

/* Random series on `basis` with `terms` terms. Each monomial has total order
 * between 1 and max_order; min_minus / min_plus force at least that many B /
 * A labels.
 */
template <class S>
LieSeries<S> random_series(Rng& rng, const PluginPtr& plugin, int order, const std::vector<BasisIndex>& basis,
                           int terms, int max_order, int min_minus, int min_plus,
                           const std::vector<int>& a_pool = {2, 4}, const std::vector<int>& b_pool = {-2, -4}) {
    LieSeries<S> out(plugin, Truncation{order, true});
    std::uniform_int_distribution<std::size_t> which(0, basis.size() - 1);
    std::uniform_int_distribution<int> total(std::max(1, min_minus + min_plus), max_order);
    for (int i = 0; i < terms; ++i) {
        const BasisIndex x = basis[which(rng)];
        const int t = total(rng);
        const int free = t - min_minus - min_plus;
        std::uniform_int_distribution<int> split(0, std::max(0, free));
        const int extra_minus = split(rng);
        const Monomial m = random_monomial(rng, min_minus + extra_minus, min_plus + free - extra_minus, a_pool, b_pool);
        out.add(x, m, random_scalar<S>(rng, x.parity));
    }
    return out;
}

inline std::vector<BasisIndex> basis_where(const PluginPtr& plugin, int window, Part part, bool central = false) {
    std::vector<BasisIndex> out;
    for (const auto& x : plugin->basis_window(window))
        if (in_part(x, part) && (central || !x.central)) out.push_back(x);
    return out;
}

} // namespace testsupport

#endif // EXPFACTOR_TESTS_SUPPORT_HPP
