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
 // Sparse truncated Lie series: finite sums of (scalar) * (monomial in the
 // formal variables) * (basis element), with brackets evaluated through a
 // structure-constant plugin.

#ifndef EXPFACTOR_LIE_SERIES_HPP
#define EXPFACTOR_LIE_SERIES_HPP

#include <map>
#include <string>
#include <utility>

#include "expfactor/basis.hpp"
#include "expfactor/errors.hpp"
#include "expfactor/grassmann.hpp"
#include "expfactor/monomial.hpp"
#include "expfactor/rational.hpp"

namespace expfactor {

enum class Part { minus, zero, plus, zero_plus };

constexpr bool in_part(const BasisIndex& x, Part part) {
    switch (part) {
    case Part::minus: return x.degree < 0;
    case Part::zero: return x.degree == 0;
    case Part::plus: return x.degree > 0;
    case Part::zero_plus: return x.degree >= 0;
    }
    return false;
}

std::string part_name(Part part);
Part parse_part(const std::string& text);

template <class S>
constexpr ScalarRing ring_of() {
    if constexpr (std::is_same_v<S, GrassmannScalar>) return ScalarRing::grassmann;
    else return ScalarRing::rational;
}

/* An element of g[[vars]] truncated at a fixed variable order.
 *
 * Terms whose monomial weight exceeds the truncation order are dropped when
 * they are created, never stored. In the Grassmann case the scalar attached
 * to an odd basis element is expected to be odd (and even to an even one);
 * `parity_consistent()` audits this.
 */
template <class S>
class LieSeries {
public:
    using Key = std::pair<BasisIndex, Monomial>;
    using Terms = std::map<Key, S>;

    LieSeries(PluginPtr plugin, Truncation truncation) : plugin_(std::move(plugin)), truncation_(truncation) {
        if (!plugin_) throw UsageError("LieSeries needs a plugin");
        if (truncation_.order < 0) throw DomainError("truncation order must be >= 0");
        if (plugin_->scalar_ring() == ScalarRing::grassmann && ring_of<S>() != ScalarRing::grassmann)
            throw UsageError("algebra " + plugin_->name() + " needs Grassmann coefficients");
    }

    static LieSeries term(PluginPtr plugin, Truncation truncation, const BasisIndex& x, const Monomial& m,
                          const S& coeff) {
        LieSeries out(std::move(plugin), truncation);
        out.add(x, m, coeff);
        return out;
    }

    const PluginPtr& plugin() const { return plugin_; }
    const Truncation& truncation() const { return truncation_; }
    int order() const { return truncation_.order; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const BasisIndex& x, const Monomial& m, const S& coeff) {
        if (coeff.is_zero() || m.weight(truncation_) > truncation_.order) return;
        auto [it, inserted] = terms_.try_emplace(Key{x, m}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    S coefficient(const BasisIndex& x, const Monomial& m) const {
        const auto it = terms_.find(Key{x, m});
        return it == terms_.end() ? S() : it->second;
    }

    LieSeries& operator+=(const LieSeries& rhs) {
        check_compatible(rhs);
        for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
        return *this;
    }
    LieSeries& operator-=(const LieSeries& rhs) {
        check_compatible(rhs);
        for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, -c);
        return *this;
    }
    LieSeries& operator*=(const Rational& r) {
        if (r.is_zero()) terms_.clear();
        for (auto& [k, c] : terms_) c *= r;
        return *this;
    }
    friend LieSeries operator+(LieSeries x, const LieSeries& y) { return x += y; }
    friend LieSeries operator-(LieSeries x, const LieSeries& y) { return x -= y; }
    friend LieSeries operator*(LieSeries x, const Rational& r) { return x *= r; }
    friend LieSeries operator*(const Rational& r, LieSeries x) { return x *= r; }
    LieSeries operator-() const { return *this * Rational(-1); }

    // Equality of values; plugins must match, truncations are ignored.
    friend bool operator==(const LieSeries& x, const LieSeries& y) {
        return x.plugin_ == y.plugin_ && x.terms_ == y.terms_;
    }

    void check_compatible(const LieSeries& rhs) const {
        if (plugin_ != rhs.plugin_) throw UsageError("series built on different algebra plugins");
        if (truncation_.count_auxiliary != rhs.truncation_.count_auxiliary)
            throw UsageError("series use different truncation gradings");
    }

    // Same terms under a new truncation; terms above the new order are dropped.
    LieSeries truncated(Truncation t) const {
        LieSeries out(plugin_, t);
        for (const auto& [k, c] : terms_) out.add(k.first, k.second, c);
        return out;
    }
    LieSeries truncated(int order) const { return truncated(Truncation{order, truncation_.count_auxiliary}); }

    LieSeries project(Part part) const {
        LieSeries out(plugin_, truncation_);
        for (const auto& [k, c] : terms_)
            if (in_part(k.first, part)) out.terms_.emplace(k, c);
        return out;
    }

    template <class Pred>
    LieSeries filter(Pred&& keep) const {
        LieSeries out(plugin_, truncation_);
        for (const auto& [k, c] : terms_)
            if (keep(k.first, k.second, c)) out.terms_.emplace(k, c);
        return out;
    }

    // Terms of the given monomial weight.
    LieSeries order_component(int weight) const {
        return filter([&](const BasisIndex&, const Monomial& m, const S&) { return m.weight(truncation_) == weight; });
    }
    LieSeries bidegree_component(int minus, int plus) const {
        return filter([&](const BasisIndex&, const Monomial& m, const S&) {
            return m.minus_order() == minus && m.plus_order() == plus;
        });
    }

    // Smallest monomial weight present; -1 for the zero series.
    int min_weight() const {
        int w = -1;
        for (const auto& [k, c] : terms_) {
            const int x = k.second.weight(truncation_);
            if (w < 0 || x < w) w = x;
        }
        return w;
    }

    bool parity_consistent() const {
        for (const auto& [k, c] : terms_) {
            const int p = scalar_parity(c);
            if (c.is_zero()) continue;
            if (p != static_cast<int>(k.first.parity)) return false;
        }
        return true;
    }

    // Multiplies every monomial by `m` (truncation applies).
    LieSeries times_monomial(const Monomial& m) const {
        LieSeries out(plugin_, truncation_);
        for (const auto& [k, c] : terms_) out.add(k.first, k.second * m, c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + scalar_string(c) + ")*" + k.second.to_string() + "*" + plugin_->format(k.first);
        }
        return out;
    }

private:
    PluginPtr plugin_;
    Truncation truncation_;
    Terms terms_;
};

/* Bilinear extension of the plugin bracket.
 *
 * For Grassmann coefficients this is the envelope bracket
 *     [a u, b v] = (-1)^{eta(b) eta(u)} a b [u, v],
 * applied term by term. Monomials multiply; products above the truncation
 * order are skipped before the structure constants are consulted.
 */
template <class S>
LieSeries<S> bracket(const LieSeries<S>& x, const LieSeries<S>& y) {
    x.check_compatible(y);
    const Truncation t{std::min(x.order(), y.order()), x.truncation().count_auxiliary};
    LieSeries<S> out(x.plugin(), t);
    const auto& plugin = *x.plugin();
    for (const auto& [xk, xc] : x.terms()) {
        const int xw = xk.second.weight(t);
        for (const auto& [yk, yc] : y.terms()) {
            if (xw + yk.second.weight(t) > t.order) continue;
            const BasisCombination structure = plugin.bracket(xk.first, yk.first);
            if (structure.empty()) continue;
            const Monomial m = xk.second * yk.second;
            const S coeff = xc * twisted(yc, xk.first.parity);
            if (coeff.is_zero()) continue;
            for (const auto& [w, c] : structure) out.add(w, m, coeff * c);
        }
    }
    return out;
}

} // namespace expfactor

#endif // EXPFACTOR_LIE_SERIES_HPP
