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
 // Truncated enveloping-algebra arithmetic and PBW straightening: an
 // independent check of exponential identities produced by the factor module.
 //
 // Elements are sums of (scalar) * (monomial) * (word in basis letters), the
 // scalar written on the left. For Grassmann scalars this is A (x) U(q) with
 // Koszul signs, into which the enveloping algebra of the Grassmann envelope
 // maps homomorphically.

#ifndef EXPFACTOR_PBW_HPP
#define EXPFACTOR_PBW_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "expfactor/lie_series.hpp"

namespace expfactor {

using UWord = std::vector<BasisIndex>;

inline int word_parity(const UWord& w) {
    int p = 0;
    for (const auto& x : w) p += x.parity;
    return p % 2;
}

std::string format_word(const LieAlgebraPlugin& plugin, const UWord& w);

/* Normal order: negative-degree letters, then positive-degree letters, then
 * non-central degree-zero letters, then central letters; ascending degree and
 * tag within each class.
 */
inline std::tuple<int, int, int, int> normal_rank(const BasisIndex& x) {
    const int cls = x.central ? 3 : (x.degree < 0 ? 0 : (x.degree > 0 ? 1 : 2));
    return {cls, x.degree, x.family, x.sub};
}

template <class S>
class UElement {
public:
    // Keyed monomial first so the lowest-order discrepancy sorts first.
    using Key = std::pair<Monomial, UWord>;
    using Terms = std::map<Key, S>;

    UElement(PluginPtr plugin, Truncation truncation) : plugin_(std::move(plugin)), truncation_(truncation) {}

    static UElement one(PluginPtr plugin, Truncation truncation) {
        UElement out(std::move(plugin), truncation);
        out.add(Monomial(), UWord(), S(Rational(1)));
        return out;
    }

    // Embeds a Lie series as length-one words.
    static UElement from_series(const LieSeries<S>& x) {
        UElement out(x.plugin(), x.truncation());
        for (const auto& [k, c] : x.terms()) out.add(k.second, UWord{k.first}, c);
        return out;
    }

    const PluginPtr& plugin() const { return plugin_; }
    const Truncation& truncation() const { return truncation_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Monomial& m, const UWord& w, const S& c) {
        if (c.is_zero() || m.weight(truncation_) > truncation_.order) return;
        auto [it, inserted] = terms_.try_emplace(Key{m, w}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    S coefficient(const Monomial& m, const UWord& w) const {
        const auto it = terms_.find(Key{m, w});
        return it == terms_.end() ? S() : it->second;
    }

    UElement& operator+=(const UElement& rhs) {
        check_compatible(rhs);
        for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
        return *this;
    }
    UElement& operator-=(const UElement& rhs) {
        check_compatible(rhs);
        for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, -c);
        return *this;
    }
    UElement& operator*=(const Rational& r) {
        if (r.is_zero()) terms_.clear();
        for (auto& [k, c] : terms_) c *= r;
        return *this;
    }
    friend UElement operator+(UElement x, const UElement& y) { return x += y; }
    friend UElement operator-(UElement x, const UElement& y) { return x -= y; }
    friend UElement operator*(UElement x, const Rational& r) { return x *= r; }
    friend bool operator==(const UElement& x, const UElement& y) {
        return x.plugin_ == y.plugin_ && x.terms_ == y.terms_;
    }

    void check_compatible(const UElement& rhs) const {
        if (plugin_ != rhs.plugin_) throw UsageError("enveloping-algebra elements built on different plugins");
        if (truncation_ != rhs.truncation_) throw UsageError("enveloping-algebra elements use different truncations");
    }

private:
    PluginPtr plugin_;
    Truncation truncation_;
    Terms terms_;
};

/* Free product: words concatenate, monomials multiply. Moving the right
 * factor's scalar b to the front past the left word w costs
 * (-1)^{eta(b) eta(w)}.
 */
template <class S>
UElement<S> u_mul(const UElement<S>& x, const UElement<S>& y) {
    x.check_compatible(y);
    const Truncation& t = x.truncation();
    UElement<S> out(x.plugin(), t);
    UWord w;
    for (const auto& [xk, xc] : x.terms()) {
        const int xw = xk.first.weight(t);
        const int xp = word_parity(xk.second);
        for (const auto& [yk, yc] : y.terms()) {
            if (xw + yk.first.weight(t) > t.order) continue;
            w = xk.second;
            w.insert(w.end(), yk.second.begin(), yk.second.end());
            out.add(xk.first * yk.first, w, xc * twisted(yc, xp));
        }
    }
    return out;
}

// sum_{k <= N} X^k / k!. Every term of X needs variable order >= 1.
template <class S>
UElement<S> u_exp(const LieSeries<S>& x) {
    if (!x.is_zero() && x.min_weight() < 1) throw ConvergenceError("u_exp: every term needs variable order >= 1");
    const UElement<S> gen = UElement<S>::from_series(x);
    UElement<S> out = UElement<S>::one(x.plugin(), x.truncation());
    UElement<S> power = out;
    for (int k = 1; k <= x.order(); ++k) {
        power = u_mul(power, gen) * Rational(1, k);
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

/* Rewrites words to PBW normal order with
 *     x y -> (-1)^{eta(x) eta(y)} y x + [x, y]   for out-of-order neighbours,
 *     x x -> 1/2 [x, x]                          for a repeated odd letter,
 * always at the leftmost offending position. Normal forms of words are
 * memoized per instance; the rewriting only involves rational structure
 * constants, never the scalars.
 */
class Straightener {
public:
    using Combination = std::vector<std::pair<UWord, Rational>>;

    explicit Straightener(PluginPtr plugin) : plugin_(std::move(plugin)) {}

    static bool is_normal(const UWord& w);
    const Combination& normal_form(const UWord& w);
    std::size_t rewrites() const { return rewrites_; }

    template <class S>
    UElement<S> straighten(const UElement<S>& x) {
        if (x.plugin() != plugin_) throw UsageError("straightener built for a different plugin");
        UElement<S> out(x.plugin(), x.truncation());
        for (const auto& [k, c] : x.terms()) {
            if (is_normal(k.second)) {
                out.add(k.first, k.second, c);
                continue;
            }
            for (const auto& [w, r] : normal_form(k.second)) out.add(k.first, w, c * r);
        }
        return out;
    }

private:
    PluginPtr plugin_;
    std::map<UWord, Combination> memo_;
    std::size_t rewrites_ = 0;
};

template <class S>
UElement<S> straighten(const UElement<S>& x) {
    Straightener s(x.plugin());
    return s.straighten(x);
}

struct Mismatch {
    std::string word;
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    bool ok = true;
    int order = 0;
    std::vector<Mismatch> mismatches;  // lowest order first, capped
    std::size_t mismatch_count = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    std::size_t rewrites = 0;
};

/* Checks prod_i e^{lhs_i} = prod_j e^{rhs_j} through `order` by straightening
 * both products to normal form and comparing term by term.
 */
template <class S>
VerificationReport verify_products(const std::vector<LieSeries<S>>& lhs, const std::vector<LieSeries<S>>& rhs,
                                   int order, std::size_t max_mismatches = 10) {
    if (lhs.empty() || rhs.empty()) throw UsageError("verify_products needs at least one factor per side");
    const PluginPtr plugin = lhs.front().plugin();
    const Truncation t{order, lhs.front().truncation().count_auxiliary};
    auto product = [&](const std::vector<LieSeries<S>>& factors) {
        UElement<S> acc = UElement<S>::one(plugin, t);
        for (const auto& f : factors) {
            if (f.plugin() != plugin) throw UsageError("verify_products: factors on different plugins");
            acc = u_mul(acc, u_exp(f.truncated(t)));
        }
        return acc;
    };
    Straightener straightener(plugin);
    const UElement<S> left = straightener.straighten(product(lhs));
    const UElement<S> right = straightener.straighten(product(rhs));

    VerificationReport report;
    report.order = order;
    report.lhs_terms = left.size();
    report.rhs_terms = right.size();
    const UElement<S> diff = left - right;
    report.ok = diff.is_zero();
    report.mismatch_count = diff.size();
    for (const auto& [k, c] : diff.terms()) {
        if (report.mismatches.size() >= max_mismatches) break;
        report.mismatches.push_back({format_word(*plugin, k.second), k.first.to_string(),
                                     scalar_string(left.coefficient(k.first, k.second)),
                                     scalar_string(right.coefficient(k.first, k.second))});
    }
    report.rewrites = straightener.rewrites();
    return report;
}

// e^{gp} e^{gm} == e^{psi_minus} e^{psi_plus} e^{psi_zero}.
template <class S>
VerificationReport verify_triple(const LieSeries<S>& gp, const LieSeries<S>& gm, const LieSeries<S>& psi_minus,
                                 const LieSeries<S>& psi_plus, const LieSeries<S>& psi_zero, int order) {
    return verify_products<S>({gp, gm}, {psi_minus, psi_plus, psi_zero}, order);
}

} // namespace expfactor

#endif // EXPFACTOR_PBW_HPP
