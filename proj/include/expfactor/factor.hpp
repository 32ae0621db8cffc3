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
 // Factorization and uniformization of products of formal exponentials.
 //
 //   factorize:        given H = Hm + Hp, find Gm, Gp with C(Gm, Gp) = H,
 //                     i.e. e^{Gm} e^{Gp} = e^{Hm + Hp};
 //   uniformize:       given Yp, Xm, find PsiL, PsiR with
 //                     e^{Yp} e^{Xm} = e^{PsiL} e^{PsiR};
 //   triple_factorize: e^{g+} e^{g-} = e^{Psi-} e^{Psi+} e^{Psi0} over a
 //                     Z-graded algebra, split minus / plus / zero.

#ifndef EXPFACTOR_FACTOR_HPP
#define EXPFACTOR_FACTOR_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "expfactor/cbh_eval.hpp"
#include "expfactor/lie_series.hpp"

namespace expfactor {

// Which graded part each factor lives in. The two parts must be disjoint;
// exhaustiveness is checked against the degrees that actually occur.
struct SplitSpec {
    Part left = Part::minus;
    Part right = Part::zero_plus;

    void check() const;
    bool covers(const BasisIndex& x) const { return in_part(x, left) || in_part(x, right); }
    std::string to_string() const { return part_name(left) + "|" + part_name(right); }
};

enum class SweepSchedule {
    // Correct all bidegrees of one total order per pass.
    by_total_order,
    // Replay bidegrees one at a time in the order (1,1); (1,2), (2,1); ...
    // recomputing the residual for each. Slower; used to audit the former.
    by_bidegree,
};

struct FactorOptions {
    SweepSchedule schedule = SweepSchedule::by_total_order;
};

template <class S>
struct FactorPair {
    LieSeries<S> left;
    LieSeries<S> right;
    int sweeps = 0;
};

namespace detail {

template <class S>
void require_part(const LieSeries<S>& x, Part part, bool minus_side, const char* what) {
    for (const auto& [k, c] : x.terms()) {
        if (!in_part(k.first, part))
            throw DomainError(std::string(what) + ": term on " + x.plugin()->format(k.first) + " is outside the " +
                              part_name(part) + " part");
        const int bideg = minus_side ? k.second.minus_order() : k.second.plus_order();
        if (bideg < 1)
            throw DomainError(std::string(what) + ": term " + k.second.to_string() + " has no " +
                              (minus_side ? "minus" : "plus") + "-type variable");
    }
}

template <class S>
std::string dump(const LieSeries<S>& x, std::size_t limit = 20) {
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& [k, c] : x.terms()) {
        if (n++ == limit) {
            os << "\n  ... (" << x.size() - limit << " more)";
            break;
        }
        os << "\n  " << x.plugin()->format(k.first) << "  " << k.second.to_string() << "  " << scalar_string(c);
    }
    return os.str();
}

} // namespace detail

/* Solves C(Gm, Gp) = Hm + Hp through order N.
 *
 * Start from Gm = Hm, Gp = Hp. At order d, the order-d part of
 * C(Gm, Gp) - Gm - Gp is a sum of brackets of lower-order components only,
 * so the residual Hm + Hp - C(Gm, Gp) restricted to order d is fixed by
 * adding its left projection to Gm and its right projection to Gp.
 *
 * Requires Hm in split.left with a minus-type variable in every term and Hp
 * in split.right with a plus-type variable in every term.
 */
template <class S>
FactorPair<S> factorize(const LieSeries<S>& hm, const LieSeries<S>& hp, const SplitSpec& split, int order,
                        FactorOptions options = {}) {
    split.check();
    hm.check_compatible(hp);
    detail::require_part(hm, split.left, true, "factorize");
    detail::require_part(hp, split.right, false, "factorize");
    require_positive_order(hm, "factorize");
    require_positive_order(hp, "factorize");

    const Truncation t{order, hm.truncation().count_auxiliary};
    FactorPair<S> out{hm.truncated(t), hp.truncated(t), 0};
    const LieSeries<S> target = out.left + out.right;

    auto apply = [&](const LieSeries<S>& residual) {
        for (const auto& [k, c] : residual.terms()) {
            if (in_part(k.first, split.left)) out.left.add(k.first, k.second, c);
            else if (in_part(k.first, split.right)) out.right.add(k.first, k.second, c);
            else
                throw DomainError("factorize: residual term on " + hm.plugin()->format(k.first) +
                                  " lies in neither part of split " + split.to_string());
        }
    };
    auto residual_at = [&](int d) { return (target - cbh_eval(out.left, out.right, d)).order_component(d); };

    for (int d = 2; d <= order; ++d) {
        ++out.sweeps;
        if (options.schedule == SweepSchedule::by_total_order) {
            apply(residual_at(d));
            continue;
        }
        std::set<std::pair<int, int>> bidegrees;  // (minus + plus, minus)
        for (const auto& [k, c] : residual_at(d).terms())
            bidegrees.emplace(k.second.minus_order() + k.second.plus_order(), k.second.minus_order());
        for (const auto& [total, minus] : bidegrees)
            apply(residual_at(d).bidegree_component(minus, total - minus));
    }

    const LieSeries<S> final_residual = target - cbh_eval(out.left, out.right, order);
    if (!final_residual.is_zero())
        throw InternalConsistencyError("factorize: nonzero residual after the final sweep:" +
                                       detail::dump(final_residual));
    return out;
}

/* Reorders e^{Yp} e^{Xm} as e^{PsiL} e^{PsiR}: take H = C(Yp, Xm), then
 * factorize its split. Requires Yp in split.right (plus-type variable in
 * every term) and Xm in split.left (minus-type variable in every term).
 */
template <class S>
FactorPair<S> uniformize(const LieSeries<S>& yp, const LieSeries<S>& xm, const SplitSpec& split, int order,
                         FactorOptions options = {}) {
    split.check();
    yp.check_compatible(xm);
    detail::require_part(yp, split.right, false, "uniformize");
    detail::require_part(xm, split.left, true, "uniformize");
    const LieSeries<S> h = cbh_eval(yp, xm, order);
    for (const auto& [k, c] : h.terms())
        if (!split.covers(k.first))
            throw DomainError("uniformize: C(Yp, Xm) has a term on " + h.plugin()->format(k.first) +
                              " outside split " + split.to_string());
    return factorize(h.project(split.left), h.project(split.right), split, order, options);
}

struct TripleDiagnostics {
    int order = 0;
    int sweeps = 0;
    std::size_t terms_minus = 0;
    std::size_t terms_plus = 0;
    std::size_t terms_zero = 0;
};

template <class S>
struct TripleResult {
    LieSeries<S> psi_minus;
    LieSeries<S> psi_plus;
    LieSeries<S> psi_zero;
    TripleDiagnostics diagnostics;
};

// Removes auxiliary labels, merging terms that become equal. Each term must
// carry no more auxiliary order than standard order.
template <class S>
LieSeries<S> erase_auxiliary(const LieSeries<S>& x, int order) {
    LieSeries<S> out(x.plugin(), Truncation{order, true});
    for (const auto& [k, c] : x.terms()) {
        if (k.second.auxiliary_order() > k.second.standard_order())
            throw InternalConsistencyError("auxiliary order exceeds variable order in " + k.second.to_string());
        out.add(k.first, k.second.without_auxiliary(), c);
    }
    return out;
}

/* e^{gp} e^{gm} = e^{Psi-} e^{Psi+} e^{Psi0} through order N.
 *
 * Stage 1 reorders e^{gp} e^{gm} = e^{Psi-} e^{Psi0+} with the split
 * minus | zero_plus. Stage 2 factorizes e^{Psi0+} = e^{Psi+} e^{Psi0}: the
 * plus part h+ and zero part h0 of Psi0+ are tagged with the auxiliary labels
 * s and t, factorized with the split plus | zero under a truncation that does
 * not count auxiliary labels, and the labels are then erased (s = t = 1).
 */
template <class S>
TripleResult<S> triple_factorize(const LieSeries<S>& gp, const LieSeries<S>& gm, int order,
                                 FactorOptions options = {}) {
    gp.check_compatible(gm);
    for (const auto* x : {&gp, &gm})
        for (const auto& [k, c] : x->terms())
            if (k.second.auxiliary_order() != 0)
                throw DomainError("triple_factorize: inputs must not carry auxiliary labels");
    const Truncation t{order, true};
    const auto stage1 = uniformize(gp.truncated(t), gm.truncated(t), SplitSpec{Part::minus, Part::zero_plus}, order,
                                   options);

    const Truncation aux_free{order, false};
    const LieSeries<S> h_plus = stage1.right.project(Part::plus).truncated(aux_free).times_monomial(Monomial::of(VarLabel::s()));
    const LieSeries<S> h_zero = stage1.right.project(Part::zero).truncated(aux_free).times_monomial(Monomial::of(VarLabel::t()));
    const auto stage2 = factorize(h_plus, h_zero, SplitSpec{Part::plus, Part::zero}, order, options);

    TripleResult<S> out{stage1.left, erase_auxiliary(stage2.left, order), erase_auxiliary(stage2.right, order), {}};
    out.diagnostics.order = order;
    out.diagnostics.sweeps = stage1.sweeps + stage2.sweeps;
    out.diagnostics.terms_minus = out.psi_minus.size();
    out.diagnostics.terms_plus = out.psi_plus.size();
    out.diagnostics.terms_zero = out.psi_zero.size();
    return out;
}

// Separates the central part of a degree-zero series: (non-central, central).
template <class S>
std::pair<LieSeries<S>, LieSeries<S>> split_central(const LieSeries<S>& x) {
    return {x.filter([](const BasisIndex& b, const Monomial&, const S&) { return !b.central; }),
            x.filter([](const BasisIndex& b, const Monomial&, const S&) { return b.central; })};
}

} // namespace expfactor

#endif // EXPFACTOR_FACTOR_HPP
