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
 // C(X, Y) for Lie series X, Y: the CBH schema with its letters replaced by
 // series and brackets evaluated in the plugin.

#ifndef EXPFACTOR_CBH_EVAL_HPP
#define EXPFACTOR_CBH_EVAL_HPP

#include <map>
#include <string>

#include "expfactor/cbh.hpp"
#include "expfactor/lie_series.hpp"

namespace expfactor {

template <class S>
void require_positive_order(const LieSeries<S>& x, const char* what) {
    if (!x.is_zero() && x.min_weight() < 1)
        throw ConvergenceError(std::string(what) + ": every term needs variable order >= 1");
}

/* log(e^X e^Y) through truncation order `order`.
 *
 * Each term of X and Y must carry variable order >= 1, so a bracket pattern
 * of length n contributes only at order >= n and the schema is needed only
 * through degree `order`. Left-nested patterns share suffixes, so each
 * distinct suffix [x_k, [..., x_n]] is bracketed once.
 */
template <class S>
LieSeries<S> cbh_eval(const LieSeries<S>& x, const LieSeries<S>& y, int order) {
    x.check_compatible(y);
    require_positive_order(x, "cbh_eval");
    require_positive_order(y, "cbh_eval");
    const Truncation t{order, x.truncation().count_auxiliary};
    const LieSeries<S> xs = x.truncated(t);
    const LieSeries<S> ys = y.truncated(t);
    LieSeries<S> out(x.plugin(), t);
    if (order < 1) return out;

    const auto schema = cbh_schema(order);
    std::map<std::string, LieSeries<S>> suffix;
    auto value = [&](auto&& self, const std::string& pattern) -> const LieSeries<S>& {
        if (auto it = suffix.find(pattern); it != suffix.end()) return it->second;
        const LieSeries<S>& head = pattern[0] == 'a' ? xs : ys;
        if (pattern.size() == 1) return suffix.emplace(pattern, head).first->second;
        const LieSeries<S>& tail = self(self, pattern.substr(1));
        LieSeries<S> v = tail.is_zero() ? LieSeries<S>(x.plugin(), t) : bracket(head, tail);
        return suffix.emplace(pattern, std::move(v)).first->second;
    };
    for (int n = 1; n <= order; ++n) {
        for (const auto& term : schema->degree(n)) {
            const LieSeries<S>& v = value(value, term.pattern);
            if (!v.is_zero()) out += v * term.coeff;
        }
    }
    return out;
}

} // namespace expfactor

#endif // EXPFACTOR_CBH_EVAL_HPP
