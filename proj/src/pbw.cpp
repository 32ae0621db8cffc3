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

#include "expfactor/pbw.hpp"

namespace expfactor {

std::string format_word(const LieAlgebraPlugin& plugin, const UWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& x : w) {
        if (!out.empty()) out += ' ';
        out += plugin.format(x);
    }
    return out;
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Leftmost position whose neighbour pair must be rewritten, or npos.
std::size_t first_violation(const UWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const auto a = normal_rank(w[i]);
        const auto b = normal_rank(w[i + 1]);
        if (a > b || (a == b && w[i].parity == 1)) return i;
    }
    return npos;
}

} // namespace

bool Straightener::is_normal(const UWord& w) { return first_violation(w) == npos; }

const Straightener::Combination& Straightener::normal_form(const UWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    std::map<UWord, Rational> acc;
    auto add_nf = [&](const UWord& word, const Rational& scale) {
        for (const auto& [v, c] : normal_form(word)) {
            auto& slot = acc[v];
            slot += c * scale;
        }
    };

    const std::size_t i = first_violation(w);
    if (i == npos) {
        acc[w] = Rational(1);
    } else {
        ++rewrites_;
        const BasisIndex& x = w[i];
        const BasisIndex& y = w[i + 1];
        UWord shorter(w.begin(), w.begin() + static_cast<long>(i));
        shorter.emplace_back();
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        if (x == y) {
            // Odd square: x x = 1/2 [x, x].
            for (const auto& [z, c] : plugin_->bracket(x, y)) {
                shorter[i] = z;
                add_nf(shorter, c * Rational(1, 2));
            }
        } else {
            UWord swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            add_nf(swapped, Rational(x.parity * y.parity == 1 ? -1 : 1));
            for (const auto& [z, c] : plugin_->bracket(x, y)) {
                shorter[i] = z;
                add_nf(shorter, c);
            }
        }
    }

    Combination out;
    for (auto& [v, c] : acc)
        if (!c.is_zero()) out.emplace_back(v, c);
    return memo_.emplace(w, std::move(out)).first->second;
}

} // namespace expfactor
