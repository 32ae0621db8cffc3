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

#include "expfactor/grassmann.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace expfactor {

namespace {

std::string label_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

} // namespace

int merge_generators(const GeneratorSet& lhs, const GeneratorSet& rhs, GeneratorSet& out) {
    out.clear();
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < lhs.size() && j < rhs.size()) {
        if (lhs[i] == rhs[j]) return 0;
        if (lhs[i] < rhs[j]) {
            out.push_back(lhs[i++]);
        } else {
            // rhs[j] jumps over every remaining lhs generator.
            inversions += static_cast<long>(lhs.size() - i);
            out.push_back(rhs[j++]);
        }
    }
    out.insert(out.end(), lhs.begin() + static_cast<long>(i), lhs.end());
    out.insert(out.end(), rhs.begin() + static_cast<long>(j), rhs.end());
    return inversions % 2 == 0 ? 1 : -1;
}

GrassmannScalar::GrassmannScalar(const Rational& r) {
    if (!r.is_zero()) terms_.emplace(GeneratorSet{}, r);
}

GrassmannScalar GrassmannScalar::generator(int label) {
    GrassmannScalar g;
    g.terms_.emplace(GeneratorSet{label}, Rational(1));
    return g;
}

GrassmannScalar GrassmannScalar::from_products(
    const std::vector<std::pair<std::vector<int>, Rational>>& products) {
    GrassmannScalar out;
    for (const auto& [gens, coeff] : products) {
        // Insertion sort keeps the transposition count explicit.
        GeneratorSet sorted = gens;
        int sign = 1;
        bool vanishes = false;
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            for (std::size_t k = i; k > 0 && sorted[k - 1] >= sorted[k]; --k) {
                if (sorted[k - 1] == sorted[k]) { vanishes = true; break; }
                std::swap(sorted[k - 1], sorted[k]);
                sign = -sign;
            }
            if (vanishes) break;
        }
        if (vanishes || coeff.is_zero()) continue;
        GrassmannScalar term;
        term.terms_.emplace(std::move(sorted), sign > 0 ? coeff : -coeff);
        out += term;
    }
    return out;
}

int GrassmannScalar::parity() const {
    int p = -2;
    for (const auto& [gens, coeff] : terms_) {
        const int q = static_cast<int>(gens.size() % 2);
        if (p == -2) p = q;
        else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
}

GrassmannScalar GrassmannScalar::twisted(int p) const {
    if (p % 2 == 0) return *this;
    GrassmannScalar out = *this;
    for (auto& [gens, coeff] : out.terms_)
        if (gens.size() % 2 == 1) coeff = -coeff;
    return out;
}

GrassmannScalar& GrassmannScalar::operator+=(const GrassmannScalar& rhs) {
    for (const auto& [gens, coeff] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(gens, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

GrassmannScalar& GrassmannScalar::operator-=(const GrassmannScalar& rhs) { return *this += -rhs; }

GrassmannScalar& GrassmannScalar::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [gens, coeff] : terms_) coeff *= rhs;
    return *this;
}

GrassmannScalar operator*(const GrassmannScalar& lhs, const GrassmannScalar& rhs) {
    GrassmannScalar out;
    GeneratorSet merged;
    for (const auto& [lg, lc] : lhs.terms_) {
        for (const auto& [rg, rc] : rhs.terms_) {
            const int sign = merge_generators(lg, rg, merged);
            if (sign == 0) continue;
            Rational c = lc * rc;
            if (sign < 0) c = -c;
            auto [it, inserted] = out.terms_.try_emplace(merged, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

GrassmannScalar GrassmannScalar::operator-() const {
    GrassmannScalar out = *this;
    for (auto& [gens, coeff] : out.terms_) coeff = -coeff;
    return out;
}

std::string GrassmannScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [gens, coeff] : terms_) {
        Rational c = coeff;
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (gens.empty()) {
            os << c;
            continue;
        }
        if (c == Rational(-1)) os << '-';
        else if (!c.is_one()) os << c << '*';
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) os << '*';
            os << "a_" << label_string(gens[i]);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GrassmannScalar& g) { return os << g.to_string(); }

} // namespace expfactor
