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

#include "expfactor/cbh.hpp"

#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "expfactor/errors.hpp"

namespace expfactor {

AssocPoly AssocPoly::letter(char x, int max_degree) {
    AssocPoly p(max_degree);
    p.add(std::string(1, x), Rational(1));
    return p;
}

AssocPoly AssocPoly::one(int max_degree) {
    AssocPoly p(max_degree);
    p.add(std::string(), Rational(1));
    return p;
}

Rational AssocPoly::coefficient(const std::string& word) const {
    const auto it = terms_.find(word);
    return it == terms_.end() ? Rational() : it->second;
}

void AssocPoly::add(const std::string& word, const Rational& c) {
    if (c.is_zero() || static_cast<int>(word.size()) > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AssocPoly AssocPoly::homogeneous_part(int degree) const {
    AssocPoly out(max_degree_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == degree) out.terms_.emplace(w, c);
    return out;
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, c);
    return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& rhs) {
    for (const auto& [w, c] : rhs.terms_) add(w, -c);
    return *this;
}

AssocPoly& AssocPoly::operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

AssocPoly operator*(const AssocPoly& lhs, const AssocPoly& rhs) {
    const int bound = std::min(lhs.max_degree_, rhs.max_degree_);
    AssocPoly out(bound);
    for (const auto& [lw, lc] : lhs.terms_) {
        for (const auto& [rw, rc] : rhs.terms_) {
            if (static_cast<int>(lw.size() + rw.size()) > bound) continue;
            out.add(lw + rw, lc * rc);
        }
    }
    return out;
}

std::string AssocPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c << ')' << (w.empty() ? "1" : w);
    }
    return os.str();
}

AssocPoly commutator(const AssocPoly& x, const AssocPoly& y) { return x * y - y * x; }

AssocPoly exp_series(const AssocPoly& x) {
    if (!x.coefficient("").is_zero()) throw ConvergenceError("exp_series: constant term present");
    AssocPoly out = AssocPoly::one(x.max_degree());
    AssocPoly power = AssocPoly::one(x.max_degree());
    for (int k = 1; k <= x.max_degree(); ++k) {
        power = power * x;
        power *= Rational(1, k);
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

AssocPoly log_series(const AssocPoly& x) {
    if (!x.coefficient("").is_one()) throw ConvergenceError("log_series: constant term must be 1");
    AssocPoly u = x - AssocPoly::one(x.max_degree());
    AssocPoly out(x.max_degree());
    AssocPoly power = AssocPoly::one(x.max_degree());
    for (int k = 1; k <= x.max_degree(); ++k) {
        power = power * u;
        if (power.is_zero()) break;
        out += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return out;
}

AssocPoly assoc_log_of_product(int max_degree) {
    if (max_degree < 1) throw DomainError("assoc_log_of_product: degree bound must be >= 1");
    const AssocPoly ea = exp_series(AssocPoly::letter('a', max_degree));
    const AssocPoly eb = exp_series(AssocPoly::letter('b', max_degree));
    return log_series(ea * eb);
}

std::vector<BracketTerm> dynkin_project(const AssocPoly& homogeneous, int degree) {
    if (degree < 1) throw DomainError("dynkin_project: degree must be >= 1");
    std::vector<BracketTerm> out;
    for (const auto& [w, c] : homogeneous.terms()) {
        if (static_cast<int>(w.size()) != degree)
            throw DomainError("dynkin_project: input is not homogeneous of degree " + std::to_string(degree));
        out.push_back({c * Rational(1, degree), w});
    }
    return out;
}

AssocPoly expand_pattern(const std::string& pattern, const AssocPoly& a_image, const AssocPoly& b_image) {
    if (pattern.empty()) throw DomainError("expand_pattern: empty pattern");
    auto image = [&](char x) -> const AssocPoly& {
        if (x == 'a') return a_image;
        if (x == 'b') return b_image;
        throw DomainError(std::string("expand_pattern: unknown letter '") + x + "'");
    };
    AssocPoly acc = image(pattern.back());
    for (auto it = pattern.rbegin() + 1; it != pattern.rend(); ++it) acc = commutator(image(*it), acc);
    return acc;
}

AssocPoly expand_terms(const std::vector<BracketTerm>& terms, const AssocPoly& a_image, const AssocPoly& b_image) {
    AssocPoly out(std::min(a_image.max_degree(), b_image.max_degree()));
    for (const auto& t : terms) out += expand_pattern(t.pattern, a_image, b_image) * t.coeff;
    return out;
}

namespace {

std::atomic<int> g_max_degree{default_max_schema_degree};

class SchemaCache {
public:
    std::shared_ptr<const CbhSchema> get(int n) {
        {
            std::shared_lock lock(mutex_);
            if (schema_ && schema_->max_degree() >= n) return schema_;
        }
        std::unique_lock lock(mutex_);
        if (schema_ && schema_->max_degree() >= n) return schema_;
        const AssocPoly log = assoc_log_of_product(n);
        std::vector<std::vector<BracketTerm>> by_degree;
        for (int d = 1; d <= n; ++d) by_degree.push_back(dynkin_project(log.homogeneous_part(d), d));
        schema_ = std::make_shared<const CbhSchema>(std::move(by_degree));
        return schema_;
    }

private:
    std::shared_mutex mutex_;
    std::shared_ptr<const CbhSchema> schema_;
};

SchemaCache& cache() {
    static SchemaCache instance;
    return instance;
}

} // namespace

void set_max_schema_degree(int degree) {
    if (degree < 1) throw DomainError("maximum schema degree must be >= 1");
    g_max_degree = degree;
}

int max_schema_degree() { return g_max_degree; }

std::shared_ptr<const CbhSchema> cbh_schema(int max_degree) {
    if (max_degree < 1) throw DomainError("cbh_schema: degree bound must be >= 1");
    if (max_degree > g_max_degree)
        throw DomainError("cbh_schema: degree " + std::to_string(max_degree) + " exceeds the configured maximum " +
                          std::to_string(g_max_degree.load()));
    return cache().get(max_degree);
}

} // namespace expfactor
