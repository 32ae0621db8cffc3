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
 // The Campbell-Baker-Hausdorff series C(a, b), log(e^a e^b) = C(a, b), as a
 // list of left-nested bracket patterns with rational weights per degree.
 //
 // The schema is obtained from the associative logarithm of e^a e^b in the
 // free algebra on {a, b} followed by the Dynkin projection. It is not reduced
 // to a Lie basis: evaluation is linear, so redundant patterns are harmless.

#ifndef EXPFACTOR_CBH_HPP
#define EXPFACTOR_CBH_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "expfactor/rational.hpp"

namespace expfactor {

// Noncommutative polynomial in the letters 'a' and 'b' truncated at a
// maximum word length. Words are plain strings; the empty word is 1.
class AssocPoly {
public:
    explicit AssocPoly(int max_degree) : max_degree_(max_degree) {}

    static AssocPoly letter(char x, int max_degree);
    static AssocPoly one(int max_degree);

    int max_degree() const { return max_degree_; }
    const std::map<std::string, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const std::string& word) const;

    void add(const std::string& word, const Rational& c);
    AssocPoly homogeneous_part(int degree) const;

    AssocPoly& operator+=(const AssocPoly& rhs);
    AssocPoly& operator-=(const AssocPoly& rhs);
    AssocPoly& operator*=(const Rational& c);
    friend AssocPoly operator+(AssocPoly lhs, const AssocPoly& rhs) { return lhs += rhs; }
    friend AssocPoly operator-(AssocPoly lhs, const AssocPoly& rhs) { return lhs -= rhs; }
    friend AssocPoly operator*(AssocPoly lhs, const Rational& c) { return lhs *= c; }
    // Concatenation product; words longer than the bound are dropped.
    friend AssocPoly operator*(const AssocPoly& lhs, const AssocPoly& rhs);
    friend bool operator==(const AssocPoly& lhs, const AssocPoly& rhs) { return lhs.terms_ == rhs.terms_; }

    std::string to_string() const;

private:
    int max_degree_;
    std::map<std::string, Rational> terms_;
};

AssocPoly commutator(const AssocPoly& x, const AssocPoly& y);

// Truncated exponential / logarithm in the free algebra. `exp_series`
// requires x without constant term; `log_series` requires x = 1 + (no
// constant term).
AssocPoly exp_series(const AssocPoly& x);
AssocPoly log_series(const AssocPoly& x);

// log(e^a e^b) through word length `max_degree`.
AssocPoly assoc_log_of_product(int max_degree);

// coeff * [x1, [x2, [..., xn]]] where the pattern is x1 x2 ... xn.
struct BracketTerm {
    Rational coeff;
    std::string pattern;

    friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

// Dynkin projection of a homogeneous Lie element of degree n >= 1: every word
// w with coefficient c becomes the bracket term (c / n, w).
std::vector<BracketTerm> dynkin_project(const AssocPoly& homogeneous, int degree);

// Expands a bracket pattern into commutators, with the letters replaced by
// the given images.
AssocPoly expand_pattern(const std::string& pattern, const AssocPoly& a_image, const AssocPoly& b_image);
AssocPoly expand_terms(const std::vector<BracketTerm>& terms, const AssocPoly& a_image, const AssocPoly& b_image);

class CbhSchema {
public:
    explicit CbhSchema(std::vector<std::vector<BracketTerm>> by_degree) : by_degree_(std::move(by_degree)) {}

    int max_degree() const { return static_cast<int>(by_degree_.size()); }
    // Terms of total degree n, 1 <= n <= max_degree(), sorted by pattern.
    const std::vector<BracketTerm>& degree(int n) const { return by_degree_.at(static_cast<std::size_t>(n - 1)); }

private:
    std::vector<std::vector<BracketTerm>> by_degree_;
};

constexpr int default_max_schema_degree = 12;
void set_max_schema_degree(int degree);
int max_schema_degree();

// Memoized: a schema through degree n serves every request up to n. Safe to
// call concurrently; the returned schema is immutable.
std::shared_ptr<const CbhSchema> cbh_schema(int max_degree);

} // namespace expfactor

#endif // EXPFACTOR_CBH_HPP
