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
 // Commuting formal variables and their monomials.

#ifndef EXPFACTOR_MONOMIAL_HPP
#define EXPFACTOR_MONOMIAL_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace expfactor {

enum class Polarity : int { minus = 0, plus = 1 };

/* One commuting formal variable.
 *
 * Standard labels are the A_j (plus, j > 0) and B_j (minus, j < 0), with j
 * stored doubled. Auxiliary labels carry index 0: the minus one prints as "s"
 * and the plus one as "t".
 */
struct VarLabel {
    Polarity polarity = Polarity::plus;
    int index = 0;
    bool auxiliary = false;

    static VarLabel a(int doubled_index);
    static VarLabel b(int doubled_index);
    static VarLabel s() { return {Polarity::minus, 0, true}; }
    static VarLabel t() { return {Polarity::plus, 0, true}; }

    std::string to_string() const;
    static VarLabel parse(std::string_view text);

    friend bool operator==(const VarLabel&, const VarLabel&) = default;
    friend std::strong_ordering operator<=>(const VarLabel& x, const VarLabel& y) {
        if (auto c = x.auxiliary <=> y.auxiliary; c != 0) return c;
        // Plus before minus, so monomials print as A_1*B_-1.
        if (auto c = static_cast<int>(y.polarity) <=> static_cast<int>(x.polarity); c != 0) return c;
        return x.index <=> y.index;
    }
};

// How variable order is counted for truncation. Auxiliary labels may be
// excluded so that a bookkeeping pair can ride along without consuming the
// order budget.
struct Truncation {
    int order = 1;
    bool count_auxiliary = true;

    friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Sorted multiset of labels; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<VarLabel> labels);
    static Monomial of(VarLabel label) { return Monomial({label}); }

    const std::vector<VarLabel>& labels() const { return labels_; }
    bool is_one() const { return labels_.empty(); }

    int total_order() const { return static_cast<int>(labels_.size()); }
    int minus_order() const;  // bidegree first component
    int plus_order() const;   // bidegree second component
    int standard_order() const;
    int auxiliary_order() const;
    int weight(const Truncation& t) const { return t.count_auxiliary ? total_order() : standard_order(); }

    Monomial without_auxiliary() const;

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.labels_.size() <=> y.labels_.size(); c != 0) return c;
        return x.labels_ <=> y.labels_;
    }

    // "1", "A_1", "A_1*B_-2^2", "A_1/2*s".
    std::string to_string() const;
    // Label -> exponent, as used by the JSON term format.
    std::map<std::string, int> exponents() const;
    static Monomial from_exponents(const std::map<std::string, int>& exponents);

private:
    std::vector<VarLabel> labels_;
};

} // namespace expfactor

#endif // EXPFACTOR_MONOMIAL_HPP
