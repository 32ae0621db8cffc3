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

#include "expfactor/monomial.hpp"

#include <algorithm>
#include <charconv>

#include "expfactor/basis.hpp"
#include "expfactor/errors.hpp"

namespace expfactor {

std::string doubled_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

int parse_doubled(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view head = text.substr(0, slash);
    int value = 0;
    const char* first = head.data();
    if (!head.empty() && head[0] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, head.data() + head.size(), value);
    if (ec != std::errc() || ptr != head.data() + head.size() || first == head.data() + head.size())
        throw DomainError("malformed index: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return 2 * value;
    if (text.substr(slash) != "/2" || value % 2 == 0)
        throw DomainError("malformed half-integer index: '" + std::string(text) + "'");
    return value;
}

VarLabel VarLabel::a(int doubled_index) {
    if (doubled_index <= 0) throw DomainError("A-variables need a positive index");
    return {Polarity::plus, doubled_index, false};
}

VarLabel VarLabel::b(int doubled_index) {
    if (doubled_index >= 0) throw DomainError("B-variables need a negative index");
    return {Polarity::minus, doubled_index, false};
}

std::string VarLabel::to_string() const {
    if (auxiliary) return polarity == Polarity::minus ? "s" : "t";
    return (polarity == Polarity::plus ? "A_" : "B_") + doubled_string(index);
}

VarLabel VarLabel::parse(std::string_view text) {
    if (text == "s") return s();
    if (text == "t") return t();
    if (text.size() > 2 && text[1] == '_') {
        const int index = parse_doubled(text.substr(2));
        if (text[0] == 'A') return a(index);
        if (text[0] == 'B') return b(index);
    }
    throw DomainError("malformed variable label: '" + std::string(text) + "'");
}

Monomial::Monomial(std::vector<VarLabel> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
}

int Monomial::minus_order() const {
    return static_cast<int>(std::count_if(labels_.begin(), labels_.end(),
                                          [](const VarLabel& l) { return l.polarity == Polarity::minus; }));
}

int Monomial::plus_order() const { return total_order() - minus_order(); }

int Monomial::auxiliary_order() const {
    return static_cast<int>(
        std::count_if(labels_.begin(), labels_.end(), [](const VarLabel& l) { return l.auxiliary; }));
}

int Monomial::standard_order() const { return total_order() - auxiliary_order(); }

Monomial Monomial::without_auxiliary() const {
    Monomial out;
    for (const auto& l : labels_)
        if (!l.auxiliary) out.labels_.push_back(l);
    return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.labels_.reserve(x.labels_.size() + y.labels_.size());
    std::merge(x.labels_.begin(), x.labels_.end(), y.labels_.begin(), y.labels_.end(),
               std::back_inserter(out.labels_));
    return out;
}

std::string Monomial::to_string() const {
    if (labels_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < labels_.size();) {
        std::size_t j = i;
        while (j < labels_.size() && labels_[j] == labels_[i]) ++j;
        if (!out.empty()) out += '*';
        out += labels_[i].to_string();
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::map<std::string, int> Monomial::exponents() const {
    std::map<std::string, int> out;
    for (const auto& l : labels_) ++out[l.to_string()];
    return out;
}

Monomial Monomial::from_exponents(const std::map<std::string, int>& exponents) {
    std::vector<VarLabel> labels;
    for (const auto& [name, power] : exponents) {
        if (power < 0) throw DomainError("negative exponent for " + name);
        const VarLabel l = VarLabel::parse(name);
        labels.insert(labels.end(), static_cast<std::size_t>(power), l);
    }
    return Monomial(std::move(labels));
}

} // namespace expfactor
