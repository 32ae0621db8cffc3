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

#include "expfactor/config.hpp"

#include <algorithm>
#include <sstream>

namespace expfactor {

const std::vector<std::string>& known_algebras() {
    static const std::vector<std::string> names{"virasoro", "affine-sl2", "affine-custom", "ns1"};
    return names;
}

namespace {

bool is_affine(const std::string& algebra) { return algebra.rfind("affine", 0) == 0; }

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("malformed support index '" + s + "'");
    return v;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Rational> element_vector(const FiniteLieData& d, const std::map<std::string, Rational>& element) {
    std::vector<Rational> out(d.dim());
    for (const auto& [name, c] : element) {
        const auto it = std::find(d.names.begin(), d.names.end(), name);
        if (it == d.names.end()) throw DomainError("unknown finite basis element '" + name + "'");
        out[static_cast<std::size_t>(it - d.names.begin())] = c;
    }
    return out;
}

FiniteLieData effective_finite(const RunConfig& cfg) {
    return cfg.algebra == "affine-sl2" ? sl2_data() : cfg.finite;
}

json rational_map(const std::map<std::string, Rational>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = v.to_string();
    return out;
}

std::map<std::string, Rational> rational_map_from(const json& j) {
    if (!j.is_object()) throw DomainError("affine elements must be objects {name: coeff}");
    std::map<std::string, Rational> out;
    for (const auto& [k, v] : j.items()) out[k] = rational_from_json(v);
    return out;
}

// Custom finite algebra: {"names": [...], "brackets": [{"x","y","result":{name: coeff}}],
// "form": [{"x","y","value"}]}. Missing [y,x] and (y,x) entries are filled by
// skew-symmetry and symmetry; entries given both ways are taken as written.
FiniteLieData finite_from_json(const json& j) {
    FiniteLieData d;
    d.names = j.at("names").get<std::vector<std::string>>();
    const std::size_t n = d.names.size();
    const std::vector<Rational> zero(n);
    d.structure.assign(n, std::vector<std::vector<Rational>>(n, zero));
    d.form.assign(n, zero);
    auto idx = [&](const json& name) {
        const auto s = name.get<std::string>();
        const auto it = std::find(d.names.begin(), d.names.end(), s);
        if (it == d.names.end()) throw DomainError("unknown finite basis element '" + s + "'");
        return static_cast<std::size_t>(it - d.names.begin());
    };
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (const auto& b : j.value("brackets", json::array())) {
        const std::size_t x = idx(b.at("x")), y = idx(b.at("y"));
        given[x][y] = true;
        for (const auto& [name, c] : b.at("result").items()) d.structure[x][y][idx(json(name))] = rational_from_json(c);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (given[x][y] && !given[y][x])
                for (std::size_t k = 0; k < n; ++k) d.structure[y][x][k] = -d.structure[x][y][k];
    std::vector<std::vector<bool>> form_given(n, std::vector<bool>(n, false));
    for (const auto& f : j.value("form", json::array())) {
        const std::size_t x = idx(f.at("x")), y = idx(f.at("y"));
        form_given[x][y] = true;
        d.form[x][y] = rational_from_json(f.at("value"));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (form_given[x][y] && !form_given[y][x]) d.form[y][x] = d.form[x][y];
    return d;
}

json finite_to_json(const FiniteLieData& d) {
    json brackets = json::array();
    json form = json::array();
    for (std::size_t x = 0; x < d.dim(); ++x)
        for (std::size_t y = 0; y < d.dim(); ++y) {
            json result = json::object();
            for (std::size_t k = 0; k < d.dim(); ++k)
                if (!d.structure[x][y][k].is_zero()) result[d.names[k]] = d.structure[x][y][k].to_string();
            if (!result.empty()) brackets.push_back({{"x", d.names[x]}, {"y", d.names[y]}, {"result", result}});
            if (!d.form[x][y].is_zero())
                form.push_back({{"x", d.names[x]}, {"y", d.names[y]}, {"value", d.form[x][y].to_string()}});
        }
    return {{"names", d.names}, {"brackets", brackets}, {"form", form}};
}

} // namespace

int support_scale(const std::string& algebra) { return algebra == "ns1" ? 1 : 2; }

void RunConfig::check() const {
    if (std::find(known_algebras().begin(), known_algebras().end(), algebra) == known_algebras().end())
        throw DomainError("unknown algebra '" + algebra + "' (expected virasoro, affine-sl2, affine-custom or ns1)");
    if (order < 1) throw DomainError("order must be >= 1");
    if (format != "text" && format != "json") throw DomainError("format must be text or json");
    for (int j : support_a)
        if (j <= 0) throw DomainError("A indices must be positive");
    for (int j : support_b)
        if (j >= 0) throw DomainError("B indices must be negative");
    if (support_scale(algebra) == 2)
        for (const auto* side : {&support_a, &support_b})
            for (int j : *side)
                if (j % 2 != 0) throw DomainError(algebra + " support indices must be integers");
    if (algebra == "affine-custom" && finite.names.empty())
        throw DomainError("affine-custom needs an \"affine\" block with names, brackets and form");
}

void parse_support(const std::string& text, RunConfig& cfg) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', ' ');
    std::istringstream is(normalized);
    std::string token;
    std::vector<int> a, b;
    const int scale = support_scale(cfg.algebra);
    while (is >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("support tokens look like A=1,2 or B=-1,-2: '" + token + "'");
        const std::string side = token.substr(0, eq);
        if (side != "A" && side != "B") throw DomainError("support side must be A or B: '" + token + "'");
        std::vector<int>& dst = side == "A" ? a : b;
        std::istringstream items(token.substr(eq + 1));
        std::string item;
        while (std::getline(items, item, ','))
            if (!item.empty()) dst.push_back(scale * parse_int(item));
    }
    cfg.support_a = sorted_unique(a);
    cfg.support_b = sorted_unique(b);
}

std::string support_string(const RunConfig& cfg) {
    const int scale = support_scale(cfg.algebra);
    std::string out;
    for (const auto& [side, v] : {std::pair{"A", &cfg.support_a}, std::pair{"B", &cfg.support_b}}) {
        if (!out.empty()) out += " ";
        out += std::string(side) + "=";
        for (std::size_t i = 0; i < v->size(); ++i) out += (i ? "," : "") + std::to_string((*v)[i] / scale);
    }
    return out;
}

void apply_json(const json& j, RunConfig& cfg) {
    if (!j.is_object()) throw DomainError("configuration must be a JSON object");
    if (j.contains("algebra")) cfg.algebra = j.at("algebra").get<std::string>();
    if (j.contains("order")) cfg.order = j.at("order").get<int>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("affine")) {
        const json& a = j.at("affine");
        if (a.contains("names")) cfg.finite = finite_from_json(a);
        if (a.contains("plus_element")) cfg.plus_element = rational_map_from(a.at("plus_element"));
        if (a.contains("minus_element")) cfg.minus_element = rational_map_from(a.at("minus_element"));
    }
    if (j.contains("support")) {
        const json& s = j.at("support");
        const int scale = support_scale(cfg.algebra);
        std::vector<int> a, b;
        for (int x : s.value("A", std::vector<int>{})) a.push_back(scale * x);
        for (int x : s.value("B", std::vector<int>{})) b.push_back(scale * x);
        cfg.support_a = sorted_unique(a);
        cfg.support_b = sorted_unique(b);
    }
}

json to_json(const RunConfig& cfg) {
    const int scale = support_scale(cfg.algebra);
    std::vector<int> a, b;
    for (int x : cfg.support_a) a.push_back(x / scale);
    for (int x : cfg.support_b) b.push_back(x / scale);
    json out = {{"algebra", cfg.algebra}, {"order", cfg.order}, {"support", {{"A", a}, {"B", b}}}};
    if (is_affine(cfg.algebra)) {
        json affine = json::object();
        if (cfg.algebra == "affine-custom") affine = finite_to_json(cfg.finite);
        affine["plus_element"] = rational_map(cfg.plus_element);
        affine["minus_element"] = rational_map(cfg.minus_element);
        out["affine"] = affine;
    }
    return out;
}

PluginPtr make_plugin_unchecked(const RunConfig& cfg) {
    if (cfg.algebra == "virasoro") return std::make_shared<const VirasoroAlgebra>();
    if (cfg.algebra == "ns1") return std::make_shared<const NeveuSchwarzAlgebra>();
    if (is_affine(cfg.algebra)) return std::make_shared<const AffineAlgebra>(effective_finite(cfg), cfg.algebra);
    throw DomainError("unknown algebra '" + cfg.algebra + "'");
}

PluginPtr make_plugin(const RunConfig& cfg) {
    cfg.check();
    if (is_affine(cfg.algebra)) return make_affine(effective_finite(cfg), cfg.algebra);
    return make_plugin_unchecked(cfg);
}

template <>
std::vector<std::pair<BasisIndex, Rational>> generator_terms<Rational>(const RunConfig& cfg, const PluginPtr& plugin,
                                                                       int doubled) {
    if (cfg.algebra == "virasoro") return {{VirasoroAlgebra::L(doubled / 2), Rational(1)}};
    const auto* affine = dynamic_cast<const AffineAlgebra*>(plugin.get());
    if (!affine) throw UsageError("algebra " + cfg.algebra + " needs Grassmann coefficients");
    const auto& element = doubled > 0 ? cfg.plus_element : cfg.minus_element;
    const std::vector<Rational> v =
        element.empty() ? element_vector(affine->data(), {{doubled > 0 ? "e" : "f", Rational(1)}})
                        : element_vector(affine->data(), element);
    std::vector<std::pair<BasisIndex, Rational>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(AffineAlgebra::gen(static_cast<int>(i), doubled / 2), v[i]);
    return out;
}

template <>
std::vector<std::pair<BasisIndex, GrassmannScalar>> generator_terms<GrassmannScalar>(const RunConfig& cfg,
                                                                                     const PluginPtr&, int doubled) {
    if (cfg.algebra != "ns1") throw UsageError("Grassmann generators are only built for ns1");
    if (doubled % 2 == 0) return {{NeveuSchwarzAlgebra::L(doubled / 2), GrassmannScalar(1)}};
    return {{NeveuSchwarzAlgebra::G(doubled), GrassmannScalar::generator(doubled)}};
}

} // namespace expfactor
