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
 // Run configuration: which algebra, which variables are active, and the
 // generator series g+ = sum_j A_j p_j, g- = sum_j B_j p_j built from them.

#ifndef EXPFACTOR_CONFIG_HPP
#define EXPFACTOR_CONFIG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "expfactor/algebras.hpp"
#include "expfactor/lie_series.hpp"
#include "expfactor/serialize.hpp"

namespace expfactor {

/* Support indices are kept doubled. At the text and JSON boundary they are
 * written in the algebra's own mode units: integers for virasoro and affine
 * algebras, doubled indices for ns1 (so A=1 is A_{1/2}, A=2 is A_1).
 */
struct RunConfig {
    std::string algebra = "virasoro";
    int order = 2;
    std::vector<int> support_a;
    std::vector<int> support_b;
    std::string format = "text";

    // Affine only. `finite` is ignored for affine-sl2. The elements h_j of
    // p_j = h_j (x) x^j are `plus_element` for j > 0 and `minus_element`
    // for j < 0, as coefficient vectors over the finite basis.
    FiniteLieData finite;
    std::map<std::string, Rational> plus_element;
    std::map<std::string, Rational> minus_element;

    void check() const;
};

const std::vector<std::string>& known_algebras();

// Index units at the boundary: 1 for ns1 (already doubled), 2 otherwise.
int support_scale(const std::string& algebra);

// Parses "A=1,2 B=-1,-2" (tokens separated by spaces or ';'); either side
// may be missing or empty. Fills support_a / support_b of `cfg`.
void parse_support(const std::string& text, RunConfig& cfg);
std::string support_string(const RunConfig& cfg);

// Applies the keys present in `j` on top of `cfg`.
void apply_json(const json& j, RunConfig& cfg);
json to_json(const RunConfig& cfg);

// Builds the plugin. Affine configurations are validated.
PluginPtr make_plugin(const RunConfig& cfg);
// As make_plugin but without validation, for validate-algebra.
PluginPtr make_plugin_unchecked(const RunConfig& cfg);

// One generator p_j: a basis combination with scalars (the NS odd modes
// carry the Grassmann generator a_j).
template <class S>
std::vector<std::pair<BasisIndex, S>> generator_terms(const RunConfig& cfg, const PluginPtr& plugin, int doubled);
template <>
std::vector<std::pair<BasisIndex, Rational>> generator_terms<Rational>(const RunConfig&, const PluginPtr&, int);
template <>
std::vector<std::pair<BasisIndex, GrassmannScalar>> generator_terms<GrassmannScalar>(const RunConfig&, const PluginPtr&,
                                                                                     int);

template <class S>
std::pair<LieSeries<S>, LieSeries<S>> build_generators(const RunConfig& cfg, const PluginPtr& plugin) {
    const Truncation t{cfg.order, true};
    LieSeries<S> gp(plugin, t);
    LieSeries<S> gm(plugin, t);
    for (int j : cfg.support_a)
        for (const auto& [x, c] : generator_terms<S>(cfg, plugin, j)) gp.add(x, Monomial::of(VarLabel::a(j)), c);
    for (int j : cfg.support_b)
        for (const auto& [x, c] : generator_terms<S>(cfg, plugin, j)) gm.add(x, Monomial::of(VarLabel::b(j)), c);
    return {gp, gm};
}

} // namespace expfactor

#endif // EXPFACTOR_CONFIG_HPP
