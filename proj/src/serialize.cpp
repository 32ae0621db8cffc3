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

#include "expfactor/serialize.hpp"

#include <algorithm>

namespace expfactor {

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const GrassmannScalar& g) {
    json out = json::array();
    for (const auto& [gens, coeff] : g.terms()) out.push_back({{"generators", gens}, {"coeff", coeff.to_string()}});
    return out;
}

json to_json(const CbhSchema& schema, int max_degree) {
    json out = json::array();
    for (int n = 1; n <= std::min(max_degree, schema.max_degree()); ++n) {
        json terms = json::array();
        for (const auto& t : schema.degree(n)) terms.push_back({{"pattern", t.pattern}, {"coeff", t.coeff.to_string()}});
        out.push_back({{"degree", n}, {"terms", terms}});
    }
    return out;
}

json to_json(const VerificationReport& report) {
    json mismatches = json::array();
    for (const auto& m : report.mismatches)
        mismatches.push_back({{"word", m.word}, {"monomial", m.monomial}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    return {{"ok", report.ok},
            {"order", report.order},
            {"mismatches", mismatches},
            {"stats",
             {{"mismatch_count", report.mismatch_count},
              {"lhs_terms", report.lhs_terms},
              {"rhs_terms", report.rhs_terms},
              {"rewrites", report.rewrites}}}};
}

json to_json(const TripleDiagnostics& d) {
    return {{"order", d.order},
            {"sweeps", d.sweeps},
            {"terms", {{"psi_minus", d.terms_minus}, {"psi_plus", d.terms_plus}, {"psi_zero", d.terms_zero}}}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw DomainError("rational must be a string \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

GrassmannScalar grassmann_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("Grassmann scalar must be a list of {generators, coeff}");
    std::vector<std::pair<std::vector<int>, Rational>> products;
    for (const auto& t : j)
        products.emplace_back(t.at("generators").get<std::vector<int>>(), rational_from_json(t.at("coeff")));
    return GrassmannScalar::from_products(products);
}

} // namespace expfactor
