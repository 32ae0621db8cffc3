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
 // JSON encodings of scalars, series, schemas, results and reports.
 //
 //   rational:  "p/q" ("p" when q == 1)
 //   grassmann: [{"generators": [doubled labels], "coeff": "p/q"}, ...]
 //   term:      {"basis": "L_-3", "monomial": {"A_1": 1, "B_-2": 2}, "coeff": ...}

#ifndef EXPFACTOR_SERIALIZE_HPP
#define EXPFACTOR_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "expfactor/cbh.hpp"
#include "expfactor/factor.hpp"
#include "expfactor/grassmann.hpp"
#include "expfactor/lie_series.hpp"
#include "expfactor/pbw.hpp"
#include "expfactor/rational.hpp"

namespace expfactor {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const GrassmannScalar& g);
// Degrees 1..max_degree of the schema.
json to_json(const CbhSchema& schema, int max_degree);
json to_json(const VerificationReport& report);
json to_json(const TripleDiagnostics& d);

Rational rational_from_json(const json& j);
GrassmannScalar grassmann_from_json(const json& j);

template <class S>
S scalar_from_json(const json& j) {
    if constexpr (std::is_same_v<S, GrassmannScalar>) {
        // A bare rational string is accepted for even scalars.
        if (j.is_string() || j.is_number_integer()) return GrassmannScalar(rational_from_json(j));
        return grassmann_from_json(j);
    } else {
        return rational_from_json(j);
    }
}

template <class S>
json to_json(const LieSeries<S>& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms()) {
        json monomial = json::object();
        for (const auto& [name, power] : k.second.exponents()) monomial[name] = power;
        terms.push_back({{"basis", x.plugin()->format(k.first)}, {"monomial", monomial}, {"coeff", to_json(c)}});
    }
    return terms;
}

template <class S>
LieSeries<S> series_from_json(const json& j, const PluginPtr& plugin, Truncation truncation) {
    if (!j.is_array()) throw DomainError("series must be a JSON array of terms");
    LieSeries<S> out(plugin, truncation);
    for (const auto& term : j) {
        std::map<std::string, int> exps;
        for (const auto& [name, power] : term.at("monomial").items()) exps[name] = power.template get<int>();
        const Monomial m = Monomial::from_exponents(exps);
        if (m.weight(truncation) > truncation.order)
            throw DomainError("term " + m.to_string() + " exceeds truncation order " + std::to_string(truncation.order));
        out.add(plugin->parse(term.at("basis").template get<std::string>()), m, scalar_from_json<S>(term.at("coeff")));
    }
    return out;
}

} // namespace expfactor

#endif // EXPFACTOR_SERIALIZE_HPP
