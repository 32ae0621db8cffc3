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

#include "expfactor/factor.hpp"
#include "expfactor/lie_series.hpp"

namespace expfactor {

std::string part_name(Part part) {
    switch (part) {
    case Part::minus: return "minus";
    case Part::zero: return "zero";
    case Part::plus: return "plus";
    case Part::zero_plus: return "zero_plus";
    }
    return "?";
}

Part parse_part(const std::string& text) {
    if (text == "minus") return Part::minus;
    if (text == "zero") return Part::zero;
    if (text == "plus") return Part::plus;
    if (text == "zero_plus") return Part::zero_plus;
    throw DomainError("unknown graded part '" + text + "'");
}

void SplitSpec::check() const {
    for (int degree : {-1, 0, 1}) {
        const BasisIndex probe{degree, 0, 0, 0, false};
        if (in_part(probe, left) && in_part(probe, right))
            throw DomainError("split " + to_string() + " has overlapping parts");
    }
}

} // namespace expfactor
