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
 // Bernoulli numbers for the generating function x / (e^x - 1).

#ifndef EXPFACTOR_BERNOULLI_HPP
#define EXPFACTOR_BERNOULLI_HPP

#include "expfactor/rational.hpp"

namespace expfactor {

// B_k with B_1 = -1/2. Memoized process-wide; safe to call concurrently.
Rational bernoulli(unsigned k);

} // namespace expfactor

#endif // EXPFACTOR_BERNOULLI_HPP
