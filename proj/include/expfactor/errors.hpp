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
 // Exception hierarchy shared by all modules.

#ifndef EXPFACTOR_ERRORS_HPP
#define EXPFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expfactor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// An input violates an operation's precondition (wrong graded part, missing
// variable order, malformed configuration).
struct DomainError : Error {
    using Error::Error;
};

// A formal exponential or CBH evaluation was asked for on a series with a
// term of order zero, which would not converge in the formal topology.
struct ConvergenceError : Error {
    using Error::Error;
};

// Operands built on different plugins or truncations.
struct UsageError : Error {
    using Error::Error;
};

// The recursion finished but the defining identity does not hold. Always a
// bug: the factorization is guaranteed to exist.
struct InternalConsistencyError : Error {
    using Error::Error;
};

} // namespace expfactor

#endif // EXPFACTOR_ERRORS_HPP
