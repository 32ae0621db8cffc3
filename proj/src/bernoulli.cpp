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

#include "expfactor/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace expfactor {

namespace {

/* Akiyama-Tanigawa triangle, extended one row at a time.
 *
 * After row m has been folded in, work_[0] is the Bernoulli number B_m in the
 * B_1 = +1/2 convention; the working row is kept so the table can grow
 * without recomputing earlier rows.
 */
class BernoulliTable {
public:
    Rational get(unsigned k) {
        {
            std::shared_lock lock(mutex_);
            if (k < values_.size()) return values_[k];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= k) extend();
        return values_[k];
    }

private:
    void extend() {
        const auto m = static_cast<long>(work_.size());
        work_.emplace_back(1, m + 1);
        for (long j = m; j >= 1; --j) work_[j - 1] = Rational(j) * (work_[j - 1] - work_[j]);
        values_.push_back(m == 1 ? -work_[0] : work_[0]);
    }

    std::shared_mutex mutex_;
    std::vector<Rational> work_;
    std::vector<Rational> values_;
};

BernoulliTable& table() {
    static BernoulliTable instance;
    return instance;
}

} // namespace

Rational bernoulli(unsigned k) { return table().get(k); }

} // namespace expfactor
