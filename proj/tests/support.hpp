// Copyright 2026 The Hardy Interferometer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared generators for the property tests.

#ifndef HARDY_TESTS_SUPPORT_HPP
#define HARDY_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "hardy/hardy.hpp"

namespace hardy::testing {

inline constexpr std::uint64_t kPropertySeed = 0x5eed'1234'abcdULL;

class Gen {
   public:
    explicit Gen(std::uint64_t seed = kPropertySeed) : rng_(seed) {}

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    double range(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double phase() { return range(-4.0 * kPi, 4.0 * kPi); }
    std::int64_t odd(std::int64_t span = 7) {
        return 2 * std::uniform_int_distribution<std::int64_t>(-span, span)(rng_) + 1;
    }

    OpticalSetting side1() { return OpticalSetting::side1(phase(), unit()); }
    OpticalSetting side2() { return OpticalSetting::side2(phase(), unit(), unit()); }

    /// Uniform over the feasible region t1'^2 + r2'^2 >= 1 of the unit square.
    HardyConfiguration feasible_config(bool unit_u_alt = true) {
        for (;;) {
            const double t = unit(), r = unit();
            if (feasibility_slack(t, r) < 0.0) continue;
            HardyConfiguration c{t, r, 1.0, range(-3.0, 3.0), {odd(), odd(), odd()}};
            if (!unit_u_alt) {
                c.u_alt = range(0.05, 1.0);
                const double t2_alt = std::sqrt(1.0 - r * r);
                const double r1_alt = std::sqrt(1.0 - t * t);
                if (r1_alt * t2_alt > c.u_alt * t * r) continue;
            }
            return c;
        }
    }

    std::mt19937_64& engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

inline double max_abs_diff(const ExperimentTables& a, const ExperimentTables& b) {
    double d = 0.0;
    for (SettingPair p : kSettingPairs)
        for (std::size_t k = 0; k < OutcomePair::kCount; ++k)
            d = std::max(d, std::abs(a[p].probabilities[k] - b[p].probabilities[k]));
    return d;
}

}  // namespace hardy::testing

#endif  // HARDY_TESTS_SUPPORT_HPP
