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

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
// Output is a pure function of (counter, key), so any trial's draws can be
// recomputed from its index alone.

#ifndef HARDY_PHILOX_HPP
#define HARDY_PHILOX_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace hardy {

inline constexpr std::string_view kRngId = "philox4x32-10";

class Philox4x32 {
   public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr int kRounds = 10;

    static constexpr Counter generate(Counter ctr, Key key) {
        for (int r = 0; r < kRounds; ++r) {
            if (r > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = round(ctr, key);
        }
        return ctr;
    }

    /// Key derived from a 64-bit seed.
    static constexpr Key key_from_seed(std::uint64_t seed) {
        return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    }

    /// Counter for (index, stream).
    static constexpr Counter counter_for(std::uint64_t index, std::uint64_t stream = 0) {
        return {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    }

    /// Two doubles in [0,1) with 53 random bits each.
    static constexpr std::array<double, 2> uniforms(const Counter& block) {
        constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
        const std::uint64_t a = (static_cast<std::uint64_t>(block[0]) << 32) | block[1];
        const std::uint64_t b = (static_cast<std::uint64_t>(block[2]) << 32) | block[3];
        return {static_cast<double>(a >> 11) * kScale, static_cast<double>(b >> 11) * kScale};
    }

   private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Counter round(const Counter& c, const Key& k) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

}  // namespace hardy

#endif  // HARDY_PHILOX_HPP
