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

#include <gtest/gtest.h>

#include <cmath>

#include "hardy/philox.hpp"

namespace hardy {
namespace {

using Counter = Philox4x32::Counter;
using Key = Philox4x32::Key;

// Known-answer vectors published with the Random123 reference implementation.
TEST(Philox, KnownAnswerZero) {
    EXPECT_EQ(Philox4x32::generate({0, 0, 0, 0}, {0, 0}), (Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
    EXPECT_EQ(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
    EXPECT_EQ(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, IsConstexpr) {
    constexpr auto block = Philox4x32::generate({0, 0, 0, 0}, {0, 0});
    static_assert(block[0] == 0x6627e8d5u);
    SUCCEED();
}

TEST(Philox, SeedAndCounterLayout) {
    EXPECT_EQ(Philox4x32::key_from_seed(0x0123456789abcdefULL), (Key{0x89abcdef, 0x01234567}));
    EXPECT_EQ(Philox4x32::counter_for(0x100000002ULL, 3), (Counter{2, 1, 3, 0}));
}

TEST(Philox, UniformsInUnitInterval) {
    const auto ones = Philox4x32::uniforms({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff});
    EXPECT_LT(ones[0], 1.0);
    EXPECT_LT(ones[1], 1.0);
    const auto zeros = Philox4x32::uniforms({0, 0, 0, 0});
    EXPECT_EQ(zeros[0], 0.0);
    double mean = 0.0;
    constexpr int kN = 100000;
    const auto key = Philox4x32::key_from_seed(42);
    for (int i = 0; i < kN; ++i) mean += Philox4x32::uniforms(Philox4x32::generate(Philox4x32::counter_for(i), key))[0];
    mean /= kN;
    EXPECT_NEAR(mean, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / kN));
}

}  // namespace
}  // namespace hardy
