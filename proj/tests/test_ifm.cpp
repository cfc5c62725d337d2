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

#include "hardy/ifm.hpp"
#include "support.hpp"

namespace hardy {
namespace {

constexpr double kHalfRoot = 0.70710678118654752440;

// Dark-fringe settings for (Phi1', Phi2): phi1' - phi2 = pi.
IfmContext dark_context(double u, double r2, bool present = true) {
    return {dark_fringe_side1(u, r2, kPi), OpticalSetting::side2(0.0, r2, u), present};
}

TEST(DarkCoincidence, Examples) {
    for (double r2 : {0.0, 0.3, kHalfRoot, 1.0}) EXPECT_EQ(dark_coincidence_prob(1.0, r2).probability, 0.0);
    EXPECT_NEAR(dark_coincidence_prob(0.0, kHalfRoot).probability, 0.25, 1e-12);
    const auto corner = dark_coincidence_prob(0.0, 1.0);
    EXPECT_TRUE(corner.supremum_limit);
    EXPECT_EQ(corner.probability, 0.5);
    EXPECT_NEAR(dark_coincidence_prob(0.0, 1.0 - 1e-9).probability, 0.5, 1e-6);
    EXPECT_THROW(dark_coincidence_prob(-0.1, 0.5), DomainError);
    EXPECT_THROW(dark_coincidence_prob(0.5, 1.1), DomainError);
}

TEST(DarkCoincidence, PositiveExactlyInsideTheSquare) {
    for (int i = 0; i <= 40; ++i) {
        for (int j = 0; j <= 40; ++j) {
            const double u = i / 40.0, r2 = j / 40.0;
            const auto d = dark_coincidence_prob(u, r2);
            if (d.supremum_limit) continue;
            EXPECT_EQ(d.probability > 0.0, u < 1.0 && r2 != 0.0 && r2 != 1.0) << u << " " << r2;
        }
    }
}

TEST(DarkCoincidence, MonotoneTowardsSupremum) {
    double previous = -1.0;
    for (int j = 0; j < 1000; ++j) {
        const double r2 = j / 1000.0;
        const double p = dark_coincidence_prob(0.0, r2).probability;
        EXPECT_GT(p, previous);
        EXPECT_LT(p, 0.5);
        previous = p;
    }
}

TEST(DarkCoincidence, MatchesOpticsOracle) {
    testing::Gen g;
    for (int i = 0; i < 1000; ++i) {
        const double u = g.unit(), r2 = g.unit();
        const auto ctx = dark_context(u, r2);
        const auto t = outcome_probabilities(propagate_amplitudes(ctx.side1, ctx.side2));
        EXPECT_NEAR(t.at(Side1::L, Side2::L), dark_coincidence_prob(u, r2).probability, 1e-12);
        EXPECT_NEAR(t.marginal(Side1::L), 0.5, 1e-12);
        EXPECT_NEAR(t.marginal(Side1::U), 0.5, 1e-12);
        const auto without = outcome_probabilities(propagate_amplitudes(ctx.side1, OpticalSetting::side2(0.0, r2, 1.0)));
        EXPECT_NEAR(without.marginal(Side1::L), 0.5, 1e-12);
    }
}

TEST(IfmEfficiency, Examples) {
    const auto third = ifm_efficiency(0.0, kHalfRoot);
    EXPECT_NEAR(third.efficiency, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(third.absorption, 0.5, 1e-15);
    EXPECT_FALSE(third.degenerate);

    const auto corner = ifm_efficiency(0.0, 1.0);
    EXPECT_TRUE(corner.supremum_limit);
    EXPECT_EQ(corner.efficiency, 0.5);
    EXPECT_NEAR(ifm_efficiency(0.0, 1.0 - 1e-9).efficiency, 0.5, 1e-6);

    const auto near_clear = ifm_efficiency(1.0 - 1e-12, 0.5);
    EXPECT_TRUE(near_clear.degenerate);
    EXPECT_THROW(ifm_efficiency(1.0, 0.5), NoObjectInteractionError);
}

TEST(IfmEfficiency, NeverExceedsHalf) {
    for (const auto& row : ifm_sweep(101, 101)) {
        if (std::isnan(row.efficiency)) {
            EXPECT_EQ(row.u, 1.0);
            continue;
        }
        EXPECT_GE(row.efficiency, 0.0);
        EXPECT_LE(row.efficiency, 0.5);
    }
    EXPECT_THROW(ifm_sweep(1, 5), DomainError);
}

TEST(ClassifyEvent, Examples) {
    const auto ctx = dark_context(0.0, kHalfRoot);
    const auto pair = SettingPair::Phi1pPhi2;
    EXPECT_EQ(classify_event({0, pair, Side1::L, Side2::L}, ctx), EventClass::Conclusive);
    EXPECT_EQ(classify_event({0, pair, Side1::U, Side2::L}, ctx), EventClass::Inconclusive);
    EXPECT_EQ(classify_event({0, pair, Side1::L, Side2::U}, ctx), EventClass::Inconclusive);
    EXPECT_EQ(classify_event({0, pair, Side1::U, Side2::A}, ctx), EventClass::Destructive);
}

TEST(ClassifyEvent, Unsupported) {
    const auto ctx = dark_context(0.3, 0.6);
    EXPECT_THROW(classify_event({0, SettingPair::Phi1Phi2, Side1::L, Side2::L}, ctx), ClassificationUnsupportedError);
    auto off_fringe = ctx;
    off_fringe.side1.phase = 0.5;
    EXPECT_THROW(classify_event({0, SettingPair::Phi1pPhi2, Side1::L, Side2::L}, off_fringe),
                 ClassificationUnsupportedError);
    auto wrong_splitter = ctx;
    wrong_splitter.side1 = OpticalSetting::side1(kPi, 0.9);
    EXPECT_THROW(classify_event({0, SettingPair::Phi1pPhi2, Side1::L, Side2::L}, wrong_splitter),
                 ClassificationUnsupportedError);
    auto absent = ctx;
    absent.object_present = false;
    EXPECT_THROW(classify_event({0, SettingPair::Phi1pPhi2, Side1::L, Side2::L}, absent), ClassificationUnsupportedError);
}

TEST(ClassifyEvent, NoConclusiveEventsWithoutObject) {
    const double r2 = 0.6;
    IfmContext absent{dark_fringe_side1(1.0, r2, kPi), OpticalSetting::side2(0.0, r2, 1.0), false};
    ExperimentTables tables;
    for (SettingPair p : kSettingPairs) tables[p] = closed_form_table(absent.side1, absent.side2);
    for (const auto& e : sample_events(tables, 20000, 11, {0.0, 0.0, 1.0, 0.0}))
        EXPECT_NE(classify_event(e, absent), EventClass::Conclusive);
}

}  // namespace
}  // namespace hardy
