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

#include "hardy/bell_audit.hpp"
#include "support.hpp"

namespace hardy {
namespace {

ExperimentTables tables_at(double q2) {
    return oracle_tables(solve_hardy(HardyConfiguration::diagonal(std::sqrt(q2))).settings);
}

TEST(ChPostselected, Examples) {
    const auto optimum = ch_postselected({0.5, 0.0, 0.0, 0.0});
    EXPECT_NEAR(optimum.margin, 0.5, 1e-12);
    EXPECT_TRUE(optimum.violated);
    const auto three = ch_probabilities(tables_at(0.75));
    const auto r = ch_postselected(three);
    EXPECT_NEAR(r.margin, 0.125, 1e-12);
    EXPECT_TRUE(r.violated);
    EXPECT_FALSE(ch_postselected({0.0, 0.0, 0.0, 0.0}).violated);
    EXPECT_THROW(ch_postselected({1.2, 0.0, 0.0, 0.0}), DomainError);
    EXPECT_THROW(ch_postselected({0.2, -0.1, 0.0, 0.0}), DomainError);
}

TEST(ChPostselected, ViolatedFlagUsesTolerance) {
    EXPECT_FALSE(ch_postselected({0.3 + 5e-13, 0.1, 0.1, 0.1}).violated);
    EXPECT_TRUE(ch_postselected({0.3 + 5e-12, 0.1, 0.1, 0.1}).violated);
}

TEST(ChTotal, Examples) {
    const auto optimum = ch_total({0.5, 0.0, 0.0, 0.0}, 0.5);
    EXPECT_NEAR(optimum.margin, 0.0, 1e-12);
    EXPECT_FALSE(optimum.violated);

    const auto t = tables_at(0.75);
    EXPECT_NEAR(absorption_probability(t), 1.0 / 3.0, 1e-12);
    const auto r = ch_total(ch_probabilities(t), absorption_probability(t));
    EXPECT_NEAR(r.margin, -5.0 / 24.0, 1e-12);
    EXPECT_FALSE(r.violated);

    EXPECT_TRUE(ch_total({0.2, 0.0, 0.0, 0.0}, 0.0).violated);
    EXPECT_THROW(ch_total({0.2, 0.0, 0.0, 0.0}, 1.5), DomainError);
}

TEST(ChSimplified, Examples) {
    const auto optimum = ch_simplified_bound(1.0, 1.0, 1.0, 0.0);
    EXPECT_NEAR(optimum.lhs, 1.0, 1e-15);
    EXPECT_NEAR(optimum.margin, 0.0, 1e-15);
    EXPECT_FALSE(optimum.violated);

    const double q = std::sqrt(0.75);
    const auto three = ch_simplified_bound(1.0, q, q, std::sqrt(1.0 / 3.0));
    EXPECT_NEAR(three.lhs, 0.375, 1e-12);
    EXPECT_FALSE(three.violated);

    EXPECT_NEAR(ch_simplified_bound(1.0, 0.9, 0.9, 1.0 - 1e-9).lhs, 0.0, 1e-8);
    EXPECT_THROW(ch_simplified_bound(1.0, 0.9, 0.9, 1.0), DomainError);
}

TEST(ChSimplified, AgreesWithRatioOfTotalTerms) {
    testing::Gen g;
    for (int i = 0; i < 500; ++i) {
        const auto c = g.feasible_config(i % 2 == 0);
        const auto s = solve_hardy(c);
        if (1.0 - s.u * s.u < 1e-6) continue;
        const auto t = solution_tables(s);
        const double ratio = ch_probabilities(t).uu_alt_alt / absorption_probability(t);
        EXPECT_NEAR(ch_simplified_bound(c.u_alt, c.t1_alt, c.r2_alt, s.u).lhs, ratio, 1e-9);
    }
}

TEST(Chsh, StandardSaturation) {
    const auto s = solve_hardy(HardyConfiguration::diagonal(1.0 / std::sqrt(2.0)));
    const auto r = chsh(solution_tables(s), false);
    for (double e : r.correlations.values) EXPECT_NEAR(e, -1.0, 1e-12);
    EXPECT_NEAR(r.report.lhs, 2.0, 1e-12);
    EXPECT_FALSE(r.report.violated);
}

TEST(Chsh, ThreeQuartersUnnormalised) {
    const auto r = chsh(tables_at(0.75), false);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1Phi2], -0.5, 1e-12);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1Phi2p], -1.0, 1e-12);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1pPhi2], -0.5, 1e-12);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1pPhi2p], -0.5, 1e-12);
    EXPECT_NEAR(r.correlations.chsh_sum(), -1.5, 1e-12);
    EXPECT_FALSE(r.report.violated);
}

// Regression constants for the renormalised variant at q^2 = 3/4.
TEST(Chsh, ThreeQuartersNormalised) {
    const auto r = chsh(tables_at(0.75), true);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1Phi2], -0.75, 1e-12);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1Phi2p], -1.0, 1e-12);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1pPhi2], -0.75, 1e-12);
    EXPECT_NEAR(r.correlations[SettingPair::Phi1pPhi2p], -0.5, 1e-12);
    EXPECT_NEAR(r.report.lhs, 2.0, 1e-12);
    EXPECT_NEAR(r.report.margin, 0.0, 1e-12);
}

TEST(Chsh, NormalisedUndefinedWithoutSurvivors) {
    ExperimentTables t;
    for (SettingPair p : kSettingPairs) t[p] = JointProbabilityTable::point_mass({Side1::L, Side2::A});
    EXPECT_THROW(chsh(t, true), UndefinedCorrelationError);
    EXPECT_NO_THROW(chsh(t, false));
}

TEST(ChshProperty, UnnormalisedNeverExceedsTwoOnHardyFamily) {
    testing::Gen g;
    for (int i = 0; i < 1000; ++i) {
        const auto s = solve_hardy(g.feasible_config(i % 3 != 0));
        const auto unnorm = chsh(solution_tables(s), false);
        EXPECT_LE(unnorm.report.lhs, 2.0 + 1e-12);
        const auto norm = chsh(solution_tables(s), true);
        for (double e : norm.correlations.values) EXPECT_LE(std::abs(e), 1.0 + 1e-12);
    }
}

TEST(ChTotalProperty, NeverViolatedOnHardyFamily) {
    testing::Gen g;
    for (int i = 0; i < 1000; ++i) {
        const auto t = solution_tables(solve_hardy(g.feasible_config(i % 2 == 0)));
        EXPECT_LE(ch_total(ch_probabilities(t), absorption_probability(t)).margin, 1e-12);
    }
}

TEST(InequalityReport, TermBreakdown) {
    const auto r = ch_total({0.1, 0.2, 0.3, 0.05}, 0.25);
    EXPECT_EQ(r.id, InequalityId::ChTotal);
    EXPECT_EQ(r.terms.size(), 5u);
    for (const auto& term : r.terms) {
        EXPECT_GE(term.value, 0.0);
        EXPECT_LE(term.value, 1.0);
    }
    EXPECT_NEAR(r.margin, r.lhs - r.rhs, 1e-15);
}

}  // namespace
}  // namespace hardy
