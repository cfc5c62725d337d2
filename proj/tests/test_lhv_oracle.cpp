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

#include <set>

#include "hardy/lhv_oracle.hpp"
#include "support.hpp"

namespace hardy {
namespace {

DeterministicStrategy strategy(Side1 a, Side1 a_alt, Side2 b, Side2 b_alt) {
    DeterministicStrategy s;
    s.side1 = {a, a_alt};
    s.side2 = {b, b_alt};
    return s;
}

TEST(Enumerate, CanonicalOrder) {
    const auto all = enumerate_strategies();
    ASSERT_EQ(all.size(), 36u);
    EXPECT_EQ(all.front(), strategy(Side1::L, Side1::L, Side2::L, Side2::L));
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i].index(), i);
        seen.insert(all[i].index());
    }
    EXPECT_EQ(seen.size(), 36u);
}

TEST(StrategyTables, Examples) {
    const auto uu = strategy_tables(strategy(Side1::U, Side1::U, Side2::U, Side2::U));
    for (SettingPair p : kSettingPairs) EXPECT_EQ(uu[p].at(Side1::U, Side2::U), 1.0);

    const auto absorbed = strategy_tables(strategy(Side1::L, Side1::U, Side2::A, Side2::L));
    EXPECT_EQ(absorbed[SettingPair::Phi1Phi2].marginal(Side2::A), 1.0);
    EXPECT_EQ(absorbed[SettingPair::Phi1pPhi2].marginal(Side2::A), 1.0);
    EXPECT_EQ(absorbed[SettingPair::Phi1Phi2p].marginal(Side2::A), 0.0);

    for (const auto& s : enumerate_strategies()) {
        const auto t = strategy_tables(s);
        for (SettingPair p : kSettingPairs) EXPECT_EQ(t[p].total(), 1.0);
    }
}

TEST(VertexAudit, AllStrategiesSatisfyTotal) {
    const auto audit = verify_ch_total_all(enumerate_strategies());
    ASSERT_EQ(audit.margins.size(), 36u);
    EXPECT_EQ(audit.max_ch_total_margin, 0.0);
    EXPECT_EQ(audit.max_postselected_margin, 1.0);
    for (const auto& m : audit.margins) {
        EXPECT_LE(m.ch_total_margin, 0.0);
        if (m.postselected_margin > 0.0) {
            EXPECT_EQ(m.strategy.side2[0], Side2::A);
        }
    }
}

TEST(VertexAudit, HandEvaluatedPointMass) {
    const auto s = strategy(Side1::L, Side1::U, Side2::A, Side2::U);
    const auto r = full_ensemble_ch(strategy_tables(s));
    EXPECT_EQ(r.lhs, 1.0);
    EXPECT_EQ(absorption_probability(strategy_tables(s)), 1.0);
    EXPECT_EQ(r.margin, 0.0);
}

TEST(VertexAudit, UniformMixtureIsMeanOfVertices) {
    const auto audit = verify_ch_total_all(enumerate_strategies());
    double mean = 0.0;
    for (const auto& m : audit.margins) mean += m.ch_total_margin / 36.0;
    EXPECT_NEAR(full_ensemble_ch(mixture_tables(LhvMixture::uniform())).margin, mean, 1e-12);
}

TEST(PostselectionExhibit, Found) {
    const auto e = find_postselected_violation();
    EXPECT_EQ(e.strategy, strategy(Side1::L, Side1::U, Side2::A, Side2::U));
    EXPECT_EQ(e.postselected.lhs, 1.0);
    EXPECT_EQ(e.postselected.rhs, 0.0);
    EXPECT_EQ(e.postselected.margin, 1.0);
    EXPECT_LE(e.full_ensemble.margin, 0.0);
}

TEST(PostselectionExhibit, AbsorptionFreeStrategiesNeverViolate) {
    std::size_t checked = 0;
    for (const auto& s : enumerate_strategies()) {
        if (s.side2[0] == Side2::A || s.side2[1] == Side2::A) continue;
        ++checked;
        const auto t = strategy_tables(s);
        EXPECT_LE(postselected_ch(t).margin, 0.0);
        EXPECT_EQ(postselected_ch(t, PostselectionMode::Renormalized).margin, postselected_ch(t).margin);
    }
    EXPECT_EQ(checked, 16u);
}

TEST(Mixture, Validation) {
    LhvMixture m;
    EXPECT_THROW(mixture_tables(m), DomainError);
    m.weights[0] = 1.5;
    m.weights[1] = -0.5;
    EXPECT_THROW(mixture_tables(m), DomainError);
}

template <std::size_t N>
std::array<double, N> random_distribution(testing::Gen& g) {
    std::array<double, N> d{};
    double s = 0.0;
    for (auto& x : d) s += (x = g.unit() < 0.2 ? 0.0 : g.unit());
    if (s == 0.0) {
        d[0] = 1.0;
        return d;
    }
    for (auto& x : d) x /= s;
    return d;
}

StochasticLocalModel random_model(testing::Gen& g) {
    StochasticLocalModel m;
    const std::size_t n = 1 + static_cast<std::size_t>(g.unit() * 6);
    double total = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        m.lambda_weights.push_back(g.unit() + 1e-3);
        total += m.lambda_weights.back();
        m.side1.push_back({random_distribution<2>(g), random_distribution<2>(g)});
        m.side2.push_back({random_distribution<3>(g), random_distribution<3>(g)});
    }
    for (auto& w : m.lambda_weights) w /= total;
    return m;
}

TEST(StochasticModels, AreMixturesOfVerticesAndSatisfyTotal) {
    testing::Gen g;
    for (int i = 0; i < 1000; ++i) {
        const auto m = random_model(g);
        const auto direct = model_tables(m);
        const auto mix = decompose(m);
        EXPECT_NO_THROW(mix.validate());
        EXPECT_LE(testing::max_abs_diff(direct, mixture_tables(mix)), 1e-12);

        double weighted = 0.0;
        for (std::size_t k = 0; k < DeterministicStrategy::kCount; ++k)
            weighted += mix.weights[k] * full_ensemble_ch(strategy_tables(DeterministicStrategy::from_index(k))).margin;
        const double margin = full_ensemble_ch(direct).margin;
        EXPECT_NEAR(margin, weighted, 1e-12);
        EXPECT_LE(margin, 1e-12);
    }
}

TEST(StochasticModels, RejectsMalformed) {
    StochasticLocalModel m;
    EXPECT_THROW(model_tables(m), DomainError);
    m.lambda_weights = {1.0};
    m.side1 = {{{{0.5, 0.5}, {0.7, 0.7}}}};
    m.side2 = {{{{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}}}};
    EXPECT_THROW(model_tables(m), DomainError);
}

}  // namespace
}  // namespace hardy
