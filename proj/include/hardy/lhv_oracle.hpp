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

// Local hidden-variable models of the four-configuration experiment.
//
// A deterministic strategy fixes photon 1's detector for each of Phi1, Phi1'
// (L or U) and photon 2's fate for each of Phi2, Phi2' (L, U or absorbed).
// There are 2*2*3*3 = 36 of them. A stochastic local model (responses that
// are only probabilistic given lambda, and factorize between the sides) is a
// mixture of these vertices with weight
//   w(s) = <p1(s1|Phi1) p1(s1'|Phi1') p2(s2|Phi2) p2(s2'|Phi2')>,
// so any linear inequality checked on all 36 holds for every local model.

#ifndef HARDY_LHV_ORACLE_HPP
#define HARDY_LHV_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hardy/bell_audit.hpp"
#include "hardy/errors.hpp"
#include "hardy/optics.hpp"

namespace hardy {

struct DeterministicStrategy {
    /// Photon 1's outcome under Phi1 ([0]) and Phi1' ([1]).
    std::array<Side1, 2> side1{Side1::L, Side1::L};
    /// Photon 2's outcome under Phi2 ([0]) and Phi2' ([1]).
    std::array<Side2, 2> side2{Side2::L, Side2::L};

    static constexpr std::size_t kCount = 36;

    /// Canonical index: lexicographic over (o1(Phi1), o1(Phi1'), o2(Phi2), o2(Phi2')) with L < U < A.
    constexpr std::size_t index() const {
        return ((static_cast<std::size_t>(side1[0]) * 2 + static_cast<std::size_t>(side1[1])) * 3 +
                static_cast<std::size_t>(side2[0])) *
                   3 +
               static_cast<std::size_t>(side2[1]);
    }
    static constexpr DeterministicStrategy from_index(std::size_t i) {
        DeterministicStrategy s;
        s.side2[1] = static_cast<Side2>(i % 3);
        i /= 3;
        s.side2[0] = static_cast<Side2>(i % 3);
        i /= 3;
        s.side1[1] = static_cast<Side1>(i % 2);
        i /= 2;
        s.side1[0] = static_cast<Side1>(i % 2);
        return s;
    }
    std::string label() const {
        return "o1(Phi1)=" + std::string(to_string(side1[0])) + " o1(Phi1')=" + std::string(to_string(side1[1])) +
               " o2(Phi2)=" + std::string(to_string(side2[0])) + " o2(Phi2')=" + std::string(to_string(side2[1]));
    }
    friend constexpr bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// All 36 strategies in canonical order.
inline std::vector<DeterministicStrategy> enumerate_strategies() {
    std::vector<DeterministicStrategy> out;
    out.reserve(DeterministicStrategy::kCount);
    for (std::size_t i = 0; i < DeterministicStrategy::kCount; ++i) out.push_back(DeterministicStrategy::from_index(i));
    return out;
}

/// Point-mass tables at (o1(setting1), o2(setting2)) for each configuration.
inline ExperimentTables strategy_tables(const DeterministicStrategy& s) {
    ExperimentTables out;
    for (SettingPair p : kSettingPairs) {
        out[p] = JointProbabilityTable::point_mass({s.side1[side1_primed(p) ? 1 : 0], s.side2[side2_primed(p) ? 1 : 0]});
    }
    return out;
}

/// Weights over the 36 vertices, indexed canonically.
struct LhvMixture {
    std::array<double, DeterministicStrategy::kCount> weights{};

    void validate() const {
        double sum = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0)) throw DomainError("mixture weights must be nonnegative");
            sum += w;
        }
        if (std::abs(sum - 1.0) > kTolerance) throw DomainError("mixture weights must sum to 1");
    }

    static LhvMixture uniform() {
        LhvMixture m;
        m.weights.fill(1.0 / static_cast<double>(DeterministicStrategy::kCount));
        return m;
    }
};

inline ExperimentTables mixture_tables(const LhvMixture& m) {
    m.validate();
    ExperimentTables out;
    for (std::size_t i = 0; i < DeterministicStrategy::kCount; ++i) {
        if (m.weights[i] == 0.0) continue;
        const ExperimentTables v = strategy_tables(DeterministicStrategy::from_index(i));
        for (SettingPair p : kSettingPairs)
            for (std::size_t k = 0; k < OutcomePair::kCount; ++k) out[p].probabilities[k] += m.weights[i] * v[p].probabilities[k];
    }
    return out;
}

/// A stochastic local model: hidden states with weights and per-side response
/// distributions. side1[lambda][setting][outcome], side2[lambda][setting][outcome].
struct StochasticLocalModel {
    std::vector<double> lambda_weights;
    std::vector<std::array<std::array<double, 2>, 2>> side1;
    std::vector<std::array<std::array<double, 3>, 2>> side2;

    void validate() const {
        const std::size_t n = lambda_weights.size();
        if (n == 0 || side1.size() != n || side2.size() != n) throw DomainError("local model: inconsistent sizes");
        double sum = 0.0;
        for (double w : lambda_weights) {
            if (!(w >= 0.0)) throw DomainError("local model: negative weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw DomainError("local model: weights must sum to 1");
        auto check = [](const auto& dist) {
            double s = 0.0;
            for (double p : dist) {
                if (!(p >= 0.0)) throw DomainError("local model: negative response probability");
                s += p;
            }
            if (std::abs(s - 1.0) > 1e-9) throw DomainError("local model: response distribution must sum to 1");
        };
        for (std::size_t l = 0; l < n; ++l) {
            for (const auto& d : side1[l]) check(d);
            for (const auto& d : side2[l]) check(d);
        }
    }
};

/// Joint tables of a stochastic model via factorization, averaged over lambda.
inline ExperimentTables model_tables(const StochasticLocalModel& m) {
    m.validate();
    ExperimentTables out;
    for (std::size_t l = 0; l < m.lambda_weights.size(); ++l) {
        for (SettingPair p : kSettingPairs) {
            const auto& d1 = m.side1[l][side1_primed(p) ? 1 : 0];
            const auto& d2 = m.side2[l][side2_primed(p) ? 1 : 0];
            for (std::size_t k = 0; k < OutcomePair::kCount; ++k) {
                const OutcomePair o = OutcomePair::from_index(k);
                out[p].probabilities[k] +=
                    m.lambda_weights[l] * d1[static_cast<std::size_t>(o.side1)] * d2[static_cast<std::size_t>(o.side2)];
            }
        }
    }
    return out;
}

/// Vertex weights of a stochastic model.
inline LhvMixture decompose(const StochasticLocalModel& m) {
    m.validate();
    LhvMixture out;
    for (std::size_t l = 0; l < m.lambda_weights.size(); ++l) {
        for (std::size_t i = 0; i < DeterministicStrategy::kCount; ++i) {
            const auto s = DeterministicStrategy::from_index(i);
            out.weights[i] += m.lambda_weights[l] * m.side1[l][0][static_cast<std::size_t>(s.side1[0])] *
                              m.side1[l][1][static_cast<std::size_t>(s.side1[1])] *
                              m.side2[l][0][static_cast<std::size_t>(s.side2[0])] *
                              m.side2[l][1][static_cast<std::size_t>(s.side2[1])];
        }
    }
    return out;
}

enum class PostselectionMode {
    /// Drop the absorbed events but keep frequencies relative to all emitted pairs.
    Unrenormalized,
    /// Divide each configuration's table by its non-absorbed mass. A table with
    /// no surviving events contributes zeros.
    Renormalized,
};

/// Postselected CH on arbitrary tables.
inline InequalityReport postselected_ch(const ExperimentTables& t, PostselectionMode mode = PostselectionMode::Unrenormalized) {
    ExperimentTables use = t;
    if (mode == PostselectionMode::Renormalized) {
        for (SettingPair p : kSettingPairs) {
            const double mass = t[p].non_absorbed();
            for (std::size_t k = 0; k < OutcomePair::kCount; ++k) {
                const OutcomePair o = OutcomePair::from_index(k);
                use[p].probabilities[k] = (o.side2 == Side2::A || mass <= 0.0) ? 0.0 : t[p].probabilities[k] / mass;
            }
        }
    }
    return ch_postselected(ch_probabilities(use));
}

inline InequalityReport full_ensemble_ch(const ExperimentTables& t) {
    return ch_total(ch_probabilities(t), absorption_probability(t));
}

struct StrategyMargin {
    DeterministicStrategy strategy;
    double ch_total_margin = 0.0;
    double postselected_margin = 0.0;
};

struct VertexAudit {
    std::vector<StrategyMargin> margins;
    double max_ch_total_margin = 0.0;
    double max_postselected_margin = 0.0;
};

/// Full-ensemble and postselected CH margins on every given vertex.
inline VertexAudit verify_ch_total_all(const std::vector<DeterministicStrategy>& strategies) {
    VertexAudit out;
    out.max_ch_total_margin = -1e300;
    out.max_postselected_margin = -1e300;
    for (const auto& s : strategies) {
        const auto t = strategy_tables(s);
        StrategyMargin m{s, full_ensemble_ch(t).margin, postselected_ch(t).margin};
        out.max_ch_total_margin = std::max(out.max_ch_total_margin, m.ch_total_margin);
        out.max_postselected_margin = std::max(out.max_postselected_margin, m.postselected_margin);
        out.margins.push_back(m);
    }
    return out;
}

struct PostselectionExhibit {
    DeterministicStrategy strategy;
    InequalityReport postselected;
    InequalityReport full_ensemble;
};

/// A purely local strategy whose postselected statistics violate CH; the first
/// maximiser in canonical order.
inline PostselectionExhibit find_postselected_violation() {
    PostselectionExhibit best;
    double best_margin = -1e300;
    for (const auto& s : enumerate_strategies()) {
        const auto t = strategy_tables(s);
        auto post = postselected_ch(t);
        if (post.margin > best_margin) {
            best_margin = post.margin;
            best = {s, std::move(post), full_ensemble_ch(t)};
        }
    }
    return best;
}

}  // namespace hardy

#endif  // HARDY_LHV_ORACLE_HPP
