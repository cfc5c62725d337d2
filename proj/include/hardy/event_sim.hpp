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

// Seeded Monte Carlo of coincidence records and their empirical audit.
//
// Trial i draws one Philox block at counter (i, 0) under key(seed): the first
// uniform picks the setting pair by weight, the second picks the joint outcome
// from that pair's table. Records are therefore identical for any thread count.

#ifndef HARDY_EVENT_SIM_HPP
#define HARDY_EVENT_SIM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "hardy/bell_audit.hpp"
#include "hardy/errors.hpp"
#include "hardy/hardy_solver.hpp"
#include "hardy/optics.hpp"
#include "hardy/philox.hpp"

namespace hardy {

struct EventRecord {
    std::uint64_t trial = 0;
    SettingPair pair = SettingPair::Phi1Phi2;
    Side1 side1 = Side1::L;
    Side2 side2 = Side2::L;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

using SettingWeights = std::array<double, 4>;
inline constexpr SettingWeights kUniformWeights = {1.0, 1.0, 1.0, 1.0};

namespace detail {

inline void validate_weights(const SettingWeights& w) {
    double sum = 0.0;
    for (double x : w) {
        if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("setting weights must be finite and nonnegative");
        sum += x;
    }
    if (!(sum > 0.0)) throw DomainError("setting weights must have a positive sum");
}

// Index of the first cumulative bin exceeding x * total; skips empty bins.
template <std::size_t N>
std::size_t pick(const std::array<double, N>& mass, double x) {
    double total = 0.0;
    for (double m : mass) total += m;
    const double target = x * total;
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < N; ++k) {
        if (mass[k] <= 0.0) continue;
        last_positive = k;
        cum += mass[k];
        if (target < cum) return k;
    }
    return last_positive;
}

inline EventRecord draw(const ExperimentTables& tables, const SettingWeights& weights, const Philox4x32::Key& key,
                        std::uint64_t trial) {
    const auto u = Philox4x32::uniforms(Philox4x32::generate(Philox4x32::counter_for(trial), key));
    const auto pair = static_cast<SettingPair>(pick(weights, u[0]));
    const OutcomePair o = OutcomePair::from_index(pick(tables[pair].probabilities, u[1]));
    return {trial, pair, o.side1, o.side2};
}

}  // namespace detail

/// n records drawn from the given tables. `threads` only splits the work.
inline std::vector<EventRecord> sample_events(const ExperimentTables& tables, std::uint64_t n, std::uint64_t seed,
                                              const SettingWeights& weights = kUniformWeights, unsigned threads = 1) {
    if (n == 0) throw DomainError("number of trials must be at least 1");
    detail::validate_weights(weights);
    for (SettingPair p : kSettingPairs) {
        for (double x : tables[p].probabilities)
            if (!(x >= 0.0)) throw DomainError("probability tables must be nonnegative");
        if (std::abs(tables[p].total() - 1.0) > 1e-9) throw DomainError("probability tables must sum to 1");
    }

    const auto key = Philox4x32::key_from_seed(seed);
    std::vector<EventRecord> out(n);
    auto fill = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) out[i] = detail::draw(tables, weights, key, i);
    };

    threads = std::max(1u, threads);
    if (threads == 1 || n < 4096) {
        fill(0, n);
    } else {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = (n + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t b = std::min<std::uint64_t>(n, w * chunk);
            const std::uint64_t e = std::min<std::uint64_t>(n, b + chunk);
            if (b < e) workers.emplace_back(fill, b, e);
        }
    }
    return out;
}

inline std::vector<EventRecord> sample_events(const HardySolution& solution, std::uint64_t n, std::uint64_t seed,
                                              const SettingWeights& weights = kUniformWeights, unsigned threads = 1) {
    return sample_events(solution_tables(solution), n, seed, weights, threads);
}

/// Counts and frequencies for one setting pair.
struct EmpiricalEstimate {
    std::uint64_t trials = 0;    // all records of this pair
    std::uint64_t accepted = 0;  // records kept after postselection
    std::array<std::uint64_t, OutcomePair::kCount> counts{};
    /// counts / trials (never renormalised to the accepted subensemble).
    std::array<double, OutcomePair::kCount> frequency{};
    /// sqrt(f (1 - f) / trials).
    std::array<double, OutcomePair::kCount> std_error{};
    bool postselected = false;

    double at(OutcomePair o) const { return frequency[o.index()]; }
    double acceptance_rate() const { return trials == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(trials); }
};

using EstimateSet = std::array<EmpiricalEstimate, 4>;

/// Per-pair estimates. With postselect, A2 records are dropped from the counts.
inline EstimateSet estimate(std::span<const EventRecord> events, bool postselect) {
    if (events.empty()) throw InsufficientDataError("cannot estimate from an empty event stream");
    EstimateSet out;
    for (const auto& e : events) {
        auto& est = out[static_cast<std::size_t>(e.pair)];
        ++est.trials;
        if (postselect && e.side2 == Side2::A) continue;
        ++est.accepted;
        ++est.counts[OutcomePair{e.side1, e.side2}.index()];
    }
    for (auto& est : out) {
        est.postselected = postselect;
        if (est.trials == 0) continue;
        const double n = static_cast<double>(est.trials);
        for (std::size_t k = 0; k < OutcomePair::kCount; ++k) {
            const double f = static_cast<double>(est.counts[k]) / n;
            est.frequency[k] = f;
            est.std_error[k] = std::sqrt(f * (1.0 - f) / n);
        }
    }
    return out;
}

/// Empirical tables (frequencies) from an estimate set.
inline ExperimentTables empirical_tables(const EstimateSet& est) {
    ExperimentTables out;
    for (SettingPair p : kSettingPairs) out[p].probabilities = est[static_cast<std::size_t>(p)].frequency;
    return out;
}

struct EmpiricalInequality {
    InequalityReport report;
    double std_error = 0.0;
    double ci_low = 0.0;   // margin - z * std_error
    double ci_high = 0.0;  // margin + z * std_error
};

struct EmpiricalAudit {
    EmpiricalInequality postselected;
    EmpiricalInequality full_ensemble;
    EmpiricalInequality chsh;
    double z = 4.0;
    /// Fraction of (Phi1,Phi2) records in which photon 2 was not absorbed.
    double acceptance_phi2 = 0.0;
};

namespace detail {

// Coefficients of a statistic that is linear in each pair's frequencies.
using LinearStatistic = std::array<std::array<double, OutcomePair::kCount>, 4>;

// Multinomial plug-in variance, pairs independent.
inline double linear_std_error(const LinearStatistic& c, const EstimateSet& est) {
    double var = 0.0;
    for (std::size_t p = 0; p < 4; ++p) {
        const auto& e = est[p];
        if (e.trials == 0) continue;
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t k = 0; k < OutcomePair::kCount; ++k) {
            m1 += c[p][k] * e.frequency[k];
            m2 += c[p][k] * c[p][k] * e.frequency[k];
        }
        var += std::max(0.0, m2 - m1 * m1) / static_cast<double>(e.trials);
    }
    return std::sqrt(var);
}

inline EmpiricalInequality with_interval(InequalityReport r, double se, double z) {
    EmpiricalInequality out{std::move(r), se, 0.0, 0.0};
    out.ci_low = out.report.margin - z * se;
    out.ci_high = out.report.margin + z * se;
    return out;
}

inline void set(LinearStatistic& c, SettingPair p, Side1 a, Side2 b, double v) {
    c[static_cast<std::size_t>(p)][OutcomePair{a, b}.index()] = v;
}

}  // namespace detail

/// Postselected CH, full-ensemble CH and unnormalised CHSH from an event stream.
inline EmpiricalAudit empirical_audit(std::span<const EventRecord> events, double z = 4.0) {
    const EstimateSet full = estimate(events, false);
    for (SettingPair p : kSettingPairs) {
        if (full[static_cast<std::size_t>(p)].trials == 0) {
            throw CoverageError("event stream has no records for setting pair (" + std::string(to_string(p)) + ")");
        }
    }
    const EstimateSet post = estimate(events, true);
    const ExperimentTables post_tables = empirical_tables(post);
    const ExperimentTables full_tables = empirical_tables(full);

    detail::LinearStatistic ch{};
    detail::set(ch, SettingPair::Phi1pPhi2p, Side1::U, Side2::U, 1.0);
    detail::set(ch, SettingPair::Phi1Phi2, Side1::L, Side2::L, -1.0);
    detail::set(ch, SettingPair::Phi1Phi2p, Side1::U, Side2::U, -1.0);
    detail::set(ch, SettingPair::Phi1pPhi2, Side1::U, Side2::U, -1.0);
    detail::LinearStatistic ch_full = ch;
    detail::set(ch_full, SettingPair::Phi1Phi2, Side1::L, Side2::A, -1.0);
    detail::set(ch_full, SettingPair::Phi1Phi2, Side1::U, Side2::A, -1.0);
    detail::LinearStatistic chsh_c{};
    for (SettingPair p : kSettingPairs) {
        const double sign = p == SettingPair::Phi1pPhi2p ? -1.0 : 1.0;
        detail::set(chsh_c, p, Side1::L, Side2::L, sign);
        detail::set(chsh_c, p, Side1::U, Side2::U, sign);
        detail::set(chsh_c, p, Side1::L, Side2::U, -sign);
        detail::set(chsh_c, p, Side1::U, Side2::L, -sign);
    }

    EmpiricalAudit out;
    out.z = z;
    out.postselected =
        detail::with_interval(ch_postselected(ch_probabilities(post_tables)), detail::linear_std_error(ch, full), z);
    out.full_ensemble = detail::with_interval(
        ch_total(ch_probabilities(full_tables), absorption_probability(full_tables)), detail::linear_std_error(ch_full, full), z);
    out.chsh = detail::with_interval(chsh(full_tables, false).report, detail::linear_std_error(chsh_c, full), z);
    out.acceptance_phi2 = post[static_cast<std::size_t>(SettingPair::Phi1Phi2)].acceptance_rate();
    return out;
}

}  // namespace hardy

#endif  // HARDY_EVENT_SIM_HPP
