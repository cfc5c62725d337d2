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

// Amplitude-level model of the two-photon interferometer.
//
// The source emits (|A>_1 |C>_2 + |D>_1 |B>_2) / sqrt(2). Photon 1 travels arm A
// (phase shifter phi_1) or arm D; photon 2 travels arm B (phase shifter phi_2
// with transmission amplitude u) or arm C. Every arm has one mirror (factor i).
// Each side recombines its arms at a symmetric beam splitter with real
// transmission t and reflection i*r. The phase-shifted arm transmits towards
// the L detector. The absorber's excited state is kept as a third, orthogonal
// side-2 outcome A2.

#ifndef HARDY_OPTICS_HPP
#define HARDY_OPTICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "hardy/errors.hpp"

namespace hardy {

inline constexpr double kPi = 3.14159265358979323846;
/// Absolute tolerance for equality constraints on doubles.
inline constexpr double kTolerance = 1e-12;

enum class Side1 : std::uint8_t { L = 0, U = 1 };
enum class Side2 : std::uint8_t { L = 0, U = 1, A = 2 };

inline constexpr std::array<Side1, 2> kSide1Outcomes = {Side1::L, Side1::U};
inline constexpr std::array<Side2, 3> kSide2Outcomes = {Side2::L, Side2::U, Side2::A};

inline std::string_view to_string(Side1 o) { return o == Side1::L ? "L1" : "U1"; }
inline std::string_view to_string(Side2 o) {
    switch (o) {
        case Side2::L:
            return "L2";
        case Side2::U:
            return "U2";
        case Side2::A:
            return "A2";
    }
    return "?";
}

/// A joint detection outcome: photon 1 in {L1,U1}, photon 2 in {L2,U2,A2}.
struct OutcomePair {
    Side1 side1 = Side1::L;
    Side2 side2 = Side2::L;

    static constexpr std::size_t kCount = 6;

    constexpr std::size_t index() const {
        return static_cast<std::size_t>(side1) * 3 + static_cast<std::size_t>(side2);
    }
    static constexpr OutcomePair from_index(std::size_t i) {
        return {static_cast<Side1>(i / 3), static_cast<Side2>(i % 3)};
    }
    std::string label() const {
        return std::string(to_string(side1)) + "," + std::string(to_string(side2));
    }
    friend constexpr bool operator==(OutcomePair, OutcomePair) = default;
};

/// One side's knobs. Side 1 always has absorber_transmission == 1.
struct OpticalSetting {
    double phase = 0.0;
    double reflectivity = 1.0 / std::sqrt(2.0);
    double transmittivity = 1.0 / std::sqrt(2.0);
    double absorber_transmission = 1.0;

    /// Side-1 setting from phase and reflectivity; t = sqrt(1 - r^2).
    static OpticalSetting side1(double phase, double r) {
        OpticalSetting s{phase, r, std::sqrt(std::max(0.0, 1.0 - r * r)), 1.0};
        s.validate();
        return s;
    }
    /// Side-2 setting from phase, reflectivity and absorber transmission amplitude u.
    static OpticalSetting side2(double phase, double r, double u) {
        OpticalSetting s{phase, r, std::sqrt(std::max(0.0, 1.0 - r * r)), u};
        s.validate();
        return s;
    }

    /// v = sqrt(1 - u^2), taken real and nonnegative.
    double absorption_amplitude() const {
        return std::sqrt(std::max(0.0, 1.0 - absorber_transmission * absorber_transmission));
    }

    void validate() const {
        auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
        if (!std::isfinite(phase)) throw DomainError("optical setting: phase must be finite");
        if (!in_unit(reflectivity) || !in_unit(transmittivity))
            throw DomainError("optical setting: r and t must lie in [0,1]");
        if (std::abs(reflectivity * reflectivity + transmittivity * transmittivity - 1.0) > kTolerance)
            throw DomainError("optical setting: r^2 + t^2 must equal 1");
        if (!in_unit(absorber_transmission))
            throw DomainError("optical setting: absorber transmission u must lie in [0,1]");
    }
};

/// Complex amplitude per joint outcome.
struct OutcomeAmplitudeTable {
    std::array<std::complex<double>, OutcomePair::kCount> amplitudes{};

    std::complex<double> at(OutcomePair o) const { return amplitudes[o.index()]; }
    std::complex<double>& at(OutcomePair o) { return amplitudes[o.index()]; }

    double norm_squared() const {
        double s = 0.0;
        for (const auto& a : amplitudes) s += std::norm(a);
        return s;
    }
};

/// Probability per joint outcome for one setting pair.
struct JointProbabilityTable {
    std::array<double, OutcomePair::kCount> probabilities{};

    double at(OutcomePair o) const { return probabilities[o.index()]; }
    double& at(OutcomePair o) { return probabilities[o.index()]; }
    double at(Side1 a, Side2 b) const { return at(OutcomePair{a, b}); }

    double total() const {
        double s = 0.0;
        for (double p : probabilities) s += p;
        return s;
    }
    double marginal(Side1 a) const { return at(a, Side2::L) + at(a, Side2::U) + at(a, Side2::A); }
    double marginal(Side2 b) const { return at(Side1::L, b) + at(Side1::U, b); }
    /// Mass on outcomes where photon 2 reached L2 or U2.
    double non_absorbed() const { return total() - marginal(Side2::A); }

    /// Point mass on a single outcome.
    static JointProbabilityTable point_mass(OutcomePair o) {
        JointProbabilityTable t;
        t.at(o) = 1.0;
        return t;
    }
};

/// The four Hardy configurations, in the order (Phi1,Phi2), (Phi1,Phi2'),
/// (Phi1',Phi2), (Phi1',Phi2').
enum class SettingPair : std::uint8_t { Phi1Phi2 = 0, Phi1Phi2p = 1, Phi1pPhi2 = 2, Phi1pPhi2p = 3 };

inline constexpr std::array<SettingPair, 4> kSettingPairs = {
    SettingPair::Phi1Phi2, SettingPair::Phi1Phi2p, SettingPair::Phi1pPhi2, SettingPair::Phi1pPhi2p};

inline std::string_view to_string(SettingPair p) {
    switch (p) {
        case SettingPair::Phi1Phi2:
            return "Phi1,Phi2";
        case SettingPair::Phi1Phi2p:
            return "Phi1,Phi2'";
        case SettingPair::Phi1pPhi2:
            return "Phi1',Phi2";
        case SettingPair::Phi1pPhi2p:
            return "Phi1',Phi2'";
    }
    return "?";
}
/// Whether side 1 uses its primed setting in this configuration.
constexpr bool side1_primed(SettingPair p) { return p == SettingPair::Phi1pPhi2 || p == SettingPair::Phi1pPhi2p; }
constexpr bool side2_primed(SettingPair p) { return p == SettingPair::Phi1Phi2p || p == SettingPair::Phi1pPhi2p; }
constexpr SettingPair setting_pair_of(bool primed1, bool primed2) {
    return static_cast<SettingPair>((primed1 ? 2 : 0) + (primed2 ? 1 : 0));
}

/// One table per setting pair, indexed by SettingPair.
struct ExperimentTables {
    std::array<JointProbabilityTable, 4> tables{};

    const JointProbabilityTable& operator[](SettingPair p) const { return tables[static_cast<std::size_t>(p)]; }
    JointProbabilityTable& operator[](SettingPair p) { return tables[static_cast<std::size_t>(p)]; }
};

/// The four local settings (Phi1, Phi1', Phi2, Phi2').
struct SettingQuad {
    OpticalSetting phi1;
    OpticalSetting phi1_alt;
    OpticalSetting phi2;
    OpticalSetting phi2_alt;

    const OpticalSetting& side1(SettingPair p) const { return side1_primed(p) ? phi1_alt : phi1; }
    const OpticalSetting& side2(SettingPair p) const { return side2_primed(p) ? phi2_alt : phi2; }
};

namespace detail {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};

// Output amplitudes (to L, U) of a symmetric splitter for a photon entering
// through the arm that transmits towards L (first) or reflects towards L (second).
struct SplitterRow {
    Complex to_l;
    Complex to_u;
};
inline SplitterRow from_transmitting_port(const OpticalSetting& s) {
    return {Complex{s.transmittivity, 0.0}, kI * s.reflectivity};
}
inline SplitterRow from_reflecting_port(const OpticalSetting& s) {
    return {kI * s.reflectivity, Complex{s.transmittivity, 0.0}};
}

}  // namespace detail

/// Propagates the source state through mirrors, phase shifters, the absorber
/// and both beam splitters. Independent of the closed-form expressions.
inline OutcomeAmplitudeTable propagate_amplitudes(const OpticalSetting& setting1, const OpticalSetting& setting2) {
    using detail::Complex;
    using detail::kI;
    setting1.validate();
    setting2.validate();

    const Complex mirror = kI;
    // Photon 1: arm A carries the phase shifter and enters H1's transmitting port.
    const Complex arm_a = mirror * std::polar(1.0, setting1.phase);
    const Complex arm_d = mirror;
    const auto split_a = detail::from_transmitting_port(setting1);
    const auto split_d = detail::from_reflecting_port(setting1);
    const std::array<Complex, 2> photon1_from_a = {arm_a * split_a.to_l, arm_a * split_a.to_u};
    const std::array<Complex, 2> photon1_from_d = {arm_d * split_d.to_l, arm_d * split_d.to_u};

    // Photon 2: arm B passes the absorbing phase shifter, arm C only a mirror.
    const Complex arm_b = mirror * setting2.absorber_transmission * std::polar(1.0, setting2.phase);
    const Complex absorbed = mirror * setting2.absorption_amplitude();
    const Complex arm_c = mirror;
    const auto split_b = detail::from_transmitting_port(setting2);
    const auto split_c = detail::from_reflecting_port(setting2);
    const std::array<Complex, 3> photon2_from_b = {arm_b * split_b.to_l, arm_b * split_b.to_u, absorbed};
    const std::array<Complex, 3> photon2_from_c = {arm_c * split_c.to_l, arm_c * split_c.to_u, Complex{}};

    const double source = 1.0 / std::sqrt(2.0);
    OutcomeAmplitudeTable out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            out.amplitudes[i * 3 + j] = source * (photon1_from_a[i] * photon2_from_c[j] + photon1_from_d[i] * photon2_from_b[j]);
        }
    }
    return out;
}

/// Born rule on an amplitude table.
inline JointProbabilityTable outcome_probabilities(const OutcomeAmplitudeTable& amps) {
    const double norm = amps.norm_squared();
    if (std::abs(norm - 1.0) > 1e-9) {
        throw NormalizationError("amplitude table has squared norm " + std::to_string(norm) + ", expected 1");
    }
    JointProbabilityTable table;
    for (std::size_t k = 0; k < OutcomePair::kCount; ++k) table.probabilities[k] = std::norm(amps.amplitudes[k]);
    return table;
}

/// Oracle-route tables for all four configurations.
inline ExperimentTables oracle_tables(const SettingQuad& settings) {
    ExperimentTables out;
    for (SettingPair p : kSettingPairs) {
        out[p] = outcome_probabilities(propagate_amplitudes(settings.side1(p), settings.side2(p)));
    }
    return out;
}

}  // namespace hardy

#endif  // HARDY_OPTICS_HPP
