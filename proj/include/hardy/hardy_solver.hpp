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

// Solver for the Hardy zero-conditions with the maximally entangled source.
//
// Three joint probabilities must vanish:
//   P(L1,Phi1; L2,Phi2) = P(U1,Phi1; U2,Phi2') = P(U1,Phi1'; U2,Phi2) = 0.
// With every phase difference an odd multiple of pi this holds exactly when
//   u r1 t2 = t1 r2,   u' t1 r2' = r1 t2',   u t1' r2 = r1' t2,
// which together force u^2 u' t1' r2' = r1' t2'. The free inputs are
// (t1', r2', u') plus the phase offset phi0 and the odd integers n1, n2, n3.

#ifndef HARDY_HARDY_SOLVER_HPP
#define HARDY_HARDY_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hardy/closed_form.hpp"
#include "hardy/errors.hpp"
#include "hardy/optics.hpp"

namespace hardy {

struct PhaseIntegers {
    std::int64_t n1 = 1;
    std::int64_t n2 = 1;
    std::int64_t n3 = 1;
};

struct HardyConfiguration {
    double t1_alt = 1.0;  // t1'
    double r2_alt = 1.0;  // r2'
    double u_alt = 1.0;   // u', absorber transmission in the Phi2' setting
    double phi0 = 0.0;
    PhaseIntegers n{};

    /// t1' = r2' = q, u' = 1.
    static HardyConfiguration diagonal(double q) { return {q, q, 1.0, 0.0, {}}; }
};

struct PhaseAssignment {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi1_alt = 0.0;
    double phi2_alt = 0.0;
};

struct HardySolution {
    HardyConfiguration config;
    SettingQuad settings;
    double u = 1.0;
    double r1 = 0.0, t1 = 1.0, r2 = 0.0, t2 = 1.0;
    double hardy_probability = 0.0;
    /// Fraction of emitted pairs not absorbed in the Phi2 configurations.
    double subensemble_fraction = 1.0;
};

namespace detail {

inline bool is_odd(std::int64_t n) { return n % 2 != 0; }

inline void require_odd(const PhaseIntegers& n) {
    if (!is_odd(n.n1) || !is_odd(n.n2) || !is_odd(n.n3)) {
        throw DomainError("phase integers n1, n2, n3 must be odd (got " + std::to_string(n.n1) + ", " +
                          std::to_string(n.n2) + ", " + std::to_string(n.n3) + ")");
    }
}

inline void require_unit(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(name) + " must lie in [0,1]");
}

// sqrt(1 - x^2) without negative round-off.
inline double complement(double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)); }

}  // namespace detail

/// phi2' = phi0; phi1 = n2 pi + phi0; phi2 = (n2 - n1) pi + phi0; phi1' = (n3 + n2 - n1) pi + phi0.
inline PhaseAssignment assign_phases(double phi0, const PhaseIntegers& n) {
    detail::require_odd(n);
    const auto pi_times = [](std::int64_t k) { return static_cast<double>(k) * kPi; };
    return {pi_times(n.n2) + phi0, pi_times(n.n2 - n.n1) + phi0, pi_times(n.n3 + n.n2 - n.n1) + phi0, phi0};
}

struct StandardInfeasibilityReport {
    PhaseIntegers n;
    std::int64_t forced_multiple = 0;  // (phi1' - phi2') / pi = n2 + n3 - n1
    PhaseAssignment phases;
    double cos_alt_difference = 0.0;
    double p_uu_alt = 0.0;  // P(U1,phi1'; U2,phi2') in the 50-50 lossless set-up
    std::array<double, 4> correlations{};
    double chsh_sum = 0.0;
};

/// Shows that the three zero-conditions in the lossless 50-50 set-up force the
/// fourth probability to vanish as well, and that the resulting perfect
/// anticorrelations saturate CHSH.
inline StandardInfeasibilityReport check_standard_infeasibility(const PhaseIntegers& n) {
    detail::require_odd(n);
    StandardInfeasibilityReport rep;
    rep.n = n;
    rep.forced_multiple = n.n2 + n.n3 - n.n1;
    rep.phases = assign_phases(0.0, n);
    const double p1[2] = {rep.phases.phi1, rep.phases.phi1_alt};
    const double p2[2] = {rep.phases.phi2, rep.phases.phi2_alt};
    rep.cos_alt_difference = std::cos(p1[1] - p2[1]);
    rep.p_uu_alt = joint_prob_standard(p1[1], p2[1], {Side1::U, Side2::U});
    for (SettingPair sp : kSettingPairs) {
        const double a = p1[side1_primed(sp) ? 1 : 0];
        const double b = p2[side2_primed(sp) ? 1 : 0];
        rep.correlations[static_cast<std::size_t>(sp)] =
            joint_prob_standard(a, b, {Side1::L, Side2::L}) + joint_prob_standard(a, b, {Side1::U, Side2::U}) -
            joint_prob_standard(a, b, {Side1::L, Side2::U}) - joint_prob_standard(a, b, {Side1::U, Side2::L});
    }
    const auto& e = rep.correlations;
    rep.chsh_sum = e[0] + e[1] + e[2] - e[3];
    return rep;
}

/// P(U1,Phi1'; U2,Phi2') = 1/2 [u' t1' r2' (1 - u^2)]^2.
inline double hardy_probability(double u_alt, double t1_alt, double r2_alt, double u) {
    const double a = u_alt * t1_alt * r2_alt * (1.0 - u * u);
    return 0.5 * a * a;
}

inline double hardy_probability(const HardySolution& s) {
    return hardy_probability(s.config.u_alt, s.config.t1_alt, s.config.r2_alt, s.u);
}

/// The feasibility slack t1'^2 + r2'^2 - 1; negative means infeasible.
inline double feasibility_slack(double t1_alt, double r2_alt) { return t1_alt * t1_alt + r2_alt * r2_alt - 1.0; }

/// Solves the zero-conditions for the given configuration.
inline HardySolution solve_hardy(const HardyConfiguration& config) {
    detail::require_unit(config.t1_alt, "t1'");
    detail::require_unit(config.r2_alt, "r2'");
    if (!(config.u_alt > 0.0 && config.u_alt <= 1.0)) {
        throw DomainError("u' must lie in (0,1]; the value u' = 0 is excluded");
    }
    if (!std::isfinite(config.phi0)) throw DomainError("phi0 must be finite");
    detail::require_odd(config.n);

    const double slack = feasibility_slack(config.t1_alt, config.r2_alt);
    if (slack < -kTolerance) {
        throw InfeasibleError("infeasible Hardy region: t1'^2 + r2'^2 = " +
                              std::to_string(config.t1_alt * config.t1_alt + config.r2_alt * config.r2_alt) +
                              " < 1 (a physical absorber requires t1'^2 + r2'^2 >= 1)");
    }

    const double t1_alt = config.t1_alt, r2_alt = config.r2_alt, u_alt = config.u_alt;
    const double r1_alt = detail::complement(t1_alt);
    const double t2_alt = detail::complement(r2_alt);

    // A zero denominator is only feasible on the boundary, where u^2 = 1.
    double u2 = 1.0;
    const double denominator = u_alt * t1_alt * r2_alt;
    if (denominator > 0.0) {
        u2 = r1_alt * t2_alt / denominator;
    }
    // At u' = 1 the slack test above already decides feasibility; u^2 above 1
    // there is rounding in the quotient and is clamped.
    if (u_alt < 1.0 && r1_alt * t2_alt - denominator > kTolerance) {
        throw InfeasibleError("infeasible Hardy region: required absorber transmission u^2 = " + std::to_string(u2) +
                              " > 1 for u' = " + std::to_string(u_alt) +
                              " (need r1' t2' <= u' t1' r2'; at u' = 1 this is t1'^2 + r2'^2 >= 1)");
    }
    u2 = std::clamp(u2, 0.0, 1.0);
    const double u = std::sqrt(u2);

    HardySolution s;
    s.config = config;
    s.u = u;

    // r1/t1 = u' r2'/t2'.
    {
        const double a = u_alt * r2_alt, b = t2_alt;
        const double norm = std::hypot(a, b);
        s.r1 = a / norm;
        s.t1 = b / norm;
    }
    // t2/r2 = u t1'/r1'. Both vanish only at t1' = 1 with u = 0; then any H2
    // works and the 50-50 splitter is used.
    {
        const double a = r1_alt, b = u * t1_alt;
        const double norm = std::hypot(a, b);
        if (norm > 0.0) {
            s.r2 = a / norm;
            s.t2 = b / norm;
        } else {
            s.r2 = s.t2 = 1.0 / std::sqrt(2.0);
        }
    }

    const PhaseAssignment ph = assign_phases(config.phi0, config.n);
    s.settings.phi1 = OpticalSetting{ph.phi1, s.r1, s.t1, 1.0};
    s.settings.phi1_alt = OpticalSetting{ph.phi1_alt, r1_alt, t1_alt, 1.0};
    s.settings.phi2 = OpticalSetting{ph.phi2, s.r2, s.t2, u};
    s.settings.phi2_alt = OpticalSetting{ph.phi2_alt, r2_alt, t2_alt, u_alt};
    s.settings.phi1.validate();
    s.settings.phi1_alt.validate();
    s.settings.phi2.validate();
    s.settings.phi2_alt.validate();

    s.hardy_probability = hardy_probability(u_alt, t1_alt, r2_alt, u);
    s.subensemble_fraction = 0.5 * (1.0 + u2);
    return s;
}

/// Residuals of the three splitter relations and of their consequence.
struct ConstraintResiduals {
    double zero_ll = 0.0;       // u r1 t2 - t1 r2
    double zero_uu_alt2 = 0.0;  // u' t1 r2' - r1 t2'
    double zero_uu_alt1 = 0.0;  // u t1' r2 - r1' t2
    double consequence = 0.0;   // u^2 u' t1' r2' - r1' t2'

    double max_abs() const {
        return std::max({std::abs(zero_ll), std::abs(zero_uu_alt2), std::abs(zero_uu_alt1), std::abs(consequence)});
    }
};

inline ConstraintResiduals constraint_residuals(const HardySolution& s) {
    const auto& q = s.settings;
    const double u = s.u, ua = s.config.u_alt;
    return {u * q.phi1.reflectivity * q.phi2.transmittivity - q.phi1.transmittivity * q.phi2.reflectivity,
            ua * q.phi1.transmittivity * q.phi2_alt.reflectivity - q.phi1.reflectivity * q.phi2_alt.transmittivity,
            u * q.phi1_alt.transmittivity * q.phi2.reflectivity - q.phi1_alt.reflectivity * q.phi2.transmittivity,
            u * u * ua * q.phi1_alt.transmittivity * q.phi2_alt.reflectivity -
                q.phi1_alt.reflectivity * q.phi2_alt.transmittivity};
}

/// Quantum tables for the four configurations of a solution (closed-form route).
inline ExperimentTables solution_tables(const HardySolution& s) { return closed_form_tables(s.settings); }

enum class SearchDomain {
    FeasibleRegion,  // t1'^2 + r2'^2 >= 1
    Boundary,        // t1'^2 + r2'^2 == 1
    Diagonal,        // t1' = r2' = q, 1/sqrt(2) <= q <= 1
};

struct HardyMaximum {
    HardyConfiguration argmax;
    double max_probability = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// Strictly better, with lexicographic tie-break on (t1', r2').
inline bool better(double p, double t, double r, const HardyMaximum& best) {
    if (p > best.max_probability + kTolerance) return true;
    if (p < best.max_probability - kTolerance) return false;
    if (t != best.argmax.t1_alt) return t < best.argmax.t1_alt;
    return r < best.argmax.r2_alt;
}

inline double evaluate_point(double t, double r, std::size_t& evaluations) {
    ++evaluations;
    return solve_hardy({t, r, 1.0, 0.0, {}}).hardy_probability;
}

}  // namespace detail

/// Deterministic grid search (u' = 1) followed by local grid refinement around
/// the best cell. Reproducible for a given resolution.
inline HardyMaximum maximize_hardy(std::size_t resolution, SearchDomain domain = SearchDomain::FeasibleRegion) {
    if (resolution < 2) throw DomainError("grid resolution must be at least 2");
    HardyMaximum best;
    best.max_probability = -1.0;
    best.argmax = {2.0, 2.0, 1.0, 0.0, {}};
    const double step = 1.0 / static_cast<double>(resolution - 1);

    auto consider = [&](double t, double r) {
        t = std::clamp(t, 0.0, 1.0);
        r = std::clamp(r, 0.0, 1.0);
        if (feasibility_slack(t, r) < -kTolerance) return;
        const double p = detail::evaluate_point(t, r, best.evaluations);
        if (detail::better(p, t, r, best)) {
            best.max_probability = p;
            best.argmax = {t, r, 1.0, 0.0, {}};
        }
    };

    switch (domain) {
        case SearchDomain::FeasibleRegion: {
            for (std::size_t i = 0; i < resolution; ++i)
                for (std::size_t j = 0; j < resolution; ++j)
                    consider(static_cast<double>(i) * step, static_cast<double>(j) * step);
            // Refinement: shrink a local grid around the incumbent.
            double radius = step;
            for (int round = 0; round < 20; ++round) {
                const double t0 = best.argmax.t1_alt, r0 = best.argmax.r2_alt;
                for (int i = -2; i <= 2; ++i)
                    for (int j = -2; j <= 2; ++j) consider(t0 + i * radius / 2.0, r0 + j * radius / 2.0);
                radius /= 2.0;
            }
            break;
        }
        case SearchDomain::Boundary: {
            for (std::size_t i = 0; i < resolution; ++i) {
                const double theta = static_cast<double>(i) * step * kPi / 2.0;
                consider(std::cos(theta), std::sin(theta));
            }
            break;
        }
        case SearchDomain::Diagonal: {
            const double lo = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < resolution; ++i) {
                const double q = lo + (1.0 - lo) * static_cast<double>(i) * step;
                consider(q, q);
            }
            break;
        }
    }
    return best;
}

struct ProfilePoint {
    double q = 0.0;
    double hardy_probability = 0.0;
};

/// Hardy probability along t1' = r2' = q on an even grid over [1/sqrt(2), 1].
inline std::vector<ProfilePoint> diagonal_profile(std::size_t resolution) {
    if (resolution < 2) throw DomainError("grid resolution must be at least 2");
    std::vector<ProfilePoint> out;
    out.reserve(resolution);
    const double lo = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < resolution; ++i) {
        const double q = lo + (1.0 - lo) * static_cast<double>(i) / static_cast<double>(resolution - 1);
        out.push_back({q, solve_hardy(HardyConfiguration::diagonal(q)).hardy_probability});
    }
    return out;
}

}  // namespace hardy

#endif  // HARDY_HARDY_SOLVER_HPP
