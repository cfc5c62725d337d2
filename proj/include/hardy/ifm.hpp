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

// Interaction-free detection of the absorber in path B.
//
// In configuration (Phi1', Phi2) with phi1' - phi2 an odd multiple of pi and
// u t1' r2 = r1' t2, a coincidence (L1, L2) is forbidden without the object
// and has probability
//   P_LL(u, r2) = 1/2 (1 - r2^2) r2^2 (1 - u^2)^2 / (1 - r2^2 (1 - u^2))
// with it. The absorption probability is (1 - u^2)/2 and the efficiency is
// eta = P_LL / (P_LL + P_abs). The corner u = 0, r2 = 1 is only a limit
// (P_LL -> 1/2, eta -> 1/2) and is reported as a flagged supremum.

#ifndef HARDY_IFM_HPP
#define HARDY_IFM_HPP

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/event_sim.hpp"
#include "hardy/optics.hpp"

namespace hardy {

inline constexpr double kIfmSupremum = 0.5;
/// Absorption probability below which the efficiency is flagged degenerate.
inline constexpr double kIfmDegenerateAbsorption = 1e-9;

struct DarkCoincidence {
    double probability = 0.0;
    /// True at (u = 0, r2 = 1): probability holds the unattained supremum 1/2.
    bool supremum_limit = false;
};

namespace detail {
inline void require_ifm_domain(double u, double r2) {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("absorber transmission u must lie in [0,1]");
    if (!(r2 >= 0.0 && r2 <= 1.0)) throw DomainError("reflectivity r2 must lie in [0,1]");
}
}  // namespace detail

inline DarkCoincidence dark_coincidence_prob(double u, double r2) {
    detail::require_ifm_domain(u, r2);
    const double w = 1.0 - u * u;
    const double s = r2 * r2;
    const double denominator = 1.0 - s * w;
    if (denominator <= 0.0) return {kIfmSupremum, true};
    return {0.5 * (1.0 - s) * s * w * w / denominator, false};
}

struct IfmReport {
    double u = 0.0;
    double r2 = 0.0;
    double dark_coincidence = 0.0;
    double absorption = 0.0;
    double efficiency = 0.0;
    bool supremum_limit = false;
    bool degenerate = false;
};

/// Raises NoObjectInteractionError at u = 1, where nothing is absorbed.
inline IfmReport ifm_efficiency(double u, double r2) {
    detail::require_ifm_domain(u, r2);
    if (u == 1.0) throw NoObjectInteractionError("u = 1: the object never absorbs, efficiency is undefined");
    const auto dark = dark_coincidence_prob(u, r2);
    IfmReport rep;
    rep.u = u;
    rep.r2 = r2;
    rep.dark_coincidence = dark.probability;
    rep.absorption = 0.5 * (1.0 - u * u);
    rep.supremum_limit = dark.supremum_limit;
    rep.efficiency = rep.dark_coincidence / (rep.dark_coincidence + rep.absorption);
    rep.degenerate = rep.absorption < kIfmDegenerateAbsorption;
    return rep;
}

/// Side-1 splitter (r1', t1') tuned so that u t1' r2 = r1' t2.
inline OpticalSetting dark_fringe_side1(double u, double r2, double phase) {
    detail::require_ifm_domain(u, r2);
    const double t2 = std::sqrt(std::max(0.0, 1.0 - r2 * r2));
    const double a = u * r2, b = t2;
    const double norm = std::hypot(a, b);
    const double r1 = norm > 0.0 ? a / norm : 0.0;
    const double t1 = norm > 0.0 ? b / norm : 1.0;
    return OpticalSetting{phase, r1, t1, 1.0};
}

struct IfmSweepRow {
    double u = 0.0;
    double r2 = 0.0;
    double dark_coincidence = 0.0;
    double absorption = 0.0;
    /// NaN where undefined (u = 1).
    double efficiency = 0.0;
    bool supremum_limit = false;
};

/// Evenly spaced grid over u in [0,1] and r2 in [0,1].
inline std::vector<IfmSweepRow> ifm_sweep(std::size_t u_steps, std::size_t r2_steps) {
    if (u_steps < 2 || r2_steps < 2) throw DomainError("sweep needs at least 2 steps per axis");
    std::vector<IfmSweepRow> rows;
    rows.reserve(u_steps * r2_steps);
    for (std::size_t i = 0; i < u_steps; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(u_steps - 1);
        for (std::size_t j = 0; j < r2_steps; ++j) {
            const double r2 = static_cast<double>(j) / static_cast<double>(r2_steps - 1);
            const auto dark = dark_coincidence_prob(u, r2);
            const double abs = 0.5 * (1.0 - u * u);
            const double eta = abs > 0.0 ? dark.probability / (dark.probability + abs) : std::nan("");
            rows.push_back({u, r2, dark.probability, abs, eta, dark.supremum_limit});
        }
    }
    return rows;
}

enum class EventClass {
    /// (L1, L2): the object is present and no photon interacted with it.
    Conclusive,
    /// Photon 2 was absorbed: the object was found by interacting with it.
    Destructive,
    Inconclusive,
};

inline std::string_view to_string(EventClass c) {
    switch (c) {
        case EventClass::Conclusive:
            return "conclusive";
        case EventClass::Destructive:
            return "destructive";
        case EventClass::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

/// The (Phi1', Phi2) settings in use and whether the object sits in path B.
/// Without the object, side 2 must have u = 1.
struct IfmContext {
    OpticalSetting side1;
    OpticalSetting side2;
    bool object_present = true;
};

inline EventClass classify_event(const EventRecord& record, const IfmContext& ctx) {
    constexpr double kTol = 1e-9;
    if (record.pair != SettingPair::Phi1pPhi2) {
        throw ClassificationUnsupportedError("classification is defined only for the (Phi1', Phi2) configuration");
    }
    ctx.side1.validate();
    ctx.side2.validate();
    const double u = ctx.side2.absorber_transmission;
    if (!ctx.object_present && u != 1.0) {
        throw ClassificationUnsupportedError("object absent but side-2 transmission u != 1");
    }
    if (std::abs(std::cos(ctx.side1.phase - ctx.side2.phase) + 1.0) > kTol) {
        throw ClassificationUnsupportedError("phi1' - phi2 is not an odd multiple of pi (not on the dark fringe)");
    }
    if (std::abs(u * ctx.side1.transmittivity * ctx.side2.reflectivity -
                 ctx.side1.reflectivity * ctx.side2.transmittivity) > kTol) {
        throw ClassificationUnsupportedError("splitters violate u t1' r2 = r1' t2 (not on the dark fringe)");
    }
    if (record.side2 == Side2::A) {
        if (!ctx.object_present) throw ClassificationUnsupportedError("absorption record with no object in place");
        return EventClass::Destructive;
    }
    if (record.side1 == Side1::L && record.side2 == Side2::L) return EventClass::Conclusive;
    return EventClass::Inconclusive;
}

}  // namespace hardy

#endif  // HARDY_IFM_HPP
