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

// Closed-form joint and single detection probabilities.
//
// Phases are used as given; no modular reduction is applied before calling
// std::cos, so |phi| beyond ~1e6 loses digits in the interference term.

#ifndef HARDY_CLOSED_FORM_HPP
#define HARDY_CLOSED_FORM_HPP

#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/optics.hpp"

namespace hardy {

/// Lossless, 50-50 set-up without an absorber. Rejects A2 outcomes.
inline double joint_prob_standard(double phi1, double phi2, OutcomePair pair) {
    if (pair.side2 == Side2::A) throw DomainError("standard set-up has no absorber outcome A2");
    const double c = std::cos(phi1 - phi2);
    const bool same = static_cast<int>(pair.side1) == static_cast<int>(pair.side2);
    return 0.25 * (same ? 1.0 + c : 1.0 - c);
}

/// General set-up: arbitrary symmetric splitters and absorber transmission u on side 2.
inline double joint_prob_general(const OpticalSetting& s1, const OpticalSetting& s2, OutcomePair pair) {
    const double r1 = s1.reflectivity, t1 = s1.transmittivity;
    const double r2 = s2.reflectivity, t2 = s2.transmittivity;
    const double u = s2.absorber_transmission;
    const double interference = 2.0 * u * r1 * r2 * t1 * t2 * std::cos(s1.phase - s2.phase);
    const double absorbed = 1.0 - u * u;

    double p = 0.0;
    switch (pair.side2) {
        case Side2::L:
            p = pair.side1 == Side1::L ? 0.5 * (u * u * r1 * r1 * t2 * t2 + t1 * t1 * r2 * r2 + interference)
                                       : 0.5 * (r1 * r1 * r2 * r2 + u * u * t1 * t1 * t2 * t2 - interference);
            break;
        case Side2::U:
            p = pair.side1 == Side1::U ? 0.5 * (u * u * t1 * t1 * r2 * r2 + r1 * r1 * t2 * t2 + interference)
                                       : 0.5 * (t1 * t1 * t2 * t2 + u * u * r1 * r1 * r2 * r2 - interference);
            break;
        case Side2::A:
            p = 0.5 * absorbed * (pair.side1 == Side1::L ? r1 * r1 : t1 * t1);
            break;
    }
    // Destructive interference can leave a rounding residue just below zero.
    return std::max(0.0, p);
}

inline JointProbabilityTable closed_form_table(const OpticalSetting& s1, const OpticalSetting& s2) {
    JointProbabilityTable table;
    for (std::size_t k = 0; k < OutcomePair::kCount; ++k) {
        table.probabilities[k] = joint_prob_general(s1, s2, OutcomePair::from_index(k));
    }
    return table;
}

inline ExperimentTables closed_form_tables(const SettingQuad& settings) {
    ExperimentTables out;
    for (SettingPair p : kSettingPairs) out[p] = closed_form_table(settings.side1(p), settings.side2(p));
    return out;
}

struct SingleDetectionProbs {
    double l2 = 0.0;
    double u2 = 0.0;
    double a2 = 0.0;
};

/// Side-2 single detection probabilities; they sum to 1.
inline SingleDetectionProbs single_detection_probs(const OpticalSetting& s2) {
    const double u = s2.absorber_transmission;
    const double r = s2.reflectivity, t = s2.transmittivity;
    return {0.5 * (u * u * t * t + r * r), 0.5 * (u * u * r * r + t * t), 0.5 * (1.0 - u * u)};
}

}  // namespace hardy

#endif  // HARDY_CLOSED_FORM_HPP
