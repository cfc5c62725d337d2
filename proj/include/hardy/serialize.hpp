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

// JSON and CSV encodings of the library's value types.
//
// CSV column orders are frozen:
//   events: trial,pair,o1,o2
//   ifm:    u,r2,p_ll,p_abs,eta
//   sweep:  t1p,r2p,u,hardy_probability,ch_postselected_margin,ch_total_margin,ch_simplified_lhs
// Numbers in CSV are written with 17 significant digits.

#ifndef HARDY_SERIALIZE_HPP
#define HARDY_SERIALIZE_HPP

#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>

#include "hardy/bell_audit.hpp"
#include "hardy/event_sim.hpp"
#include "hardy/hardy_solver.hpp"
#include "hardy/ifm.hpp"
#include "hardy/lhv_oracle.hpp"
#include "hardy/optics.hpp"
#include "hardy/sweep.hpp"
#include "json.hpp"

namespace hardy {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string_view pair_token(SettingPair p) {
    switch (p) {
        case SettingPair::Phi1Phi2:
            return "Phi1Phi2";
        case SettingPair::Phi1Phi2p:
            return "Phi1Phi2p";
        case SettingPair::Phi1pPhi2:
            return "Phi1pPhi2";
        case SettingPair::Phi1pPhi2p:
            return "Phi1pPhi2p";
    }
    return "?";
}

inline Json to_json(const OpticalSetting& s) {
    return {{"phase", s.phase},
            {"reflectivity", s.reflectivity},
            {"transmittivity", s.transmittivity},
            {"absorber_transmission", s.absorber_transmission}};
}

inline Json to_json(const JointProbabilityTable& t) {
    Json j = Json::object();
    for (std::size_t k = 0; k < OutcomePair::kCount; ++k) j[OutcomePair::from_index(k).label()] = t.probabilities[k];
    j["marginals"] = {{"L1", t.marginal(Side1::L)},
                      {"U1", t.marginal(Side1::U)},
                      {"L2", t.marginal(Side2::L)},
                      {"U2", t.marginal(Side2::U)},
                      {"A2", t.marginal(Side2::A)}};
    return j;
}

inline Json to_json(const ExperimentTables& t) {
    Json j = Json::object();
    for (SettingPair p : kSettingPairs) j[std::string(pair_token(p))] = to_json(t[p]);
    return j;
}

/// The ExperimentSpec fields that reproduce a configuration.
inline Json spec_json(const HardyConfiguration& c) {
    return {{"t1p", c.t1_alt}, {"r2p", c.r2_alt}, {"up", c.u_alt}, {"phi0", c.phi0},
            {"n1", c.n.n1},    {"n2", c.n.n2},    {"n3", c.n.n3}};
}

inline Json to_json(const HardySolution& s) {
    return {{"spec", spec_json(s.config)},
            {"u", s.u},
            {"r1", s.r1},
            {"t1", s.t1},
            {"r2", s.r2},
            {"t2", s.t2},
            {"r1p", s.settings.phi1_alt.reflectivity},
            {"t2p", s.settings.phi2_alt.transmittivity},
            {"hardy_probability", s.hardy_probability},
            {"subensemble_fraction", s.subensemble_fraction},
            {"settings",
             {{"Phi1", to_json(s.settings.phi1)},
              {"Phi1p", to_json(s.settings.phi1_alt)},
              {"Phi2", to_json(s.settings.phi2)},
              {"Phi2p", to_json(s.settings.phi2_alt)}}}};
}

inline Json to_json(const InequalityReport& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"label", t.label}, {"value", t.value}, {"source", t.source}});
    return {{"inequality", std::string(to_string(r.id))},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"margin", r.margin},
            {"violated", r.violated},
            {"terms", terms}};
}

inline Json to_json(const ChshResult& c) {
    Json e = Json::object();
    for (SettingPair p : kSettingPairs) e[std::string(pair_token(p))] = c.correlations[p];
    return {{"normalised", c.correlations.normalised},
            {"correlations", e},
            {"sum", c.correlations.chsh_sum()},
            {"report", to_json(c.report)}};
}

inline Json to_json(const DeterministicStrategy& s) {
    return {{"index", s.index()},
            {"o1", {{"Phi1", to_string(s.side1[0])}, {"Phi1p", to_string(s.side1[1])}}},
            {"o2", {{"Phi2", to_string(s.side2[0])}, {"Phi2p", to_string(s.side2[1])}}}};
}

inline Json to_json(const VertexAudit& a) {
    Json rows = Json::array();
    for (const auto& m : a.margins) {
        rows.push_back({{"strategy", to_json(m.strategy)},
                        {"ch_total_margin", m.ch_total_margin},
                        {"postselected_margin", m.postselected_margin}});
    }
    return {{"strategies", a.margins.size()},
            {"max_ch_total_margin", a.max_ch_total_margin},
            {"max_postselected_margin", a.max_postselected_margin},
            {"vertices", rows}};
}

inline Json to_json(const PostselectionExhibit& e) {
    return {{"strategy", to_json(e.strategy)}, {"postselected", to_json(e.postselected)}, {"full_ensemble", to_json(e.full_ensemble)}};
}

inline Json to_json(const IfmReport& r) {
    return {{"u", r.u},
            {"r2", r.r2},
            {"dark_coincidence", r.dark_coincidence},
            {"absorption", r.absorption},
            {"efficiency", r.efficiency},
            {"supremum_limit", r.supremum_limit},
            {"degenerate", r.degenerate}};
}

inline Json to_json(const EmpiricalInequality& e) {
    return {{"report", to_json(e.report)}, {"std_error", e.std_error}, {"ci_low", e.ci_low}, {"ci_high", e.ci_high}};
}

inline Json to_json(const EmpiricalEstimate& e) {
    Json counts = Json::object(), freq = Json::object();
    for (std::size_t k = 0; k < OutcomePair::kCount; ++k) {
        const auto label = OutcomePair::from_index(k).label();
        counts[label] = e.counts[k];
        freq[label] = e.frequency[k];
    }
    return {{"trials", e.trials}, {"accepted", e.accepted}, {"postselected", e.postselected}, {"counts", counts}, {"frequency", freq}};
}

inline Json to_json(const EmpiricalAudit& a) {
    return {{"z", a.z},
            {"acceptance_phi2", a.acceptance_phi2},
            {"postselected", to_json(a.postselected)},
            {"full_ensemble", to_json(a.full_ensemble)},
            {"chsh", to_json(a.chsh)}};
}

inline void write_events_csv(std::ostream& os, std::span<const EventRecord> events) {
    os << "trial,pair,o1,o2\n";
    for (const auto& e : events) {
        os << e.trial << ',' << pair_token(e.pair) << ',' << to_string(e.side1) << ',' << to_string(e.side2) << '\n';
    }
}

inline void write_ifm_csv(std::ostream& os, std::span<const IfmSweepRow> rows) {
    os << "u,r2,p_ll,p_abs,eta\n";
    for (const auto& r : rows) {
        os << format_double(r.u) << ',' << format_double(r.r2) << ',' << format_double(r.dark_coincidence) << ','
           << format_double(r.absorption) << ',' << format_double(r.efficiency) << '\n';
    }
}

inline void write_hardy_sweep_csv(std::ostream& os, std::span<const HardySweepRow> rows) {
    os << "t1p,r2p,u,hardy_probability,ch_postselected_margin,ch_total_margin,ch_simplified_lhs\n";
    for (const auto& r : rows) {
        os << format_double(r.t1_alt) << ',' << format_double(r.r2_alt) << ',' << format_double(r.u) << ','
           << format_double(r.hardy_probability) << ',' << format_double(r.ch_postselected_margin) << ','
           << format_double(r.ch_total_margin) << ',' << format_double(r.ch_simplified_lhs) << '\n';
    }
}

}  // namespace hardy

#endif  // HARDY_SERIALIZE_HPP
