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

// Bell-type inequalities for the four-configuration experiment.
//
//   CH, postselected:  P(U1,Phi1';U2,Phi2') <= P(L1,Phi1;L2,Phi2) + P(U1,Phi1;U2,Phi2') + P(U1,Phi1';U2,Phi2)
//   CH, full ensemble: the same right-hand side plus P(A2,Phi2)
//   CH, simplified:    (u' t1' r2')^2 (1 - u^2) <= 1   (Hardy conditions hold, u^2 != 1)
//   CHSH:              |E(Phi1,Phi2) + E(Phi1,Phi2') + E(Phi1',Phi2) - E(Phi1',Phi2')| <= 2
//
// Every report carries lhs, rhs and margin = lhs - rhs; a report is violated
// when margin > 1e-12.

#ifndef HARDY_BELL_AUDIT_HPP
#define HARDY_BELL_AUDIT_HPP

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/optics.hpp"

namespace hardy {

enum class InequalityId { ChPostselected, ChTotal, ChSimplified, Chsh };

inline std::string_view to_string(InequalityId id) {
    switch (id) {
        case InequalityId::ChPostselected:
            return "CH-postselected";
        case InequalityId::ChTotal:
            return "CH-total";
        case InequalityId::ChSimplified:
            return "CH-simplified";
        case InequalityId::Chsh:
            return "CHSH";
    }
    return "?";
}

/// Value assigned to an L count (-1) and a U count (+1) in correlation functions.
inline constexpr int kOutcomeValueL = -1;
inline constexpr int kOutcomeValueU = +1;

struct InequalityTerm {
    std::string label;
    double value = 0.0;
    std::string source;  // "lhs" or "rhs"
};

struct InequalityReport {
    InequalityId id = InequalityId::ChPostselected;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool violated = false;
    std::vector<InequalityTerm> terms;
};

/// The four probabilities entering the CH inequalities.
struct ChProbabilities {
    double uu_alt_alt = 0.0;  // P(U1,Phi1';U2,Phi2')
    double ll = 0.0;          // P(L1,Phi1;L2,Phi2)
    double uu_alt2 = 0.0;     // P(U1,Phi1;U2,Phi2')
    double uu_alt1 = 0.0;     // P(U1,Phi1';U2,Phi2)
};

namespace detail {

inline void require_probability(double p, std::string_view name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(name) + " = " + std::to_string(p) + " is not a probability in [0,1]");
    }
}

inline InequalityReport finish(InequalityId id, double lhs, double rhs, std::vector<InequalityTerm> terms) {
    InequalityReport r;
    r.id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.violated = r.margin > kTolerance;
    r.terms = std::move(terms);
    return r;
}

inline std::vector<InequalityTerm> ch_terms(const ChProbabilities& p) {
    return {{"P(U1,Phi1';U2,Phi2')", p.uu_alt_alt, "lhs"},
            {"P(L1,Phi1;L2,Phi2)", p.ll, "rhs"},
            {"P(U1,Phi1;U2,Phi2')", p.uu_alt2, "rhs"},
            {"P(U1,Phi1';U2,Phi2)", p.uu_alt1, "rhs"}};
}

inline void require_ch(const ChProbabilities& p) {
    require_probability(p.uu_alt_alt, "P(U1,Phi1';U2,Phi2')");
    require_probability(p.ll, "P(L1,Phi1;L2,Phi2)");
    require_probability(p.uu_alt2, "P(U1,Phi1;U2,Phi2')");
    require_probability(p.uu_alt1, "P(U1,Phi1';U2,Phi2)");
}

}  // namespace detail

/// Extracts the four CH probabilities from a set of tables.
inline ChProbabilities ch_probabilities(const ExperimentTables& t) {
    return {t[SettingPair::Phi1pPhi2p].at(Side1::U, Side2::U), t[SettingPair::Phi1Phi2].at(Side1::L, Side2::L),
            t[SettingPair::Phi1Phi2p].at(Side1::U, Side2::U), t[SettingPair::Phi1pPhi2].at(Side1::U, Side2::U)};
}

/// P(A2,Phi2) = P(L1,Phi1;A2,Phi2) + P(U1,Phi1;A2,Phi2).
inline double absorption_probability(const ExperimentTables& t) {
    return t[SettingPair::Phi1Phi2].marginal(Side2::A);
}

inline InequalityReport ch_postselected(const ChProbabilities& p) {
    detail::require_ch(p);
    return detail::finish(InequalityId::ChPostselected, p.uu_alt_alt, p.ll + p.uu_alt2 + p.uu_alt1, detail::ch_terms(p));
}

inline InequalityReport ch_total(const ChProbabilities& p, double p_abs) {
    detail::require_ch(p);
    detail::require_probability(p_abs, "P(A2,Phi2)");
    auto terms = detail::ch_terms(p);
    terms.push_back({"P(A2,Phi2)", p_abs, "rhs"});
    return detail::finish(InequalityId::ChTotal, p.uu_alt_alt, p.ll + p.uu_alt2 + p.uu_alt1 + p_abs, std::move(terms));
}

/// Full-ensemble CH once the Hardy conditions hold, divided through by
/// P(A2,Phi2) = (1 - u^2)/2. The parameters are expected to satisfy
/// u^2 u' t1' r2' = r1' t2' but this is not enforced.
inline InequalityReport ch_simplified_bound(double u_alt, double t1_alt, double r2_alt, double u) {
    detail::require_probability(u_alt, "u'");
    detail::require_probability(t1_alt, "t1'");
    detail::require_probability(r2_alt, "r2'");
    detail::require_probability(u, "u");
    if (std::abs(1.0 - u * u) <= kTolerance) {
        throw DomainError("simplified CH bound is undefined for u^2 = 1 (absorption probability vanishes)");
    }
    const double a = u_alt * t1_alt * r2_alt;
    const double lhs = a * a * (1.0 - u * u);
    return detail::finish(InequalityId::ChSimplified, lhs, 1.0,
                          {{"(u' t1' r2')^2", a * a, "lhs"}, {"1 - u^2", 1.0 - u * u, "lhs"}, {"bound", 1.0, "rhs"}});
}

struct CorrelationSet {
    /// Indexed by SettingPair.
    std::array<double, 4> values{};
    bool normalised = false;

    double operator[](SettingPair p) const { return values[static_cast<std::size_t>(p)]; }
    double chsh_sum() const { return values[0] + values[1] + values[2] - values[3]; }
};

/// E = P(LL) + P(UU) - P(LU) - P(UL). Absorption events contribute nothing; when
/// normalised, E is divided by the non-absorbed mass of the table.
inline double correlation(const JointProbabilityTable& t, bool normalised) {
    const double same = t.at(Side1::L, Side2::L) + t.at(Side1::U, Side2::U);
    const double diff = t.at(Side1::L, Side2::U) + t.at(Side1::U, Side2::L);
    const double e = (kOutcomeValueL * kOutcomeValueL) * same + (kOutcomeValueL * kOutcomeValueU) * diff;
    if (!normalised) return e;
    const double mass = same + diff;
    if (!(mass > 0.0)) throw UndefinedCorrelationError("normalised correlation undefined: table has no non-absorbed events");
    return e / mass;
}

struct ChshResult {
    CorrelationSet correlations;
    InequalityReport report;
};

inline ChshResult chsh(const ExperimentTables& tables, bool normalised) {
    ChshResult out;
    out.correlations.normalised = normalised;
    std::vector<InequalityTerm> terms;
    for (SettingPair p : kSettingPairs) {
        const double e = correlation(tables[p], normalised);
        out.correlations.values[static_cast<std::size_t>(p)] = e;
        terms.push_back({"E(" + std::string(to_string(p)) + ")", e, "lhs"});
    }
    const double sum = out.correlations.chsh_sum();
    terms.push_back({"bound", 2.0, "rhs"});
    out.report = detail::finish(InequalityId::Chsh, std::abs(sum), 2.0, std::move(terms));
    return out;
}

}  // namespace hardy

#endif  // HARDY_BELL_AUDIT_HPP
