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

// Analytic sweep of the feasible (t1', r2') grid.

#ifndef HARDY_SWEEP_HPP
#define HARDY_SWEEP_HPP

#include <cmath>
#include <vector>

#include "hardy/bell_audit.hpp"
#include "hardy/hardy_solver.hpp"

namespace hardy {

struct HardySweepRow {
    double t1_alt = 0.0;
    double r2_alt = 0.0;
    double u = 0.0;
    double hardy_probability = 0.0;
    double ch_postselected_margin = 0.0;
    double ch_total_margin = 0.0;
    /// NaN where u^2 = 1.
    double ch_simplified_lhs = 0.0;
};

/// Analytic audit of every feasible grid point with u' = 1.
inline std::vector<HardySweepRow> hardy_sweep(std::size_t resolution) {
    if (resolution < 2) throw DomainError("grid resolution must be at least 2");
    std::vector<HardySweepRow> rows;
    for (std::size_t i = 0; i < resolution; ++i) {
        for (std::size_t j = 0; j < resolution; ++j) {
            const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
            const double r = static_cast<double>(j) / static_cast<double>(resolution - 1);
            if (feasibility_slack(t, r) < -kTolerance) continue;
            const auto s = solve_hardy({t, r, 1.0, 0.0, {}});
            const auto tables = solution_tables(s);
            HardySweepRow row{t, r, s.u, s.hardy_probability, 0.0, 0.0, std::nan("")};
            row.ch_postselected_margin = ch_postselected(ch_probabilities(tables)).margin;
            row.ch_total_margin = ch_total(ch_probabilities(tables), absorption_probability(tables)).margin;
            if (std::abs(1.0 - s.u * s.u) > kTolerance) row.ch_simplified_lhs = ch_simplified_bound(1.0, t, r, s.u).lhs;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace hardy

#endif  // HARDY_SWEEP_HPP
