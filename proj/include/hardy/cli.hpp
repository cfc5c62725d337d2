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

// Command-line front end: solve | probs | audit | sample | lhv | ifm | sweep.
//
// Exit codes: 0 success, 2 validation error, 3 infeasible Hardy region,
// 4 insufficient data, 1 anything else.

#ifndef HARDY_CLI_HPP
#define HARDY_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardy/bell_audit.hpp"
#include "hardy/closed_form.hpp"
#include "hardy/errors.hpp"
#include "hardy/event_sim.hpp"
#include "hardy/hardy_solver.hpp"
#include "hardy/ifm.hpp"
#include "hardy/lhv_oracle.hpp"
#include "hardy/optics.hpp"
#include "hardy/serialize.hpp"
#include "hardy/sweep.hpp"

namespace hardy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitInsufficientData = 4;

/// Environment variable holding the default seed for `sample`.
inline constexpr const char* kSeedEnv = "HARDY_SEED";
inline constexpr std::uint64_t kDefaultSeed = 1;

class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Everything a command may need; filled from --config, then inline flags.
struct ExperimentSpec {
    std::optional<double> q, q2, t1p, r2p, up, phi0;
    std::optional<std::int64_t> n1, n2, n3;
    std::optional<std::uint64_t> trials, seed;
    std::optional<std::vector<double>> weights;

    HardyConfiguration configuration() const {
        const int forms = (q ? 1 : 0) + (q2 ? 1 : 0) + ((t1p || r2p) ? 1 : 0);
        if (forms > 1) throw ValidationError("give exactly one of --q, --q2 or (--t1p, --r2p)");
        HardyConfiguration c;
        if (q2) {
            if (!(*q2 >= 0.0 && *q2 <= 1.0)) throw ValidationError("q2 must lie in [0,1]");
            c.t1_alt = c.r2_alt = std::sqrt(*q2);
        } else if (q) {
            if (!(*q >= 0.0 && *q <= 1.0)) throw ValidationError("q must lie in [0,1]");
            c.t1_alt = c.r2_alt = *q;
        } else if (t1p || r2p) {
            if (!t1p || !r2p) throw ValidationError("--t1p and --r2p must be given together");
            c.t1_alt = *t1p;
            c.r2_alt = *r2p;
        } else {
            throw ValidationError("no configuration: give --q, --q2, (--t1p, --r2p) or --config");
        }
        c.u_alt = up.value_or(1.0);
        c.phi0 = phi0.value_or(0.0);
        c.n = {n1.value_or(1), n2.value_or(1), n3.value_or(1)};
        return c;
    }

    SettingWeights setting_weights() const {
        if (!weights) return kUniformWeights;
        if (weights->size() != 4) throw ValidationError("--weights takes exactly four values");
        return {(*weights)[0], (*weights)[1], (*weights)[2], (*weights)[3]};
    }
};

/// Reads an ExperimentSpec document. A document with a "spec" member (the
/// output of `solve`) is unwrapped first. Unknown keys are rejected.
inline ExperimentSpec parse_spec(const Json& doc) {
    const Json& j = doc.contains("spec") ? doc.at("spec") : doc;
    if (!j.is_object()) throw ValidationError("experiment spec must be a JSON object");
    static const std::set<std::string> known = {"q",  "q2", "t1p", "r2p",    "up",   "phi0",   "n1",
                                                "n2", "n3", "trials", "seed", "weights"};
    ExperimentSpec s;
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw ValidationError("unknown experiment spec key '" + key + "'");
        try {
            if (key == "q") s.q = value.get<double>();
            if (key == "q2") s.q2 = value.get<double>();
            if (key == "t1p") s.t1p = value.get<double>();
            if (key == "r2p") s.r2p = value.get<double>();
            if (key == "up") s.up = value.get<double>();
            if (key == "phi0") s.phi0 = value.get<double>();
            if (key == "n1") s.n1 = value.get<std::int64_t>();
            if (key == "n2") s.n2 = value.get<std::int64_t>();
            if (key == "n3") s.n3 = value.get<std::int64_t>();
            if (key == "trials") s.trials = value.get<std::uint64_t>();
            if (key == "seed") s.seed = value.get<std::uint64_t>();
            if (key == "weights") s.weights = value.get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("experiment spec key '" + key + "': " + e.what());
        }
    }
    return s;
}

inline ExperimentSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    try {
        return parse_spec(Json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

/// Inline flags override fields read from --config.
inline void overlay(ExperimentSpec& base, const ExperimentSpec& flags) {
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    if (flags.q || flags.q2 || flags.t1p || flags.r2p) {
        base.q = base.q2 = base.t1p = base.r2p = std::nullopt;
    }
    take(base.q, flags.q);
    take(base.q2, flags.q2);
    take(base.t1p, flags.t1p);
    take(base.r2p, flags.r2p);
    take(base.up, flags.up);
    take(base.phi0, flags.phi0);
    take(base.n1, flags.n1);
    take(base.n2, flags.n2);
    take(base.n3, flags.n3);
    take(base.trials, flags.trials);
    take(base.seed, flags.seed);
    take(base.weights, flags.weights);
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw ValidationError(std::string(kSeedEnv) + " must be an unsigned integer");
    }
    return kDefaultSeed;
}

inline void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open output file '" + path + "'");
    return f;
}

namespace commands {

inline Json solve(const HardyConfiguration& c) { return to_json(solve_hardy(c)); }

inline Json probs(const HardyConfiguration& c, const std::string& route) {
    const auto s = solve_hardy(c);
    Json out = {{"spec", spec_json(c)}, {"route", route}};
    if (route == "closed-form") {
        out["tables"] = to_json(solution_tables(s));
    } else if (route == "oracle") {
        out["tables"] = to_json(oracle_tables(s.settings));
    } else {
        throw ValidationError("--route must be 'closed-form' or 'oracle'");
    }
    return out;
}

inline Json audit(const HardyConfiguration& c) {
    const auto s = solve_hardy(c);
    const auto tables = solution_tables(s);
    const auto oracle = oracle_tables(s.settings);
    double deviation = 0.0;
    for (SettingPair p : kSettingPairs)
        for (std::size_t k = 0; k < OutcomePair::kCount; ++k)
            deviation = std::max(deviation, std::abs(tables[p].probabilities[k] - oracle[p].probabilities[k]));

    Json out = {{"spec", spec_json(c)}, {"u", s.u}, {"hardy_probability", s.hardy_probability}};
    out["ch_postselected"] = to_json(ch_postselected(ch_probabilities(tables)));
    out["ch_total"] = to_json(ch_total(ch_probabilities(tables), absorption_probability(tables)));
    if (std::abs(1.0 - s.u * s.u) > kTolerance) {
        out["ch_simplified"] = to_json(ch_simplified_bound(c.u_alt, c.t1_alt, c.r2_alt, s.u));
    } else {
        out["ch_simplified"] = nullptr;
    }
    out["chsh_unnormalised"] = to_json(chsh(tables, false));
    out["chsh_normalised"] = to_json(chsh(tables, true));
    out["oracle_max_deviation"] = deviation;
    return out;
}

inline Json lhv() {
    return {{"vertex_audit", to_json(verify_ch_total_all(enumerate_strategies()))},
            {"postselection_exhibit", to_json(find_postselected_violation())}};
}

}  // namespace commands

/// Runs the CLI on already-split arguments (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hardy interferometer toolkit: solver, Bell audits, Monte Carlo and interaction-free measurement"};
    app.require_subcommand(1);

    ExperimentSpec flags;
    std::string config_path;
    auto add_config_flags = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "ExperimentSpec JSON file (or the output of `solve`)");
        sub->add_option("--q", flags.q, "t1' = r2' = q");
        sub->add_option("--q2", flags.q2, "t1' = r2' = sqrt(q2)");
        sub->add_option("--t1p", flags.t1p, "transmittivity t1' of the Phi1' splitter");
        sub->add_option("--r2p", flags.r2p, "reflectivity r2' of the Phi2' splitter");
        sub->add_option("--up", flags.up, "absorber transmission u' in Phi2' (default 1)");
        sub->add_option("--phi0", flags.phi0, "phase phi2' (default 0)");
        sub->add_option("--n1", flags.n1, "odd integer n1 (default 1)");
        sub->add_option("--n2", flags.n2, "odd integer n2 (default 1)");
        sub->add_option("--n3", flags.n3, "odd integer n3 (default 1)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve the Hardy constraints and print the solution");
    add_config_flags(solve_cmd);

    std::string route = "closed-form";
    auto* probs_cmd = app.add_subcommand("probs", "joint probability tables of the four configurations");
    add_config_flags(probs_cmd);
    probs_cmd->add_option("--route", route, "closed-form or oracle");

    auto* audit_cmd = app.add_subcommand("audit", "analytic CH, full-ensemble CH and CHSH reports");
    add_config_flags(audit_cmd);

    std::string events_path, summary_path, source = "hardy";
    unsigned threads = 1;
    double z = 4.0;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo coincidence records and empirical audit");
    add_config_flags(sample_cmd);
    sample_cmd->add_option("--trials,-n", flags.trials, "number of emitted pairs (default 100000)");
    sample_cmd->add_option("--seed", flags.seed, std::string("seed (default $") + kSeedEnv + " or 1)");
    sample_cmd->add_option("--weights", flags.weights, "four setting-pair weights")->expected(4);
    sample_cmd->add_option("--threads", threads, "worker threads");
    sample_cmd->add_option("--events", events_path, "write the event log CSV here");
    sample_cmd->add_option("--summary", summary_path, "write the JSON summary here instead of stdout");
    sample_cmd->add_option("--source", source, "hardy (quantum tables) or lhv-exhibit");
    sample_cmd->add_option("--z", z, "interval half-width in standard errors");

    auto* lhv_cmd = app.add_subcommand("lhv", "exhaustive check over the 36 deterministic local strategies");

    std::optional<double> ifm_u, ifm_r2;
    bool ifm_do_sweep = false;
    std::size_t u_steps = 21, r2_steps = 21;
    std::string out_path;
    auto* ifm_cmd = app.add_subcommand("ifm", "interaction-free measurement report or sweep CSV");
    ifm_cmd->add_option("--u", ifm_u, "absorber transmission u");
    ifm_cmd->add_option("--r2", ifm_r2, "reflectivity r2");
    ifm_cmd->add_flag("--sweep", ifm_do_sweep, "emit a CSV sweep over (u, r2)");
    ifm_cmd->add_option("--u-steps", u_steps, "grid points along u");
    ifm_cmd->add_option("--r2-steps", r2_steps, "grid points along r2");
    ifm_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    std::size_t resolution = 101;
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV over the feasible (t1', r2') grid");
    sweep_cmd->add_option("--resolution", resolution, "grid points per axis");
    sweep_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        ExperimentSpec spec;
        if (!config_path.empty()) spec = load_spec(config_path);
        overlay(spec, flags);

        if (solve_cmd->parsed()) {
            write_json(out, commands::solve(spec.configuration()));
        } else if (probs_cmd->parsed()) {
            write_json(out, commands::probs(spec.configuration(), route));
        } else if (audit_cmd->parsed()) {
            write_json(out, commands::audit(spec.configuration()));
        } else if (sample_cmd->parsed()) {
            const std::uint64_t n = spec.trials.value_or(100000);
            const std::uint64_t seed = spec.seed ? *spec.seed : default_seed();
            const SettingWeights weights = spec.setting_weights();
            ExperimentTables tables;
            Json summary;
            if (source == "hardy") {
                const auto c = spec.configuration();
                const auto s = solve_hardy(c);
                tables = solution_tables(s);
                summary["spec"] = spec_json(c);
                summary["analytic"] = {
                    {"ch_postselected_margin", ch_postselected(ch_probabilities(tables)).margin},
                    {"ch_total_margin", ch_total(ch_probabilities(tables), absorption_probability(tables)).margin},
                    {"chsh_abs_sum", chsh(tables, false).report.lhs}};
            } else if (source == "lhv-exhibit") {
                const auto exhibit = find_postselected_violation();
                tables = strategy_tables(exhibit.strategy);
                summary["strategy"] = to_json(exhibit.strategy);
            } else {
                throw ValidationError("--source must be 'hardy' or 'lhv-exhibit'");
            }
            const auto events = sample_events(tables, n, seed, weights, threads);
            if (!events_path.empty()) {
                auto f = open_output(events_path);
                write_events_csv(f, events);
            }
            summary["rng"] = std::string(kRngId);
            summary["seed"] = seed;
            summary["trials"] = n;
            summary["weights"] = weights;
            const auto est = estimate(events, false);
            Json by_pair = Json::object();
            for (SettingPair p : kSettingPairs) by_pair[std::string(pair_token(p))] = to_json(est[static_cast<std::size_t>(p)]);
            summary["estimates"] = by_pair;
            summary["audit"] = to_json(empirical_audit(events, z));
            if (summary_path.empty()) {
                write_json(out, summary);
            } else {
                auto f = open_output(summary_path);
                write_json(f, summary);
            }
        } else if (lhv_cmd->parsed()) {
            write_json(out, commands::lhv());
        } else if (ifm_cmd->parsed()) {
            if (ifm_do_sweep) {
                const auto rows = ifm_sweep(u_steps, r2_steps);
                if (out_path.empty()) {
                    write_ifm_csv(out, rows);
                } else {
                    auto f = open_output(out_path);
                    write_ifm_csv(f, rows);
                }
            } else {
                if (!ifm_u || !ifm_r2) throw ValidationError("ifm needs --u and --r2 (or --sweep)");
                write_json(out, to_json(ifm_efficiency(*ifm_u, *ifm_r2)));
            }
        } else if (sweep_cmd->parsed()) {
            const auto rows = hardy_sweep(resolution);
            if (out_path.empty()) {
                write_hardy_sweep_csv(out, rows);
            } else {
                auto f = open_output(out_path);
                write_hardy_sweep_csv(f, rows);
            }
        }
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const InsufficientDataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInsufficientData;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace hardy::cli

#endif  // HARDY_CLI_HPP
