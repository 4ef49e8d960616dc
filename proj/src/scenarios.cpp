// Copyright 2026 The odsim Authors
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

#include "odsim/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "odsim/errors.hpp"
#include "odsim/gaussian_state.hpp"
#include "odsim/measures.hpp"
#include "odsim/medium.hpp"
#include "odsim/oracle.hpp"
#include "odsim/parallel.hpp"
#include "odsim/symplectic.hpp"

namespace odsim {

namespace {

constexpr double kGamma12 = 1.0;
constexpr double kSampleLength = 1.0;
constexpr double kPhysicalityTolerance = 1e-9;

const std::vector<ModeLabel> kLight{"a", "b"};

constexpr std::size_t kObservableCount = 15;
using Observables = std::array<double, kObservableCount>;

const std::vector<std::string> kObservableNames{
    "var_xa_plus_xb", "var_xa_minus_xb", "var_pa_minus_pb", "var_pa_plus_pb", "var_x_B",
    "var_x_D",        "nbar_a",          "nbar_b",          "purity",         "logneg_ab",
    "logneg_BD",      "nbar_B",          "nbar_D",          "mean_x_B",       "mean_p_B"};

double combo(const GaussianState& s, Quadrature q, double w_b) {
    const std::array<QuadTerm, 2> terms{QuadTerm{"a", q, 1.0}, QuadTerm{"b", q, w_b}};
    return quad_combo_variance(s, terms);
}

void require_physical(const GaussianState& s, std::string_view where) {
    const auto nu = symplectic_eigenvalues(s);
    if (nu.front() < 0.5 - kPhysicalityTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "physicality violated at " << where << ": smallest symplectic eigenvalue " << nu.front();
        throw PhysicalityViolation(msg.str());
    }
}

/// Observables of a physical (a, b) state, with the Bogoliubov pair taken at ratio epsilon.
Observables observe(const GaussianState& physical, double epsilon, std::string_view where) {
    require_physical(physical, where);
    const GaussianState modes = apply_symplectic(physical, bogoliubov_symplectic(epsilon)).relabeled({"B", "D"});
    const std::array<ModeLabel, 1> a{"a"};
    const std::array<ModeLabel, 1> b{"b"};
    const std::array<ModeLabel, 1> bright{"B"};
    const std::array<ModeLabel, 1> dark{"D"};
    const auto& m = modes.mean();
    return {combo(physical, Quadrature::X, 1.0),
            combo(physical, Quadrature::X, -1.0),
            combo(physical, Quadrature::P, -1.0),
            combo(physical, Quadrature::P, 1.0),
            modes.cov()(0, 0),
            modes.cov()(2, 2),
            mean_photon_number(physical, "a"),
            mean_photon_number(physical, "b"),
            purity(physical),
            log_negativity(physical, a, b),
            log_negativity(modes, bright, dark),
            mean_photon_number(modes, "B"),
            mean_photon_number(modes, "D"),
            m(0),
            m(1)};
}

std::size_t observable_index(std::string_view name) {
    const auto it = std::find(kObservableNames.begin(), kObservableNames.end(), name);
    return static_cast<std::size_t>(it - kObservableNames.begin());
}

double value_of(const Observables& o, std::string_view name) { return o[observable_index(name)]; }

GaussianState input_state(const ScenarioConfig& config) {
    switch (config.input_state) {
        case InputKind::vacuum:
            return vacuum_state(kLight);
        case InputKind::tmsv:
            return tmsv_state(config.epsilon, "a", "b");
        case InputKind::coherent: {
            // Displace the Bogoliubov vacuum, then express it in the physical modes.
            const GaussianState modes = vacuum_state(kLight).displaced("a", config.alpha_B).displaced("b", config.alpha_D);
            return apply_symplectic(modes, bogoliubov_symplectic(config.epsilon).inverse());
        }
    }
    throw std::logic_error("unhandled input kind");
}

bool bright_mode_is_vacuum(const ScenarioConfig& config) {
    switch (config.input_state) {
        case InputKind::tmsv:
            return true;
        case InputKind::coherent:
            return config.alpha_B == std::complex<double>{};
        case InputKind::vacuum:
            return config.epsilon == 0.0;
    }
    return false;
}

PropagationGrid sample_grid(const ScenarioConfig& config, std::vector<double> omegas) {
    return PropagationGrid{kSampleLength, config.z_steps, std::move(omegas)};
}

void append_row(ScenarioReport& report, double sample, double z, double kappa_z, double omega,
                const Observables& obs) {
    std::vector<double> row{sample, z, kappa_z, omega};
    row.insert(row.end(), obs.begin(), obs.end());
    report.rows.push_back(std::move(row));
}

std::string where(std::string_view scenario, double z, double omega) {
    std::ostringstream s;
    s << scenario << " z=" << z << " omega=" << omega;
    return s.str();
}

/// Rows of one propagate() call, observing every snapshot.
std::vector<Observables> record(ScenarioReport& report, const std::vector<Snapshot>& snaps, double epsilon,
                                double kappa, double sample, double z_offset, std::string_view name) {
    std::vector<Observables> out;
    out.reserve(snaps.size());
    for (const auto& s : snaps) {
        const Observables obs = observe(s.state, epsilon, where(name, z_offset + s.z, s.omega));
        append_row(report, sample, z_offset + s.z, kappa * (z_offset + s.z), s.omega / kGamma12, obs);
        out.push_back(obs);
    }
    return out;
}

ScenarioReport new_report(const ScenarioConfig& config) {
    validate(config);
    ScenarioReport report;
    report.config = config;
    report.columns = propagation_columns();
    report.notes.push_back("units: gamma12 = 1, sample length = 1, kappa = kappa_L");
    report.notes.push_back("vacuum quadrature variance = 1/2");
    return report;
}

void add_terminal(ScenarioReport& report, const Observables& obs, std::string_view suffix) {
    for (std::string_view key : {"var_xa_plus_xb", "var_xa_minus_xb", "var_x_B", "var_x_D", "nbar_a", "nbar_b",
                                 "nbar_D", "purity", "logneg_ab", "logneg_BD"}) {
        report.terminal.emplace_back(std::string(key) + std::string(suffix), value_of(obs, key));
    }
}

Check equal(std::string name, double value, double expected, double tolerance) {
    return {std::move(name), value, expected, tolerance, Check::Kind::equal};
}
Check at_most(std::string name, double value, double bound, double tolerance = 0.0) {
    return {std::move(name), value, bound, tolerance, Check::Kind::at_most};
}
Check at_least(std::string name, double value, double bound) {
    return {std::move(name), value, bound, 0.0, Check::Kind::at_least};
}

struct CascadeRun {
    std::vector<Snapshot> first;
    std::vector<Snapshot> second;
};

CascadeRun cascade_at(const GaussianState& input, const EffectiveParams& eff, const ScenarioConfig& config,
                      double omega) {
    CascadeRun run;
    const PropagationGrid grid = sample_grid(config, {omega});
    run.first = propagate(input, eff, kGamma12, grid, DetuningProfile::none(), false, 1);
    run.second = propagate(run.first.back().state, eff, kGamma12, grid, DetuningProfile::none(), true, 1);
    return run;
}

double max_abs_entry(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

ScenarioConfig ScenarioConfig::defaults_for(ScenarioKind kind) {
    ScenarioConfig c;
    c.scenario = kind;
    switch (kind) {
        case ScenarioKind::preservation:
            c.kappa_L = 10.0;
            c.input_state = InputKind::tmsv;
            break;
        case ScenarioKind::single_sample:
        case ScenarioKind::cascade:
            c.kappa_L = 20.0;
            c.input_state = InputKind::vacuum;
            break;
        case ScenarioKind::gem:
            c.kappa_L = 200.0;
            c.z_steps = 2000;
            c.input_state = InputKind::vacuum;
            break;
        case ScenarioKind::memory_swap:
            c.kappa_L = 30.0;
            c.input_state = InputKind::vacuum;
            break;
    }
    return c;
}

void validate(const ScenarioConfig& config) {
    if (!(config.epsilon >= 0.0 && config.epsilon < 1.0)) {
        throw ConfigError("epsilon must be in [0,1)");
    }
    if (!(config.kappa_L >= 0.0) || !std::isfinite(config.kappa_L)) {
        throw ConfigError("kappa_L must be finite and non-negative");
    }
    if (config.z_steps < 10) {
        throw ConfigError("z_steps must be at least 10");
    }
    if (config.omega_over_gamma_list.empty()) {
        throw ConfigError("omega_over_gamma_list must not be empty");
    }
    for (double w : config.omega_over_gamma_list) {
        if (!std::isfinite(w)) {
            throw ConfigError("omega_over_gamma_list entries must be finite");
        }
    }
    if (config.scenario == ScenarioKind::gem && !(config.beta_norm > 0.0 && std::isfinite(config.beta_norm))) {
        throw ConfigError("beta_norm must be positive");
    }
    for (auto alpha : {config.alpha_B, config.alpha_D}) {
        if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
            throw ConfigError("coherent amplitudes must be finite");
        }
    }
}

const std::vector<ScenarioInfo>& scenario_catalog() {
    static const std::vector<ScenarioInfo> catalog{
        {ScenarioKind::preservation, "preservation",
         "optical dark state propagates through a lossy sample unchanged",
         "dark-state propagation without loss or evolution"},
        {ScenarioKind::single_sample, "single_sample",
         "vacuum input; bright mode absorbed, dark mode left thermal",
         "variance trajectories, first sample"},
        {ScenarioKind::cascade, "cascade",
         "two samples with inverted coupling ratio turn vacuum into two-mode squeezed vacuum",
         "variance trajectories across both samples"},
        {ScenarioKind::gem, "gem",
         "signal photon number in a sample with a linear two-photon detuning gradient",
         "gradient-echo photon-number trajectory"},
        {ScenarioKind::memory_swap, "memory_swap",
         "ideal light-atom swaps move the squeezing into the atomic coherences",
         "entanglement exchange between light and atoms"},
    };
    return catalog;
}

std::string_view scenario_name(ScenarioKind kind) {
    for (const auto& info : scenario_catalog()) {
        if (info.kind == kind) {
            return info.name;
        }
    }
    return "unknown";
}

std::optional<ScenarioKind> parse_scenario(std::string_view name) {
    for (const auto& info : scenario_catalog()) {
        if (info.name == name) {
            return info.kind;
        }
    }
    return std::nullopt;
}

std::string_view input_name(InputKind kind) {
    switch (kind) {
        case InputKind::vacuum:
            return "vacuum";
        case InputKind::tmsv:
            return "tmsv";
        case InputKind::coherent:
            return "coherent";
    }
    return "unknown";
}

std::optional<InputKind> parse_input(std::string_view name) {
    for (auto kind : {InputKind::vacuum, InputKind::tmsv, InputKind::coherent}) {
        if (input_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

bool Check::pass() const {
    switch (kind) {
        case Kind::equal:
            return std::abs(delta()) <= tolerance;
        case Kind::at_most:
            return value <= expected + tolerance;
        case Kind::at_least:
            return value >= expected - tolerance;
    }
    return false;
}

std::vector<double> ScenarioReport::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw std::out_of_range("no column named " + std::string(name));
    }
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(row[idx]);
    }
    return out;
}

std::optional<double> ScenarioReport::terminal_value(std::string_view name) const {
    for (const auto& [key, value] : terminal) {
        if (key == name) {
            return value;
        }
    }
    return std::nullopt;
}

bool ScenarioReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

double ScenarioReport::max_oracle_delta() const {
    double worst = 0.0;
    for (const auto& c : checks) {
        if (c.kind == Check::Kind::equal) {
            worst = std::max(worst, std::abs(c.delta()));
        }
    }
    return worst;
}

const std::vector<std::string>& propagation_columns() {
    static const std::vector<std::string> columns = [] {
        std::vector<std::string> c{"sample", "z", "kappa_z", "omega_over_gamma"};
        c.insert(c.end(), kObservableNames.begin(), kObservableNames.end());
        return c;
    }();
    return columns;
}

ScenarioReport run_preservation(const ScenarioConfig& config, unsigned threads) {
    ScenarioReport report = new_report(config);
    const EffectiveParams eff = EffectiveParams::from_dimensionless(config.epsilon, config.kappa_L);
    const GaussianState input = input_state(config);
    const auto snaps = propagate(input, eff, kGamma12, sample_grid(config, config.omega_over_gamma_list),
                                 DetuningProfile::none(), false, threads);
    const auto obs = record(report, snaps, config.epsilon, eff.kappa, 1.0, 0.0, "preservation");

    const std::size_t per_omega = config.z_steps + 1;
    double max_dev = 0.0;
    double worst_beer = 0.0;
    const double alpha_b = std::abs(config.alpha_B);
    for (std::size_t w = 0; w < config.omega_over_gamma_list.size(); ++w) {
        const Observables& first = obs[w * per_omega];
        for (std::size_t k = 0; k < per_omega; ++k) {
            const Observables& cur = obs[w * per_omega + k];
            for (std::size_t i = 0; i < kObservableCount; ++i) {
                max_dev = std::max(max_dev, std::abs(cur[i] - first[i]));
            }
            if (alpha_b > 0.0) {
                const double amp = std::hypot(value_of(cur, "mean_x_B"), value_of(cur, "mean_p_B")) /
                                   std::hypot(value_of(first, "mean_x_B"), value_of(first, "mean_p_B"));
                const double expected =
                    oracle::beer_amplitude(eff.kappa * snaps[w * per_omega + k].z, config.omega_over_gamma_list[w]);
                worst_beer = std::max(worst_beer, std::abs(amp - expected));
            }
        }
    }
    report.terminal.emplace_back("max_deviation", max_dev);
    add_terminal(report, obs.back(), "_terminal");

    if (bright_mode_is_vacuum(config)) {
        report.checks.push_back(at_most("max_deviation", max_dev, 0.0, 1e-9));
    } else {
        report.notes.push_back("bright mode is excited: the input is not a dark state and evolves");
    }
    if (alpha_b > 0.0) {
        report.terminal.emplace_back("bright_amplitude_delta", worst_beer);
        report.checks.push_back(equal("bright_amplitude_vs_beer", worst_beer, 0.0, 1e-12));
    }
    return report;
}

ScenarioReport run_single_sample(const ScenarioConfig& config, unsigned threads) {
    ScenarioReport report = new_report(config);
    const EffectiveParams eff = EffectiveParams::from_dimensionless(config.epsilon, config.kappa_L);
    const auto snaps = propagate(input_state(config), eff, kGamma12, sample_grid(config, config.omega_over_gamma_list),
                                 DetuningProfile::none(), false, threads);
    const auto obs = record(report, snaps, config.epsilon, eff.kappa, 1.0, 0.0, "single_sample");
    const std::size_t per_omega = config.z_steps + 1;
    const Observables& terminal = obs[per_omega - 1];
    add_terminal(report, terminal, "_terminal");

    if (config.input_state != InputKind::vacuum) {
        report.notes.push_back("oracle checks apply to vacuum input only");
        return report;
    }
    double worst_bright = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double expected =
            oracle::bright_variance(config.epsilon, eff.kappa * snaps[i].z, snaps[i].omega / kGamma12);
        worst_bright = std::max(worst_bright, std::abs(value_of(obs[i], "var_x_B") - expected));
    }
    report.checks.push_back(equal("bright_variance_max_delta", worst_bright, 0.0, 1e-9));

    const auto post = oracle::post_sample_variances(config.epsilon);
    const auto photons = oracle::single_sample_photon_numbers(config.epsilon);
    report.checks.push_back(equal("sum_var_terminal", value_of(terminal, "var_xa_plus_xb"), post.sum_var, 1e-6));
    report.checks.push_back(equal("diff_var_terminal", value_of(terminal, "var_xa_minus_xb"), post.diff_var, 1e-6));
    report.checks.push_back(
        equal("nbar_D_terminal", value_of(terminal, "nbar_D"), oracle::thermal_dark_mean(config.epsilon), 1e-6));
    report.checks.push_back(at_most("logneg_BD_terminal", value_of(terminal, "logneg_BD"), 0.0, 1e-6));
    report.checks.push_back(equal("nbar_a_terminal", value_of(terminal, "nbar_a"), photons.signal, 1e-6));
    report.checks.push_back(equal("nbar_b_terminal", value_of(terminal, "nbar_b"), photons.idler, 1e-6));
    return report;
}

ScenarioReport run_cascade(const ScenarioConfig& config, unsigned threads) {
    ScenarioReport report = new_report(config);
    const EffectiveParams eff = EffectiveParams::from_dimensionless(config.epsilon, config.kappa_L);
    const GaussianState input = input_state(config);

    std::vector<CascadeRun> runs(config.omega_over_gamma_list.size());
    parallel_for(runs.size(), resolve_thread_count(threads), [&](std::size_t i) {
        runs[i] = cascade_at(input, eff, config, config.omega_over_gamma_list[i] * kGamma12);
    });

    Observables midpoint{};
    Observables terminal{};
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto first = record(report, runs[i].first, config.epsilon, eff.kappa, 1.0, 0.0, "cascade");
        const auto second = record(report, runs[i].second, config.epsilon, eff.kappa, 2.0, kSampleLength, "cascade");
        if (i == 0) {
            midpoint = first.back();
            terminal = second.back();
        }
    }
    add_terminal(report, midpoint, "_midpoint");
    add_terminal(report, terminal, "_terminal");
    report.terminal.emplace_back("sum_var_terminal", value_of(terminal, "var_xa_plus_xb"));
    report.terminal.emplace_back("diff_var_terminal", value_of(terminal, "var_xa_minus_xb"));

    if (config.input_state != InputKind::vacuum) {
        report.notes.push_back("oracle checks apply to vacuum input only");
        return report;
    }
    const auto od = oracle::od_variances(config.epsilon);
    const auto mid_photons = oracle::single_sample_photon_numbers(config.epsilon);
    const double n_tmsv = oracle::tmsv_photon_number(config.epsilon);
    report.checks.push_back(equal("sum_var_terminal", value_of(terminal, "var_xa_plus_xb"), od.sum_var, 1e-6));
    report.checks.push_back(equal("diff_var_terminal", value_of(terminal, "var_xa_minus_xb"), od.diff_var, 1e-6));
    report.checks.push_back(at_least("purity_terminal", value_of(terminal, "purity"), 1.0 - 1e-6));
    report.checks.push_back(equal("logneg_ab_terminal", value_of(terminal, "logneg_ab"),
                                  oracle::tmsv_log_negativity(config.epsilon), 1e-6));
    report.checks.push_back(equal("nbar_a_terminal", value_of(terminal, "nbar_a"), n_tmsv, 1e-6));
    report.checks.push_back(equal("nbar_b_terminal", value_of(terminal, "nbar_b"), n_tmsv, 1e-6));
    report.checks.push_back(equal("nbar_a_midpoint", value_of(midpoint, "nbar_a"), mid_photons.signal, 1e-6));
    report.checks.push_back(equal("nbar_b_midpoint", value_of(midpoint, "nbar_b"), mid_photons.idler, 1e-6));
    return report;
}

namespace {

/// Signal photon number along a gradient sample at one probe frequency.
std::vector<Snapshot> gem_trajectory(const ScenarioConfig& config, std::size_t z_steps, double omega,
                                     unsigned threads) {
    const EffectiveParams eff = EffectiveParams::from_dimensionless(config.epsilon, config.kappa_L);
    const double beta = eff.kappa * kGamma12 / config.beta_norm;
    PropagationGrid grid{kSampleLength, z_steps, {omega}};
    return propagate(input_state(config), eff, kGamma12, grid, DetuningProfile::linear(beta, 0.5 * kSampleLength),
                     false, threads);
}

}  // namespace

ScenarioReport run_gem(const ScenarioConfig& config, unsigned threads) {
    ScenarioReport report = new_report(config);
    const EffectiveParams eff = EffectiveParams::from_dimensionless(config.epsilon, config.kappa_L);
    const double beta = eff.kappa * kGamma12 / config.beta_norm;
    const auto snaps = propagate(input_state(config), eff, kGamma12, sample_grid(config, config.omega_over_gamma_list),
                                 DetuningProfile::linear(beta, 0.5 * kSampleLength), false, threads);
    const auto obs = record(report, snaps, config.epsilon, eff.kappa, 1.0, 0.0, "gem");
    report.notes.push_back("two-photon detuning beta (z - L/2) with beta = kappa gamma12 / beta_norm");

    // Checks use the first probe frequency.
    const std::size_t n = config.z_steps + 1;
    const double dz = kSampleLength / static_cast<double>(config.z_steps);
    std::vector<double> nbar(n);
    for (std::size_t k = 0; k < n; ++k) {
        nbar[k] = value_of(obs[k], "nbar_a");
    }
    double peak_before_center = 0.0;
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        peak = std::max(peak, nbar[k]);
        if (snaps[k].z < 0.5 * kSampleLength) {
            peak_before_center = std::max(peak_before_center, nbar[k]);
        }
    }
    double tail_slope = 0.0;
    const auto tail_start = static_cast<std::size_t>(std::floor(0.8 * static_cast<double>(config.z_steps)));
    for (std::size_t k = tail_start; k + 1 < n; ++k) {
        tail_slope = std::max(tail_slope, std::abs(nbar[k + 1] - nbar[k]) / dz);
    }

    // Same trajectory on a grid twice as fine, compared on the shared points.
    const auto fine = gem_trajectory(config, 2 * config.z_steps, config.omega_over_gamma_list.front(), threads);
    double refinement = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        refinement = std::max(refinement, std::abs(mean_photon_number(fine[2 * k].state, "a") - nbar[k]));
    }

    report.terminal.emplace_back("nbar_a_initial", nbar.front());
    report.terminal.emplace_back("nbar_a_peak_before_center", peak_before_center);
    report.terminal.emplace_back("nbar_a_peak", peak);
    report.terminal.emplace_back("nbar_a_plateau", nbar.back());
    report.terminal.emplace_back("tail_slope", tail_slope);
    report.terminal.emplace_back("slope_limit", 1e-4 * beta / kGamma12);
    report.terminal.emplace_back("refinement_delta", refinement);
    add_terminal(report, obs[n - 1], "_terminal");

    if (config.input_state != InputKind::vacuum) {
        report.notes.push_back("oracle checks apply to vacuum input only");
        return report;
    }
    report.checks.push_back(equal("nbar_a_initial", nbar.front(), 0.0, 1e-12));
    report.checks.push_back(at_least("nbar_a_peak_before_center", peak_before_center, 0.5));
    report.checks.push_back(
        at_most("nbar_a_peak", peak, oracle::max_dispersive_signal_photons(config.epsilon), 1e-9));
    report.checks.push_back(
        equal("nbar_a_plateau", nbar.back(), oracle::single_sample_photon_numbers(config.epsilon).signal, 1e-3));
    report.checks.push_back(at_most("tail_slope", tail_slope, 1e-4 * beta / kGamma12));
    report.checks.push_back(at_most("refinement_delta", refinement, 1e-3));
    return report;
}

ScenarioReport run_memory_swap(const ScenarioConfig& config, unsigned /*threads*/) {
    validate(config);
    ScenarioReport report;
    report.config = config;
    report.columns = {"stage",     "var_xa_plus_xb", "var_xa_minus_xb",    "var_pa_minus_pb", "var_pa_plus_pb",
                      "var_x_B",   "var_x_D",        "nbar_a",             "nbar_b",          "purity_light",
                      "logneg_ab", "logneg_BD",      "logneg_S1S2",        "logneg_light_atoms",
                      "purity_total"};
    report.notes.push_back("stage 0: input; stage 1: B swapped into S1; stage 2: D swapped into S2");
    report.notes.push_back("vacuum quadrature variance = 1/2");

    const SymplecticTransform to_modes = bogoliubov_symplectic(config.epsilon);
    const SymplecticTransform to_physical = to_modes.inverse();
    const GaussianState light = input_state(config);
    // Modes a, b carry (B, D) content between the two conversions.
    GaussianState modes = apply_symplectic(light.tensor(vacuum_state({"S1", "S2"})), to_modes);

    const std::array<ModeLabel, 2> light_modes{"a", "b"};
    const std::array<ModeLabel, 2> atoms{"S1", "S2"};
    const std::array<ModeLabel, 1> s1{"S1"};
    const std::array<ModeLabel, 1> s2{"S2"};
    GaussianState physical = light;
    for (int stage = 0; stage <= 2; ++stage) {
        if (stage == 1) {
            modes = swap_sample(modes, "a", "S1");
        } else if (stage == 2) {
            modes = swap_sample(modes, "b", "S2");
        }
        const GaussianState total = apply_symplectic(modes, to_physical);
        require_physical(total, "memory_swap stage " + std::to_string(stage));
        physical = total.reduced(light_modes);
        const Observables obs = observe(physical, config.epsilon, "memory_swap");
        report.rows.push_back({static_cast<double>(stage),
                               value_of(obs, "var_xa_plus_xb"),
                               value_of(obs, "var_xa_minus_xb"),
                               value_of(obs, "var_pa_minus_pb"),
                               value_of(obs, "var_pa_plus_pb"),
                               value_of(obs, "var_x_B"),
                               value_of(obs, "var_x_D"),
                               value_of(obs, "nbar_a"),
                               value_of(obs, "nbar_b"),
                               value_of(obs, "purity"),
                               value_of(obs, "logneg_ab"),
                               value_of(obs, "logneg_BD"),
                               log_negativity(total, s1, s2),
                               log_negativity(total, light_modes, atoms),
                               purity(total)});
    }
    const auto& last = report.rows.back();
    const auto col = [&](std::string_view name) {
        return last[static_cast<std::size_t>(std::find(report.columns.begin(), report.columns.end(), name) -
                                             report.columns.begin())];
    };
    report.terminal.emplace_back("logneg_S1S2_terminal", col("logneg_S1S2"));
    report.terminal.emplace_back("logneg_light_atoms_terminal", col("logneg_light_atoms"));
    report.terminal.emplace_back("sum_var_terminal", col("var_xa_plus_xb"));
    report.terminal.emplace_back("diff_var_terminal", col("var_xa_minus_xb"));
    report.terminal.emplace_back("purity_light_terminal", col("purity_light"));

    // Dissipative pipeline with the same optical depth per sample.
    const EffectiveParams eff = EffectiveParams::from_dimensionless(config.epsilon, config.kappa_L);
    const CascadeRun dissipative = cascade_at(light, eff, config, 0.0);
    const double pipeline_gap = max_abs_entry(dissipative.second.back().state.cov() - physical.cov());
    report.terminal.emplace_back("dissipative_cov_max_delta", pipeline_gap);

    if (config.input_state != InputKind::vacuum) {
        report.notes.push_back("oracle checks apply to vacuum input only");
        return report;
    }
    const double tmsv_gap = max_abs_entry(physical.cov() - tmsv_state(config.epsilon).cov());
    report.terminal.emplace_back("light_cov_vs_tmsv", tmsv_gap);
    report.checks.push_back(
        equal("logneg_S1S2_terminal", col("logneg_S1S2"), oracle::tmsv_log_negativity(config.epsilon), 1e-9));
    report.checks.push_back(at_most("logneg_light_atoms_terminal", col("logneg_light_atoms"), 0.0, 1e-9));
    report.checks.push_back(equal("light_cov_vs_tmsv", tmsv_gap, 0.0, 1e-9));
    report.checks.push_back(equal("dissipative_cov_max_delta", pipeline_gap, 0.0, 1e-6));
    return report;
}

ScenarioReport run_scenario(const ScenarioConfig& config, unsigned threads) {
    switch (config.scenario) {
        case ScenarioKind::preservation:
            return run_preservation(config, threads);
        case ScenarioKind::single_sample:
            return run_single_sample(config, threads);
        case ScenarioKind::cascade:
            return run_cascade(config, threads);
        case ScenarioKind::gem:
            return run_gem(config, threads);
        case ScenarioKind::memory_swap:
            return run_memory_swap(config, threads);
    }
    throw std::logic_error("unhandled scenario");
}

}  // namespace odsim
