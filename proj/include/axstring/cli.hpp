#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "axstring/axstring.hpp"

namespace axstring::cli {

inline constexpr const char* kToolName = "axstring";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, numeric_failure = 3 };

using nlohmann::json;

/// One named invariant check with its residual and tolerance.
struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    bool vacuous = false;
    std::string note;
};

inline json to_json(const Check& c) {
    json j{{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed},
           {"vacuous", c.vacuous}};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

inline json to_json(const DerivedConstants& c) {
    return {{"L", c.length},      {"v", c.speed},       {"gamma", c.gamma},
            {"L1", c.l1},         {"L2", c.l2},         {"T_v", c.period},
            {"T_tilde", c.two_sided_time}};
}

inline json to_json(const ObservabilityReport& r) {
    return {{"endpoint_mode", std::string(to_string(r.mode))},
            {"T", r.horizon},
            {"M", r.periods ? json(*r.periods) : json(nullptr)},
            {"integral", r.integral},
            {"left_integral", r.left_integral},
            {"right_integral", r.right_integral},
            {"energy0", r.energy0},
            {"identity_rhs", optional_json(r.identity_rhs)},
            {"identity_residual", optional_json(r.identity_residual)},
            {"inverse_constant_check", r.inverse_constant_check},
            {"inverse_check_required", r.inverse_check_required},
            {"direct_constant", r.direct_constant},
            {"direct_bound", r.direct_bound},
            {"direct_bound_check", r.direct_bound_check},
            {"velocity_ratio", optional_json(r.velocity_ratio)},
            {"vacuous", r.vacuous}};
}

inline json to_json(const oracle::CrossValidationReport& r) {
    return {{"samples", r.samples},
            {"seed", r.seed},
            {"horizon", r.horizon},
            {"max_series_vs_characteristics", optional_json(r.max_series_vs_characteristics)},
            {"max_series_vs_fd", optional_json(r.max_series_vs_fd)},
            {"max_characteristics_vs_fd", optional_json(r.max_characteristics_vs_fd)}};
}

/// Flags shared by every subcommand.
struct CommonOptions {
    std::string config;
    std::string out = "out";
    double tol = 1e-6;
    std::uint64_t seed = 0;
    std::ostream* diagnostics = &std::cerr;  ///< receives FAIL lines
};

/// Per-run state: output directory, checks and the manifest written last.
class Run {
public:
    Run(std::string subcommand, const CommonOptions& opt)
        : subcommand_(std::move(subcommand)), opt_(opt), out_(opt.out),
          start_(std::chrono::steady_clock::now()) {}

    io::OutputDir& out() { return out_; }
    const CommonOptions& options() const { return opt_; }

    void add_check(Check c) { checks_.push_back(std::move(c)); }
    const std::vector<Check>& checks() const { return checks_; }

    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    void write_json(const std::string& name, const json& j) { out_.write_text(name, j.dump(2) + "\n"); }

    /// Writes manifest.json (always the last file) and returns the exit code.
    int finish() {
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        json checks = json::array();
        for (const auto& c : checks_) checks.push_back(to_json(c));
        std::vector<std::string> files = out_.files();
        files.push_back("manifest.json");
        const json manifest{{"tool", kToolName},
                            {"version", kToolVersion},
                            {"subcommand", subcommand_},
                            {"config", opt_.config},
                            {"output_dir", opt_.out},
                            {"tol", opt_.tol},
                            {"seed", opt_.seed},
                            {"duration_seconds", seconds},
                            {"status", all_passed() ? "pass" : "fail"},
                            {"checks", checks},
                            {"files", files}};
        out_.write_text("manifest.json", manifest.dump(2) + "\n");
        for (const auto& c : checks_)
            if (!c.passed) *opt_.diagnostics << "FAIL " << c.name << " (residual " << c.residual << ", tolerance "
                                     << c.tolerance << ")\n";
        return all_passed() ? ok : check_failed;
    }

private:
    std::string subcommand_;
    CommonOptions opt_;
    io::OutputDir out_;
    std::vector<Check> checks_;
    std::chrono::steady_clock::time_point start_;
};

inline StringConfig require_config(const CommonOptions& opt) {
    if (opt.config.empty()) throw ConfigError("--config is required for this subcommand");
    return load_config(opt.config);
}

/// Relative check with a vacuous branch for zero reference values.
inline Check relative_check(std::string name, double value, double reference, double tol, bool vacuous) {
    Check c;
    c.name = std::move(name);
    c.tolerance = tol;
    c.vacuous = vacuous;
    c.residual = vacuous ? std::abs(value - reference) : std::abs(value - reference) / std::abs(reference);
    c.passed = c.residual <= tol;
    return c;
}

inline Check upper_check(std::string name, double residual, double tol, bool vacuous = false,
                         std::string note = {}) {
    return Check{std::move(name), residual, tol, residual <= tol, vacuous, std::move(note)};
}

/// Space-time grid of the moving interval: nt times in [0, t_end], nx points per time.
inline std::string field_csv(const SpectralSolution& sol, int nx, int nt, double t_end, double* max_slope_t0 = nullptr,
                             double* max_slope = nullptr) {
    if (nx < 2 || nt < 2) throw DomainError("grid needs at least 2 points in x and t");
    const auto& c = sol.constants;
    io::CsvBuilder csv({"x", "t", "phi", "phi_x", "phi_t"});
    double m0 = 0.0, m = 0.0;
    for (int k = 0; k < nt; ++k) {
        const double t = t_end * k / (nt - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = c.speed * t + c.length * i / (nx - 1);
            const auto s = eval_field(sol, x, t);
            csv.row({s.x, s.t, s.phi, s.phi_x, s.phi_t});
            m = std::max(m, std::abs(s.phi_x));
            // The t = 0 reference is the data itself: the truncated series overshoots
            // near the supports where the extended slope jumps.
            if (k == 0) m0 = std::max(m0, std::abs(sol.config.initial.phi0_x(x)));
        }
    }
    if (max_slope_t0) *max_slope_t0 = m0;
    if (max_slope) *max_slope = m;
    return csv.str();
}

inline std::string surface_script(const std::string& csv_name, const std::string& title) {
    std::string s;
    s += "# gnuplot script: surface views of phi, phi_x and phi_t over the moving interval\n";
    s += "set datafile separator ','\n";
    s += "set terminal pngcairo size 1500,450\n";
    s += "set output '" + csv_name.substr(0, csv_name.rfind('.')) + ".png'\n";
    s += "set multiplot layout 1,3 title '" + title + "'\n";
    s += "set xlabel 'x'\nset ylabel 't'\nset view 60,30\nunset key\n";
    s += "set palette rgb 33,13,10\n";
    s += "set title 'phi'\nsplot '" + csv_name + "' every ::1 using 1:2:3:3 with points pt 7 ps 0.2 palette\n";
    s += "set title 'phi_x'\nsplot '" + csv_name + "' every ::1 using 1:2:4:4 with points pt 7 ps 0.2 palette\n";
    s += "set title 'phi_t'\nsplot '" + csv_name + "' every ::1 using 1:2:5:5 with points pt 7 ps 0.2 palette\n";
    s += "unset multiplot\n";
    return s;
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_constants(const CommonOptions& opt) {
    const auto cfg = require_config(opt);
    Run run("constants", opt);
    const auto c = derive_constants(cfg);
    const double w = 1.0 - c.speed * c.speed;
    run.add_check(upper_check("constants_l1_gamma", std::abs(c.l1 * c.gamma - c.length) / c.length, 1e-15));
    run.add_check(upper_check("constants_l2", std::abs(c.l2 * (1.0 - c.speed) - 2.0 * c.length) / c.length, 1e-15));
    run.add_check(upper_check("constants_period", std::abs(c.period * w - 2.0 * c.length) / c.length, 1e-15));
    run.add_check(upper_check("constants_two_sided",
                              std::abs(c.two_sided_time * (1.0 - c.speed) - c.length) / c.length, 1e-15));
    run.write_json("constants.json", to_json(c));
    return run.finish();
}

inline int cmd_coeffs(const CommonOptions& opt) {
    const auto cfg = require_config(opt);
    Run run("coeffs", opt);
    const auto sol = solve(cfg);
    io::CsvBuilder csv({"n", "re_plus", "im_plus", "re_minus", "im_minus", "abs_diff"});
    for (int n : sol.coefficients.indices()) {
        const Complex p = sol.coefficients[n];
        const Complex m = sol.coefficients_minus[n];
        csv.row(n, {p.real(), p.imag(), m.real(), m.imag(), std::abs(p - m)});
    }
    run.out().write_text("coeffs.csv", csv.str());
    const double scale = std::max(1.0, cfg.initial.scale());
    run.add_check(upper_check("coefficient_formula_equivalence", sol.cross_check_residual, 1e-8 * scale));
    run.add_check(upper_check("conjugate_symmetry", sol.conjugate_residual(), 1e-8 * scale));
    return run.finish();
}

inline int cmd_simulate(const CommonOptions& opt, int nx, int nt, std::optional<double> t_end) {
    const auto cfg = require_config(opt);
    Run run("simulate", opt);
    const auto sol = solve(cfg);
    const double te = t_end.value_or(sol.constants.period);
    if (!(te > 0.0)) throw DomainError("--t-end must be > 0");
    run.out().write_text("simulate.csv", field_csv(sol, nx, nt, te));
    run.out().write_text("simulate.gp", surface_script("simulate.csv", "moving-interval solution"));
    return run.finish();
}

inline int cmd_energy(const CommonOptions& opt, int samples, std::optional<double> t_end) {
    const auto cfg = require_config(opt);
    Run run("energy", opt);
    const auto sol = solve(cfg);
    const double te = t_end.value_or(2.0 * sol.constants.period);
    const auto rep = energy_report(sol, uniform_times(te, samples), opt.tol);
    io::CsvBuilder csv({"t", "calE", "E", "spectral", "resid"});
    for (std::size_t i = 0; i < rep.times.size(); ++i)
        csv.row({rep.times[i], rep.cal_e[i], rep.e[i], rep.spectral, rep.residual_at(i)});
    run.out().write_text("energy.csv", csv.str());
    run.add_check(upper_check("energy_conservation", rep.residual_conservation, opt.tol, rep.vacuous));
    run.add_check(upper_check("energy_cross_identity", rep.residual_cross_identity, opt.tol, rep.vacuous));
    run.add_check(upper_check("energy_bounds", rep.bound_violations, 0.0, rep.vacuous));
    return run.finish();
}

inline int cmd_observe(const CommonOptions& opt, const std::string& endpoint, std::optional<int> periods,
                       std::optional<double> horizon) {
    const auto cfg = require_config(opt);
    if (periods && horizon) throw ConfigError("--periods and --horizon are mutually exclusive");
    Run run("observe", opt);
    const auto sol = solve(cfg);
    ObservabilityReport r;
    if (horizon) {
        const ObservationMode mode = endpoint == "left"    ? ObservationMode::left
                                     : endpoint == "right" ? ObservationMode::right
                                                           : ObservationMode::both;
        r = observe_horizon(sol, mode, *horizon, opt.tol);
    } else if (endpoint == "both") {
        if (periods) throw ConfigError("--periods applies to one endpoint only");
        r = observe_both_endpoints(sol, opt.tol);
    } else {
        r = observe_one_endpoint(sol, endpoint == "left" ? Endpoint::left : Endpoint::right, periods.value_or(1),
                                 opt.tol);
    }
    run.write_json("observe.json", to_json(r));
    if (r.identity_residual)
        run.add_check(upper_check("observability_identity", *r.identity_residual, opt.tol, r.vacuous));
    run.add_check(Check{"direct_inequality", r.direct_constant, r.direct_bound, r.direct_bound_check, r.vacuous, {}});
    if (r.inverse_check_required)
        run.add_check(Check{"inverse_inequality", r.direct_constant,
                            4.0 / std::pow(1.0 - sol.constants.speed * sol.constants.speed, 2),
                            r.inverse_constant_check, r.vacuous, "residual is integral/calE(0); must be >= tolerance"});
    return run.finish();
}

inline int cmd_oracle(const CommonOptions& opt, const std::string& method, int samples, int nx, double cfl) {
    const auto cfg = require_config(opt);
    Run run("oracle", opt);
    const auto sol = solve(cfg);
    oracle::CrossValidationOptions o;
    o.method = method == "characteristics" ? oracle::OracleMethod::characteristics
               : method == "fd"            ? oracle::OracleMethod::fd
                                           : oracle::OracleMethod::both;
    o.samples = samples;
    o.seed = opt.seed;
    o.nx = nx;
    o.cfl = cfl;
    const auto r = oracle::cross_validate(sol, o);
    json j = to_json(r);
    j["method"] = method;
    j["nx"] = nx;
    j["cfl"] = cfl;
    j["n_max"] = cfg.n_max;
    run.write_json("oracle.json", j);
    return run.finish();
}

/// Canonical figure parameters: L = pi, phi0 = sin(x)/10, phi1 = 0, n_max = 40.
inline StringConfig figure_config(int figure) {
    const double pi = std::numbers::pi;
    const double v = figure == 4 ? 0.3 : figure == 5 ? 0.7 : 0.9;
    return StringConfig{pi, v, InitialData::sine_mode(pi, 0.1, 1), 40, QuadratureSpec{}};
}

inline int cmd_figures(CommonOptions opt, int figure, int nx, int nt) {
    if (figure < 4 || figure > 6) throw ConfigError("--figure must be 4, 5 or 6");
    Run run("figures", opt);
    const auto sol = solve(figure_config(figure));
    const std::string stem = "figure" + std::to_string(figure);
    double m0 = 0.0, m = 0.0;
    run.out().write_text(stem + ".csv", field_csv(sol, nx, nt, sol.constants.period, &m0, &m));
    char title[96];
    std::snprintf(title, sizeof title, "v = %.1f, one period T_v = %.4f", sol.constants.speed, sol.constants.period);
    run.out().write_text(stem + ".gp", surface_script(stem + ".csv", title));
    run.write_json(stem + ".json", json{{"figure", figure},
                                        {"constants", to_json(sol.constants)},
                                        {"nx", nx},
                                        {"nt", nt},
                                        {"max_abs_phi_x_t0", m0},
                                        {"max_abs_phi_x", m},
                                        {"slope_growth", m / m0}});
    if (figure == 6) {
        // The near-critical layer: phi_x must grow well beyond its initial maximum.
        run.add_check(Check{"layer_effect", m / m0, 5.0, m / m0 >= 5.0, false, "residual is the growth ratio; must be >= 5"});
    }
    return run.finish();
}

/// The full invariant suite on one configuration.
inline std::vector<Check> validation_checks(const StringConfig& cfg, double tol, std::uint64_t seed) {
    std::vector<Check> out;
    const auto sol = solve(cfg);
    const auto& c = sol.constants;
    const double v = c.speed;
    const double scale = std::max(1.0, cfg.initial.scale());
    const bool zero = cfg.initial.is_zero();

    out.push_back(upper_check("constants_identities",
                              std::max({std::abs(c.l1 * c.gamma - c.length), std::abs(c.l2 * (1.0 - v) - 2.0 * c.length),
                                        std::abs(c.period * (1.0 - v * v) - 2.0 * c.length),
                                        std::abs(c.two_sided_time * (1.0 - v) - c.length)}) /
                                  c.length,
                              1e-14));
    out.push_back(upper_check("coefficient_formula_equivalence", sol.cross_check_residual, 1e-8 * scale, zero));
    out.push_back(upper_check("conjugate_symmetry", sol.conjugate_residual(), 1e-8 * scale, zero));

    const auto ps = parseval_sum(sol);
    out.push_back(relative_check("parseval_integral_forms", ps.minus_integral, ps.plus_integral, 1e-8, zero));

    // Series: Dirichlet traces, total derivative, periodicity, imaginary residue.
    double dirichlet = 0.0, total = 0.0, slope_max = 0.0, imag = 0.0;
    for (double t : uniform_times(c.period, 64)) {
        for (double xb : {0.0, c.length}) {
            const auto s = eval_field(sol, xb + v * t, t);
            dirichlet = std::max(dirichlet, std::abs(s.phi));
            total = std::max(total, std::abs(s.phi_t + v * s.phi_x));
            slope_max = std::max(slope_max, std::abs(s.phi_x));
            imag = std::max(imag, s.imag_residual);
        }
    }
    out.push_back(upper_check("dirichlet_traces", dirichlet, 1e-8 * scale, zero));
    out.push_back(upper_check("boundary_total_derivative", zero ? total : total / slope_max, tol, zero,
                              "max |phi_t + v phi_x| at the supports relative to max |phi_x|"));
    const auto pts = oracle::slab_points(c, c.period, 100, seed);
    out.push_back(upper_check("series_periodicity", check_periodicity(sol, pts), 1e-12 * scale, zero));
    out.push_back(upper_check("series_imaginary_residue", imag, 1e-10 * scale, zero));

    // Energy.
    const auto rep = energy_report(sol, uniform_times(2.0 * c.period, 64), tol);
    const auto e0 = energy_at(sol, 0.0);
    out.push_back(upper_check("energy_conservation", rep.residual_conservation, tol, rep.vacuous));
    out.push_back(relative_check("energy_spectral_at_zero", e0.cal_e, rep.spectral, tol, rep.vacuous));
    out.push_back(upper_check("energy_cross_identity", rep.residual_cross_identity, tol, rep.vacuous));
    out.push_back(upper_check("energy_bounds", rep.bound_violations, 0.0, rep.vacuous, "count of violating times"));
    {
        const double h = c.period / 1024.0;
        double rate = 0.0;
        for (double t : {0.25 * c.period, 0.5 * c.period, 0.75 * c.period})
            rate = std::max(rate, std::abs(energy_rate(sol, t, h)));
        out.push_back(upper_check("energy_rate", rep.vacuous ? rate : rate / rep.spectral, 1e-5, rep.vacuous,
                                  "|d calE/dt| / calE by centered differences"));
    }
    {
        double drift = 0.0;
        for (double t : {0.1 * c.period, 0.4 * c.period, 0.8 * c.period})
            drift = std::max(drift, std::abs(energy_at(sol, t + c.period).e - energy_at(sol, t).e));
        out.push_back(upper_check("energy_usual_periodicity", rep.vacuous ? drift : drift / rep.spectral, tol,
                                  rep.vacuous));
    }

    // Observability.
    for (auto e : {Endpoint::left, Endpoint::right}) {
        const auto r = observe_one_endpoint(sol, e, 1, tol);
        out.push_back(upper_check("observe_" + std::string(to_string(e)) + "_identity", *r.identity_residual, tol,
                                  r.vacuous));
        out.push_back(Check{"observe_" + std::string(to_string(e)) + "_inequalities", r.direct_constant,
                            r.direct_bound, r.passed(), r.vacuous, "residual is integral/calE(0)"});
    }
    {
        const auto r = observe_both_endpoints(sol, tol);
        out.push_back(upper_check("observe_both_identity", *r.identity_residual, tol, r.vacuous));
    }
    if (v > 0.0) {
        const auto r = velocity_trace_equivalent(sol, Endpoint::left, 1, tol);
        const double ratio = r.velocity_ratio.value_or(0.0);
        out.push_back(upper_check("velocity_trace_ratio", r.vacuous ? 0.0 : std::abs(ratio - v * v) / (v * v), tol,
                                  r.vacuous, "int phi_t^2 / int phi_x^2 against v^2"));
    } else {
        out.push_back(Check{"velocity_trace_ratio", 0.0, tol, true, true, "not defined at v = 0"});
    }

    // Independent oracle.
    {
        oracle::CrossValidationOptions o;
        o.method = oracle::OracleMethod::characteristics;
        o.samples = 50;
        o.seed = seed;
        const auto r = oracle::cross_validate(sol, o);
        out.push_back(upper_check("oracle_characteristics", *r.max_series_vs_characteristics, 1e-3 * scale, zero,
                                  "series truncation bounds the agreement"));
    }
    return out;
}

inline int cmd_validate(const CommonOptions& opt) {
    const auto cfg = require_config(opt);
    Run run("validate", opt);
    json report = json::array();
    for (auto& c : validation_checks(cfg, opt.tol, opt.seed)) {
        report.push_back(to_json(c));
        run.add_check(std::move(c));
    }
    run.write_json("validate.json", json{{"n_max", cfg.n_max},
                                          {"constants", to_json(derive_constants(cfg))},
                                          {"initial", std::string(cfg.initial.kind())},
                                          {"checks", report}});
    return run.finish();
}

// ---------------------------------------------------------------------------

/// Parse argv and dispatch. Never throws; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& err = std::cerr) {
    CLI::App app{"Series solution of the wave equation on a uniformly moving interval"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonOptions common;
    common.diagnostics = &err;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "JSON configuration file");
        sub->add_option("--out", common.out, "output directory")->capture_default_str();
        sub->add_option("--tol", common.tol, "relative tolerance")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "seed for sampled checks")->capture_default_str();
    };

    auto* constants = app.add_subcommand("constants", "derived constants of (L, v)");
    add_common(constants);
    auto* coeffs = app.add_subcommand("coeffs", "coefficient table from both formulas");
    add_common(coeffs);

    auto* simulate = app.add_subcommand("simulate", "field samples on a space-time grid");
    add_common(simulate);
    int sim_nx = 200, sim_nt = 200;
    std::optional<double> sim_t_end;
    simulate->add_option("--nx", sim_nx, "points across the interval")->capture_default_str()->check(CLI::Range(2, 100000));
    simulate->add_option("--nt", sim_nt, "time levels")->capture_default_str()->check(CLI::Range(2, 100000));
    simulate->add_option("--t-end", sim_t_end, "final time (default T_v)");

    auto* energy = app.add_subcommand("energy", "energy functionals over time");
    add_common(energy);
    int energy_samples = 64;
    std::optional<double> energy_t_end;
    energy->add_option("--samples", energy_samples, "number of times")->capture_default_str()->check(CLI::Range(1, 1000000));
    energy->add_option("--t-end", energy_t_end, "final time (default 2 T_v)");

    auto* observe = app.add_subcommand("observe", "boundary observation integrals");
    add_common(observe);
    std::string obs_endpoint = "left";
    std::optional<int> obs_periods;
    std::optional<double> obs_horizon;
    observe->add_option("--endpoint", obs_endpoint, "left|right|both")
        ->capture_default_str()
        ->check(CLI::IsMember({"left", "right", "both"}));
    observe->add_option("--periods", obs_periods, "period count M (one endpoint)")->check(CLI::PositiveNumber);
    observe->add_option("--horizon", obs_horizon, "arbitrary horizon T")->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "cross-validate against independent solvers");
    add_common(oracle_cmd);
    std::string oracle_method = "both";
    int oracle_samples = 200, oracle_nx = 1024;
    double oracle_cfl = 0.5;
    oracle_cmd->add_option("--method", oracle_method, "characteristics|fd|both")
        ->capture_default_str()
        ->check(CLI::IsMember({"characteristics", "fd", "both"}));
    oracle_cmd->add_option("--samples", oracle_samples, "sample points")->capture_default_str()->check(CLI::Range(1, 10000000));
    oracle_cmd->add_option("--nx", oracle_nx, "FD cells")->capture_default_str()->check(CLI::Range(32, 1 << 20));
    oracle_cmd->add_option("--cfl", oracle_cfl, "FD time-step factor in (0, 0.5]")->capture_default_str();

    auto* figures = app.add_subcommand("figures", "canonical space-time figures over one period");
    add_common(figures);
    int figure = 4, fig_nx = 200, fig_nt = 200;
    figures->add_option("--figure", figure, "4 (v=0.3), 5 (v=0.7) or 6 (v=0.9)")->required()->check(CLI::IsMember({4, 5, 6}));
    figures->add_option("--nx", fig_nx, "points across the interval")->capture_default_str()->check(CLI::Range(2, 100000));
    figures->add_option("--nt", fig_nt, "time levels")->capture_default_str()->check(CLI::Range(2, 100000));

    auto* validate_cmd = app.add_subcommand("validate", "run every invariant check");
    add_common(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (*constants) return cmd_constants(common);
        if (*coeffs) return cmd_coeffs(common);
        if (*simulate) return cmd_simulate(common, sim_nx, sim_nt, sim_t_end);
        if (*energy) return cmd_energy(common, energy_samples, energy_t_end);
        if (*observe) return cmd_observe(common, obs_endpoint, obs_periods, obs_horizon);
        if (*oracle_cmd) return cmd_oracle(common, oracle_method, oracle_samples, oracle_nx, oracle_cfl);
        if (*figures) return cmd_figures(common, figure, fig_nx, fig_nt);
        if (*validate_cmd) return cmd_validate(common);
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const SolverConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const EvaluationError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return numeric_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return numeric_failure;
    }
    return usage_error;
}

}  // namespace axstring::cli
