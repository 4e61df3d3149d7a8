#include "swarmsync/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "swarmsync/analysis.hpp"
#include "swarmsync/angles.hpp"
#include "swarmsync/cli/config.hpp"
#include "swarmsync/cli/output.hpp"
#include "swarmsync/cli/scenarios.hpp"
#include "swarmsync/serialize.hpp"

namespace swarmsync::cli {

using nlohmann::json;

namespace {

constexpr double kHeadingMatchTol = 1e-3;  // rad
constexpr std::size_t kMonteCarloSamples = 1000;

int guarded(const char* command, std::ostream& out, std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        out << json{{"error", {{"command", command}, {"message", e.what()}}}}.dump(2) << '\n';
        err << "swarmsync " << command << ": " << e.what() << '\n';
        return kExitError;
    }
}

RunConfig load_with_overrides(const CommandOptions& opts)
{
    if (opts.config.empty()) throw ConfigError("--config is required");
    RunConfig cfg = load_config(opts.config);
    if (opts.dt) cfg.dt = *opts.dt;
    if (opts.t_max) cfg.t_max = *opts.t_max;
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.target_deg) cfg.target_deg = *opts.target_deg;
    if (opts.eta) cfg.eta = *opts.eta;
    if (!(cfg.dt > 0.0) || !(cfg.t_max > cfg.dt)) throw ConfigError("need dt > 0 and t_max > dt");
    return cfg;
}

double require_target(const RunConfig& cfg)
{
    if (!cfg.target_deg) throw ConfigError("a target direction is required (--target-deg or config target_deg)");
    return deg_to_rad(*cfg.target_deg);
}

void warn_if_disconnected(const SimulationConfig& sim, std::ostream& err)
{
    if (const auto* g = std::get_if<InteractionGraph>(&sim.topology); g && !is_connected(*g))
        err << "warning: interaction graph is not connected; synchronization is not guaranteed\n";
}

/// Runs one simulation and writes trajectory.csv and convergence.json under dir.
SimulationResult run_and_write(const SimulationConfig& sim, const std::filesystem::path& dir)
{
    auto result = simulate(sim);
    std::ostringstream csv;
    write_trajectory_csv(csv, result.trajectory);
    write_file(dir / "trajectory.csv", csv.str());
    write_json_file(dir / "convergence.json", to_json(result.report));
    return result;
}

json angle_json(double rad) { return {{"rad", rad}, {"deg", rad_to_deg(rad)}}; }

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

double neighbor_law_bound(const GainVector& gains, const InteractionGraph& g)
{
    double bound = 0.0;
    for (std::size_t k = 0; k < gains.size(); ++k)
        bound = std::max(bound, static_cast<double>(g.degree(k)) * std::abs(gains[k]));
    return bound;
}

std::string describe(double value, const char* unit = "deg")
{
    std::ostringstream s;
    s << value << ' ' << unit;
    return s.str();
}

}  // namespace

std::filesystem::path resolve_out_dir(const CommandOptions& opts)
{
    if (opts.out) return *opts.out;
    if (const char* env = std::getenv("SWARMSYNC_OUT"); env && *env) return env;
    return "swarmsync_out";
}

int run_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("simulate", out, err, [&] {
        const auto cfg = load_with_overrides(opts);
        const auto sim = to_simulation_config(cfg);
        warn_if_disconnected(sim, err);
        const auto dir = resolve_out_dir(opts);
        const auto result = run_and_write(sim, dir);
        json j = to_json(result.report);
        j["trajectory_csv"] = (dir / "trajectory.csv").string();
        j["convergence_json"] = (dir / "convergence.json").string();
        out << j.dump(2) << '\n';
        return result.report.synchronized ? kExitOk : kExitNoSync;
    });
}

int run_predict(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("predict", out, err, [&] {
        const auto cfg = load_with_overrides(opts);
        const auto theta0 = initial_headings(cfg);
        const auto gains = resolve_gains(cfg);
        json j;
        j["command"] = "predict";
        j["rotated_frame"] = to_json(rotated_frame(theta0));
        if (gains.all_negative()) {
            const double theta_c = predict_direction(theta0, gains);
            j["method"] = "weighted_harmonic_mean";
            j["theta_c"] = angle_json(theta_c);
            j["convex_weights"] = convex_weights(gains);
        } else if (gains.size() == 2 && gains.sum() < 0.0) {
            j["method"] = "two_agent";
            j["theta_c"] = angle_json(two_agent_direction(theta0, gains));
        } else {
            throw AnalysisError("mixed-sign gains with n > 2 are exploratory; no closed-form prediction exists");
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int run_reachable(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("reachable", out, err, [&] {
        const auto cfg = load_with_overrides(opts);
        json j = to_json(is_reachable(initial_headings(cfg), require_target(cfg)));
        j["command"] = "reachable";
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int run_synthesize(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("synthesize", out, err, [&] {
        auto cfg = load_with_overrides(opts);
        const auto theta0 = initial_headings(cfg);
        const double target = require_target(cfg);
        const auto reach = is_reachable(theta0, target);

        GainVector gains;
        std::string method;
        if (reach.reachable_negative_gains) {
            gains = synthesize_gains(theta0, target, -1.0 / static_cast<double>(cfg.n));
            method = "negative_gains";
        } else if (cfg.n == 2) {
            gains = two_agent_gains(theta0, target);
            method = "two_agent";
        } else {
            throw AnalysisError("target lies outside the open initial cone; not reachable with negative gains");
        }

        const double check = gains.all_negative() ? predict_direction(theta0, gains) : two_agent_direction(theta0, gains);
        cfg.gains = gains.vector();
        cfg.regime = gains.all_negative() ? std::optional<std::string>("negative")
                                          : std::optional<std::string>("two_agent_sum");
        if (cfg.name.empty()) cfg.name = "synthesized";
        const auto path = resolve_out_dir(opts) / "synthesized_config.json";
        write_json_file(path, to_json(cfg));

        json j;
        j["command"] = "synthesize";
        j["method"] = method;
        j["gains"] = gains.vector();
        j["target"] = angle_json(wrap_pi(target));
        j["predicted"] = angle_json(check);
        j["config_path"] = path.string();
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int run_perturb(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("perturb", out, err, [&] {
        const auto cfg = load_with_overrides(opts);
        if (!cfg.eta) throw ConfigError("an error bound is required (--eta or config eta)");
        const auto theta0 = initial_headings(cfg);
        const auto bounds = perturbation_bounds(theta0, *cfg.eta);

        std::mt19937_64 rng(cfg.seed);
        const auto samples = sample_perturbed_directions(theta0, -1.0, *cfg.eta, kMonteCarloSamples, rng);
        std::size_t violations = 0;
        const double lo = bounds.mean_direction_hat - bounds.delta_lower;
        const double hi = bounds.mean_direction_hat + bounds.delta_upper;
        const double span = rotated_frame(theta0).span;
        for (double s : samples)
            if (!(s >= lo - 1e-12 && s <= hi + 1e-12 && s > 0.0 && s < span)) ++violations;

        json j = to_json(bounds);
        j["command"] = "perturb";
        j["monte_carlo"] = {{"samples", samples.size()}, {"seed", cfg.seed}, {"violations", violations}};
        out << j.dump(2) << '\n';
        return violations == 0 ? kExitOk : kExitCheckFailed;
    });
}

int run_classify(const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("classify", out, err, [&] {
        const auto cfg = load_with_overrides(opts);
        json j = to_json(classify_critical_point(initial_headings(cfg)));
        j["command"] = "classify";
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int run_scenario(const std::string& name, const CommandOptions& opts, std::ostream& out, std::ostream& err)
{
    return guarded("scenario", out, err, [&] {
        const auto spec = builtin_scenario(name);
        const auto root = resolve_out_dir(opts) / spec.name;

        std::map<std::string, SimulationResult> results;
        std::map<std::string, RunConfig> configs;
        json runs = json::array();
        bool all_synced = true;
        for (const auto& run : spec.runs) {
            RunConfig cfg = run.config;
            if (opts.dt) cfg.dt = *opts.dt;
            if (opts.t_max) cfg.t_max = *opts.t_max;
            if (opts.seed) cfg.seed = *opts.seed;
            const auto sim = to_simulation_config(cfg);
            const auto dir = root / run.label;
            write_json_file(dir / "config.json", to_json(cfg));
            auto result = run_and_write(sim, dir);
            all_synced = all_synced && result.report.synchronized;
            runs.push_back({{"label", run.label}, {"dir", dir.string()}, {"report", to_json(result.report)}});
            results.emplace(run.label, std::move(result));
            configs.emplace(run.label, cfg);
        }

        std::vector<Check> checks;
        auto heading_deg = [&](const std::string& label) {
            return rad_to_deg(results.at(label).report.final_heading_common);
        };
        auto t_sync = [&](const std::string& label) {
            const auto& t = results.at(label).report.t_sync;
            return t ? *t : std::numeric_limits<double>::infinity();
        };
        auto matches = [&](const std::string& label, double expected_rad, const std::string& what) {
            const double diff = std::abs(angle_diff(results.at(label).report.final_heading_common, expected_rad));
            checks.push_back({label + ": " + what, diff < kHeadingMatchTol,
                              "final " + describe(heading_deg(label)) + ", expected " +
                                  describe(rad_to_deg(expected_rad))});
        };

        if (name == "sim1" || name == "sim1-omega") {
            for (const auto& run : spec.runs) {
                const auto& cfg = configs.at(run.label);
                matches(run.label, predict_direction(initial_headings(cfg), resolve_gains(cfg)),
                        "final heading matches closed-form prediction");
            }
            if (name == "sim1") {
                for (const char* set : {"set1", "set2"}) {
                    const std::string ring = std::string(set) + "-ring", all = std::string(set) + "-complete";
                    checks.push_back({std::string(set) + ": ring converges slower than all-to-all",
                                      t_sync(ring) > t_sync(all),
                                      "t_sync ring " + describe(t_sync(ring), "s") + ", all-to-all " +
                                          describe(t_sync(all), "s")});
                }
            } else {
                for (const auto& run : spec.runs) {
                    const auto& r = results.at(run.label);
                    if (!r.report.t_sync) continue;
                    const std::size_t n = configs.at(run.label).n;
                    for (std::size_t k = 0; k < n; ++k) {
                        std::vector<std::complex<double>> pts;
                        for (const auto& s : r.trajectory.samples)
                            if (s.state.t >= *r.report.t_sync) pts.push_back(s.state.positions[k]);
                        const auto fit = fit_circle(pts);
                        checks.push_back({run.label + ": agent " + std::to_string(k + 1) + " circle radius 2 m",
                                          std::abs(fit.radius - 2.0) <= 0.02, describe(fit.radius, "m")});
                    }
                }
            }
        } else if (name == "sim2") {
            matches("a", deg_to_rad(120.0), "final heading 120 deg");
            matches("b", deg_to_rad(-120.0), "final heading -120 deg");
        } else if (name == "sim3-caps" || name == "sim3-sat") {
            for (const auto& run : spec.runs) {
                const auto& cfg = configs.at(run.label);
                const double peak = results.at(run.label).report.max_abs_control;
                const auto topology = resolve_topology(cfg);
                if (cfg.saturate || std::holds_alternative<AllToAll>(topology)) {
                    checks.push_back({run.label + ": |u_k| <= u_max", peak <= *cfg.u_max, describe(peak, "rad/s")});
                } else {
                    // The gain cap only bounds the all-to-all law; the neighbor law is bounded by deg_k |K_k|.
                    const double bound = neighbor_law_bound(resolve_gains(cfg), std::get<InteractionGraph>(topology));
                    checks.push_back({run.label + ": |u_k| <= max deg_k |K_k|", peak <= bound,
                                      describe(peak, "rad/s") + ", bound " + describe(bound, "rad/s") +
                                          (peak > *cfg.u_max ? ", exceeds u_max" : "")});
                }
            }
            if (name == "sim3-sat") {
                for (const char* topo : {"complete", "ring"}) {
                    const std::string sat = std::string("set2-sat-") + topo, cap = std::string("set4-") + topo;
                    checks.push_back({std::string(topo) + ": saturated set 2 syncs before capped set 4",
                                      t_sync(sat) < t_sync(cap),
                                      "t_sync saturated " + describe(t_sync(sat), "s") + ", capped " +
                                          describe(t_sync(cap), "s")});
                }
            }
        } else if (name == "fig6") {
            const double deg = heading_deg("set3-complete");
            checks.push_back({"set3-complete: final heading outside (-60, 60) deg", !(deg > -60.0 && deg < 60.0),
                              describe(deg)});
        }

        json jchecks = json::array();
        bool all_passed = true;
        for (const auto& c : checks) {
            jchecks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            all_passed = all_passed && c.passed;
        }
        json summary = {{"scenario", spec.name},     {"description", spec.description},
                        {"runs", runs},              {"checks", jchecks},
                        {"all_synchronized", all_synced}, {"all_checks_passed", all_passed}};
        write_json_file(root / "summary.json", summary);
        out << summary.dump(2) << '\n';
        if (!all_synced) return kExitNoSync;
        return all_passed ? kExitOk : kExitCheckFailed;
    });
}

}  // namespace swarmsync::cli
