#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swarmsync/cli/commands.hpp"
#include "swarmsync/cli/scenarios.hpp"

int main(int argc, char** argv)
{
    using namespace swarmsync::cli;

    CLI::App app{"swarmsync: heading synchronization of unit-speed agents with heterogeneous gains"};
    app.require_subcommand(1);

    CommandOptions opts;
    std::string config, out_dir, scenario;
    double target_deg = 0.0, eta = 0.0, dt = 0.0, t_max = 0.0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", config, "run configuration (JSON)");
        if (needs_config) c->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (default $SWARMSYNC_OUT or ./swarmsync_out)");
        sub->add_option("--target-deg", target_deg, "target common heading, degrees");
        sub->add_option("--eta", eta, "maximum fractional gain error, in [0, 1)");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--dt", dt, "integration step, seconds")->check(CLI::PositiveNumber);
        sub->add_option("--t-max", t_max, "simulated duration, seconds")->check(CLI::PositiveNumber);
    };

    auto* simulate = app.add_subcommand("simulate", "integrate the closed loop; write trajectory CSV + convergence JSON");
    auto* predict = app.add_subcommand("predict", "closed-form common heading for the configured gains");
    auto* reachable = app.add_subcommand("reachable", "is --target-deg reachable from the initial headings");
    auto* synthesize = app.add_subcommand("synthesize", "gains steering the group to --target-deg");
    auto* perturb = app.add_subcommand("perturb", "heading deviation bounds for gain errors up to --eta");
    auto* classify = app.add_subcommand("classify", "classify the configured headings as a critical point of U");
    auto* scen = app.add_subcommand("scenario", "run a built-in reference scenario");
    for (auto* sub : {simulate, predict, reachable, synthesize, perturb, classify}) add_common(sub, true);
    add_common(scen, false);
    scen->add_option("name", scenario, "scenario name")->required()->check(CLI::IsMember(scenario_names()));

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    opts.config = config;
    if (sub->count("--out")) opts.out = out_dir;
    if (sub->count("--target-deg")) opts.target_deg = target_deg;
    if (sub->count("--eta")) opts.eta = eta;
    if (sub->count("--seed")) opts.seed = seed;
    if (sub->count("--dt")) opts.dt = dt;
    if (sub->count("--t-max")) opts.t_max = t_max;

    if (sub == simulate) return run_simulate(opts, std::cout, std::cerr);
    if (sub == predict) return run_predict(opts, std::cout, std::cerr);
    if (sub == reachable) return run_reachable(opts, std::cout, std::cerr);
    if (sub == synthesize) return run_synthesize(opts, std::cout, std::cerr);
    if (sub == perturb) return run_perturb(opts, std::cout, std::cerr);
    if (sub == classify) return run_classify(opts, std::cout, std::cerr);
    return run_scenario(scenario, opts, std::cout, std::cerr);
}
