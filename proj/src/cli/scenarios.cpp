#include "swarmsync/cli/scenarios.hpp"

namespace swarmsync::cli {

namespace {

RunConfig with(RunConfig base, const std::string& name, const std::string& gains, const std::string& topology)
{
    base.name = name;
    base.gains = gains;
    base.topology = topology;
    return base;
}

void add_pair(ScenarioSpec& spec, const RunConfig& base, const std::string& prefix, const std::string& gains)
{
    for (const char* topo : {"complete", "ring"}) {
        const std::string label = prefix + "-" + topo;
        spec.runs.push_back({label, with(base, spec.name + "/" + label, gains, topo)});
    }
}

}  // namespace

const std::vector<std::string>& scenario_names()
{
    static const std::vector<std::string> names = {"sim1", "sim1-omega", "sim2", "sim3-caps", "sim3-sat", "fig6"};
    return names;
}

RunConfig six_agent_base()
{
    RunConfig c;
    c.n = 6;
    c.theta0_deg = {-60.0, -45.0, -30.0, 30.0, 45.0, 60.0};
    c.positions0 = std::vector<std::array<double, 2>>{{-1, -2}, {4, -2}, {-1, 1}, {2, 3}, {0, 1}, {2, -6}};
    c.gains = std::string("set1");
    c.dt = 0.01;
    c.t_max = 100.0;
    c.record_stride = 10;
    return c;
}

ScenarioSpec builtin_scenario(const std::string& name)
{
    ScenarioSpec spec;
    spec.name = name;
    const RunConfig base = six_agent_base();

    if (name == "sim1") {
        spec.description = "six agents, omega0 = 0, gain sets 1 and 2, all-to-all and ring coupling";
        add_pair(spec, base, "set1", "set1");
        add_pair(spec, base, "set2", "set2");
    } else if (name == "sim1-omega") {
        spec.description = "six agents circling at omega0 = 0.5 rad/s, gain sets 1 and 2";
        RunConfig b = base;
        b.omega0 = 0.5;
        add_pair(spec, b, "set1", "set1");
        add_pair(spec, b, "set2", "set2");
    } else if (name == "sim2") {
        spec.description = "two agents at -60 and 60 degrees with mixed-sign gains";
        RunConfig b;
        b.n = 2;
        b.theta0_deg = {-60.0, 60.0};
        b.seed = 2;
        b.t_max = 100.0;
        b.record_stride = 10;
        b.regime = "two_agent_sum";
        RunConfig a = b;
        a.name = "sim2/a";
        a.gains = std::vector<double>{-3.0, 1.0};  // K_1 = -3 K_2
        RunConfig c = b;
        c.name = "sim2/b";
        c.gains = std::vector<double>{1.0, -3.0};  // K_2 = -3 K_1
        spec.runs.push_back({"a", a});
        spec.runs.push_back({"b", c});
    } else if (name == "sim3-caps") {
        spec.description = "gain set 4 kept under the cap for u_max = 0.1";
        RunConfig b = base;
        b.u_max = 0.1;
        b.regime = "cap";
        b.t_max = 1000.0;
        add_pair(spec, b, "set4", "set4");
    } else if (name == "sim3-sat") {
        spec.description = "gain set 2 with saturation at u_max = 0.1, against capped gain set 4";
        RunConfig sat = base;
        sat.u_max = 0.1;
        sat.saturate = true;
        sat.regime = "negative";
        add_pair(spec, sat, "set2-sat", "set2");
        RunConfig capped = base;
        capped.u_max = 0.1;
        capped.regime = "cap";
        capped.t_max = 1000.0;
        add_pair(spec, capped, "set4", "set4");
    } else if (name == "fig6") {
        spec.description = "gain set 3 (one positive gain), all-to-all; final heading leaves the initial cone";
        RunConfig b = base;
        b.name = "fig6/set3-complete";
        b.gains = std::string("set3");
        spec.runs.push_back({"set3-complete", b});
    } else {
        throw ConfigError("unknown scenario '" + name + "'");
    }
    return spec;
}

}  // namespace swarmsync::cli
