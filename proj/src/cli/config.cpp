#include "swarmsync/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "swarmsync/angles.hpp"

namespace swarmsync::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ConfigError("config field '" + field + "': " + what);
}

double number(const json& j, const std::string& field)
{
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "must be finite");
    return v;
}

std::size_t count(const json& j, const std::string& field)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(field, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<double> numbers(const json& j, const std::string& field)
{
    if (!j.is_array()) fail(field, "expected an array of numbers");
    std::vector<double> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

}  // namespace

RunConfig parse_config(const json& j)
{
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known = {
        "name", "n", "theta0_deg", "positions0", "gains", "omega0", "topology", "dt", "t_max",
        "u_max", "saturate", "regime", "record_stride", "seed", "jitter", "target_deg", "eta"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) fail(key, "unknown field");

    RunConfig c;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("name", "expected a string");
        c.name = j["name"].get<std::string>();
    }
    if (!j.contains("n")) fail("n", "missing");
    c.n = count(j["n"], "n");
    if (c.n < 2) fail("n", "need at least 2 agents");

    if (!j.contains("theta0_deg")) fail("theta0_deg", "missing");
    c.theta0_deg = numbers(j["theta0_deg"], "theta0_deg");
    if (c.theta0_deg.size() != c.n) fail("theta0_deg", "expected " + std::to_string(c.n) + " entries");

    if (j.contains("positions0")) {
        const auto& p = j["positions0"];
        if (!p.is_array() || p.size() != c.n) fail("positions0", "expected " + std::to_string(c.n) + " [x, y] pairs");
        std::vector<std::array<double, 2>> pos;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto xy = numbers(p[i], "positions0[" + std::to_string(i) + "]");
            if (xy.size() != 2) fail("positions0[" + std::to_string(i) + "]", "expected [x, y]");
            pos.push_back({xy[0], xy[1]});
        }
        c.positions0 = std::move(pos);
    }

    if (!j.contains("gains")) fail("gains", "missing");
    if (j["gains"].is_string()) {
        c.gains = j["gains"].get<std::string>();
    } else {
        auto g = numbers(j["gains"], "gains");
        if (g.size() != c.n) fail("gains", "expected " + std::to_string(c.n) + " entries");
        c.gains = std::move(g);
    }

    if (j.contains("omega0")) c.omega0 = number(j["omega0"], "omega0");

    if (j.contains("topology")) {
        const auto& t = j["topology"];
        if (t.is_string()) {
            const auto s = t.get<std::string>();
            if (s != "complete" && s != "ring") fail("topology", "expected \"complete\", \"ring\" or {\"edges\": [...]}");
            c.topology = s;
        } else if (t.is_object() && t.contains("edges") && t["edges"].is_array()) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < t["edges"].size(); ++i) {
                const auto& e = t["edges"][i];
                const std::string f = "topology.edges[" + std::to_string(i) + "]";
                if (!e.is_array() || e.size() != 2) fail(f, "expected [j, k]");
                edges.emplace_back(count(e[0], f), count(e[1], f));
            }
            c.topology = std::move(edges);
        } else {
            fail("topology", "expected \"complete\", \"ring\" or {\"edges\": [...]}");
        }
    }

    if (j.contains("dt")) c.dt = number(j["dt"], "dt");
    if (j.contains("t_max")) c.t_max = number(j["t_max"], "t_max");
    if (!(c.dt > 0.0)) fail("dt", "must be positive");
    if (!(c.t_max > c.dt)) fail("t_max", "must exceed dt");
    if (j.contains("u_max")) {
        c.u_max = number(j["u_max"], "u_max");
        if (!(*c.u_max > 0.0)) fail("u_max", "must be positive");
    }
    if (j.contains("saturate")) {
        if (!j["saturate"].is_boolean()) fail("saturate", "expected true or false");
        c.saturate = j["saturate"].get<bool>();
        if (c.saturate && !c.u_max) fail("saturate", "requires u_max");
    }
    if (j.contains("regime")) {
        if (!j["regime"].is_string()) fail("regime", "expected a string");
        const auto r = j["regime"].get<std::string>();
        if (r != "negative" && r != "two_agent_sum" && r != "cap")
            fail("regime", "expected \"negative\", \"two_agent_sum\" or \"cap\"");
        if (r == "cap" && !c.u_max) fail("regime", "\"cap\" requires u_max");
        c.regime = r;
    }
    if (j.contains("record_stride")) {
        c.record_stride = count(j["record_stride"], "record_stride");
        if (c.record_stride == 0) fail("record_stride", "must be at least 1");
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) fail("seed", "expected a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("jitter")) {
        if (!j["jitter"].is_boolean()) fail("jitter", "expected true or false");
        c.jitter = j["jitter"].get<bool>();
    }
    if (j.contains("target_deg")) c.target_deg = number(j["target_deg"], "target_deg");
    if (j.contains("eta")) c.eta = number(j["eta"], "eta");

    // Resolve eagerly so bad gain names and edge lists are reported at load time.
    try {
        resolve_gains(c);
        resolve_topology(c);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& c)
{
    json j;
    j["name"] = c.name;
    j["n"] = c.n;
    j["theta0_deg"] = c.theta0_deg;
    if (c.positions0) {
        json pos = json::array();
        for (const auto& p : *c.positions0) pos.push_back({p[0], p[1]});
        j["positions0"] = pos;
    }
    std::visit([&](const auto& g) { j["gains"] = g; }, c.gains);
    j["omega0"] = c.omega0;
    if (const auto* s = std::get_if<std::string>(&c.topology)) {
        j["topology"] = *s;
    } else {
        json edges = json::array();
        for (const auto& [a, b] : std::get<std::vector<Edge>>(c.topology)) edges.push_back({a, b});
        j["topology"] = {{"edges", edges}};
    }
    j["dt"] = c.dt;
    j["t_max"] = c.t_max;
    if (c.u_max) j["u_max"] = *c.u_max;
    j["saturate"] = c.saturate;
    if (c.regime) j["regime"] = *c.regime;
    j["record_stride"] = c.record_stride;
    j["seed"] = c.seed;
    j["jitter"] = c.jitter;
    if (c.target_deg) j["target_deg"] = *c.target_deg;
    if (c.eta) j["eta"] = *c.eta;
    return j;
}

GainVector resolve_gains(const RunConfig& c)
{
    if (const auto* name = std::get_if<std::string>(&c.gains)) return GainVector::named(*name, c.n);
    return GainVector(std::get<std::vector<double>>(c.gains));
}

HeadingVector initial_headings(const RunConfig& c) { return HeadingVector::from_degrees(c.theta0_deg); }

Topology resolve_topology(const RunConfig& c)
{
    if (const auto* s = std::get_if<std::string>(&c.topology)) {
        if (*s == "ring") return ring_graph(c.n);
        return AllToAll{};
    }
    return InteractionGraph(c.n, std::get<std::vector<Edge>>(c.topology));
}

SimulationConfig to_simulation_config(const RunConfig& c)
{
    SimulationConfig s;
    s.n = c.n;
    for (double d : c.theta0_deg) s.theta0.push_back(deg_to_rad(d));
    if (c.positions0) {
        for (const auto& p : *c.positions0) s.positions0.emplace_back(p[0], p[1]);
    } else {
        // Unspecified start positions are drawn from the seed; they never affect headings.
        std::mt19937_64 rng(c.seed ^ 0x5eed5eedULL);
        std::uniform_real_distribution<double> coord(-5.0, 5.0);
        for (std::size_t k = 0; k < c.n; ++k) {
            const double x = coord(rng);
            s.positions0.emplace_back(x, coord(rng));
        }
    }
    s.gains = resolve_gains(c);
    s.omega0 = c.omega0;
    s.topology = resolve_topology(c);
    s.dt = c.dt;
    s.t_max = c.t_max;
    if (c.saturate) s.saturation = c.u_max;
    s.record_stride = c.record_stride;
    s.jitter = c.jitter;
    s.seed = c.seed;
    if (c.regime) {
        if (*c.regime == "negative")
            s.required_regime = GainRegime::all_negative();
        else if (*c.regime == "two_agent_sum")
            s.required_regime = GainRegime::two_agent_sum();
        else
            s.required_regime = GainRegime::cap(*c.u_max);
    }
    return s;
}

}  // namespace swarmsync::cli
