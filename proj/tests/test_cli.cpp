#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "swarmsync/cli/commands.hpp"
#include "swarmsync/cli/config.hpp"
#include "swarmsync/cli/output.hpp"
#include "swarmsync/cli/scenarios.hpp"

using namespace swarmsync;
using namespace swarmsync::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("swarmsync_test_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

json sim1_json()
{
    return json::parse(R"({
        "name": "sim1-set2",
        "n": 6,
        "theta0_deg": [-60, -45, -30, 30, 45, 60],
        "positions0": [[-1, -2], [4, -2], [-1, 1], [2, 3], [0, 1], [2, -6]],
        "gains": "set2",
        "topology": "complete",
        "record_stride": 10,
        "seed": 3
    })");
}

fs::path write_config(const fs::path& dir, const json& j, const std::string& name = "config.json")
{
    const auto p = dir / name;
    std::ofstream(p) << j.dump(2);
    return p;
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_error(json j)
{
    try {
        parse_config(j);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

int run_exe(const std::string& args)
{
    const int status = std::system((std::string(SWARMSYNC_EXE) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing")
{
    const auto c = parse_config(sim1_json());
    CHECK(c.n == 6);
    CHECK(std::get<std::string>(c.gains) == "set2");
    CHECK(resolve_gains(c).vector() == GainVector::named("set2", 6).vector());
    CHECK(std::holds_alternative<AllToAll>(resolve_topology(c)));
    CHECK(initial_headings(c)[0] == doctest::Approx(-3.14159265358979323846 / 3));

    auto j = sim1_json();
    j["topology"] = "ring";
    CHECK(std::get<InteractionGraph>(resolve_topology(parse_config(j))) == ring_graph(6));
    j["topology"] = json::parse(R"({"edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]]})");
    CHECK(std::get<InteractionGraph>(resolve_topology(parse_config(j))).edges().size() == 5);

    const auto sim = to_simulation_config(c);
    CHECK(sim.positions0[1] == std::complex<double>(4, -2));
    CHECK_FALSE(sim.saturation.has_value());
}

TEST_CASE("config errors name the offending field")
{
    auto bad = [](auto mutate) {
        auto j = sim1_json();
        mutate(j);
        return config_error(j);
    };
    CHECK(bad([](json& j) { j.erase("n"); }).find("'n'") != std::string::npos);
    CHECK(bad([](json& j) { j["theta0_deg"] = {1, 2}; }).find("'theta0_deg'") != std::string::npos);
    CHECK(bad([](json& j) { j["gains"] = {-1, -1}; }).find("'gains'") != std::string::npos);
    CHECK(bad([](json& j) { j["gains"] = "set7"; }).find("set7") != std::string::npos);
    CHECK(bad([](json& j) { j["gains"] = {-1, 0, -1, -1, -1, -1}; }).find("zero") != std::string::npos);
    CHECK(bad([](json& j) { j["topology"] = "star"; }).find("'topology'") != std::string::npos);
    CHECK(bad([](json& j) { j["topology"] = json::parse(R"({"edges": [[0, 0]]})"); }).find("self") !=
          std::string::npos);
    CHECK(bad([](json& j) { j["dt"] = -1; }).find("'dt'") != std::string::npos);
    CHECK(bad([](json& j) { j["saturate"] = true; }).find("'saturate'") != std::string::npos);
    CHECK(bad([](json& j) { j["colour"] = "red"; }).find("'colour'") != std::string::npos);
    CHECK(bad([](json& j) { j["positions0"] = {{0, 0}}; }).find("'positions0'") != std::string::npos);
    CHECK(bad([](json& j) { j["regime"] = "cap"; }).find("'regime'") != std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("config round trip is idempotent")
{
    auto j = sim1_json();
    j["u_max"] = 0.1;
    j["saturate"] = true;
    j["target_deg"] = 10.0;
    j["topology"] = json::parse(R"({"edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]})");
    const auto once = parse_config(j);
    const auto twice = parse_config(to_json(once));
    CHECK(once == twice);
    CHECK(to_json(once) == to_json(twice));
    for (const auto& name : scenario_names())
        for (const auto& run : builtin_scenario(name).runs) CHECK(parse_config(to_json(run.config)) == run.config);
}

TEST_CASE("number formatting round trips")
{
    for (double v : {0.0, -1.5, 1e-300, 3.14159265358979323846, 1.0 / 3.0}) CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("trajectory CSV layout")
{
    auto c = parse_config(sim1_json());
    c.t_max = 2.0;
    const auto r = simulate(to_simulation_config(c));
    std::ostringstream out;
    write_trajectory_csv(out, r.trajectory);
    std::istringstream in(out.str());
    std::string header, line;
    std::getline(in, header);
    CHECK(header.rfind("t,theta_1,", 0) == 0);
    CHECK(header.find("x_6,") != std::string::npos);
    CHECK(header.find("y_6,u_1,") != std::string::npos);
    CHECK(header.find(",p_mag,p_psi,U,WL,conserved") != std::string::npos);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == std::count(header.begin(), header.end(), ','));
    }
    CHECK(rows == r.trajectory.samples.size());
    CHECK(rows == 21);
}

TEST_CASE("identical configs give byte-identical outputs")
{
    TempDir tmp;
    auto j = sim1_json();
    j.erase("positions0");  // exercise seeded random placement
    j["t_max"] = 10.0;
    const auto cfg = write_config(tmp.path, j);
    std::ostringstream o, e;
    CommandOptions opts;
    opts.config = cfg;
    opts.out = tmp.path / "a";
    run_simulate(opts, o, e);
    opts.out = tmp.path / "b";
    run_simulate(opts, o, e);
    const auto a = read_file(tmp.path / "a" / "trajectory.csv");
    CHECK_FALSE(a.empty());
    CHECK(a == read_file(tmp.path / "b" / "trajectory.csv"));
    opts.seed = 99;
    opts.out = tmp.path / "c";
    run_simulate(opts, o, e);
    CHECK(a != read_file(tmp.path / "c" / "trajectory.csv"));
}

TEST_CASE("simulate exit codes and outputs")
{
    TempDir tmp;
    std::ostringstream out, err;
    CommandOptions opts;
    opts.config = write_config(tmp.path, sim1_json());
    opts.out = tmp.path / "run";
    CHECK(run_simulate(opts, out, err) == kExitOk);
    const auto report = json::parse(read_file(tmp.path / "run" / "convergence.json"));
    CHECK(report["synchronized"] == true);
    CHECK(report["final_heading_common_deg"].get<double>() == doctest::Approx(22.142857).epsilon(1e-6));
    CHECK(fs::exists(tmp.path / "run" / "trajectory.csv"));

    opts.t_max = 5.0;
    CHECK(run_simulate(opts, out, err) == kExitNoSync);

    std::ostringstream eout;
    auto bad = sim1_json();
    bad["n"] = "six";
    opts.config = write_config(tmp.path, bad, "bad.json");
    CHECK(run_simulate(opts, eout, err) == kExitError);
    const auto ej = json::parse(eout.str());
    CHECK(ej["error"]["command"] == "simulate");
    CHECK(ej["error"]["message"].get<std::string>().find("'n'") != std::string::npos);
}

TEST_CASE("analysis commands")
{
    TempDir tmp;
    const auto cfg = write_config(tmp.path, sim1_json());
    CommandOptions opts;
    opts.config = cfg;
    opts.out = tmp.path;

    std::ostringstream p, e;
    CHECK(run_predict(opts, p, e) == kExitOk);
    CHECK(json::parse(p.str())["theta_c"]["deg"].get<double>() == doctest::Approx(-60.0 + 1725.0 / 21.0).epsilon(1e-9));

    std::ostringstream r;
    opts.target_deg = 60.0;
    CHECK(run_reachable(opts, r, e) == kExitOk);
    CHECK(json::parse(r.str())["reachable_negative_gains"] == false);

    std::ostringstream s;
    opts.target_deg = 10.0;
    CHECK(run_synthesize(opts, s, e) == kExitOk);
    const auto synth = json::parse(s.str());
    CommandOptions follow;
    follow.config = synth["config_path"].get<std::string>();
    follow.out = tmp.path / "follow";
    std::ostringstream f;
    CHECK(run_simulate(follow, f, e) == kExitOk);
    CHECK(json::parse(f.str())["final_heading_common_deg"].get<double>() == doctest::Approx(10.0).epsilon(1e-4));

    std::ostringstream bad_target;
    opts.target_deg = 90.0;
    CHECK(run_synthesize(opts, bad_target, e) == kExitError);
    CHECK(json::parse(bad_target.str()).contains("error"));

    std::ostringstream pb;
    opts.eta = 0.3;
    CHECK(run_perturb(opts, pb, e) == kExitOk);
    const auto pj = json::parse(pb.str());
    CHECK(pj["monte_carlo"]["violations"] == 0);
    CHECK(pj["monte_carlo"]["samples"] == 1000);

    std::ostringstream cl;
    CHECK(run_classify(opts, cl, e) == kExitError);

    auto crit = sim1_json();
    crit["n"] = 3;
    crit["theta0_deg"] = {0, 0, 180};
    crit["gains"] = {-1, -1, -1};
    crit.erase("positions0");
    opts.config = write_config(tmp.path, crit, "crit.json");
    std::ostringstream cl2;
    CHECK(run_classify(opts, cl2, e) == kExitOk);
    const auto cj = json::parse(cl2.str());
    CHECK(cj["kind"] == "saddle");
    CHECK(cj["M"] == 1);
    CHECK(cj["witness_qHq"].get<double>() == doctest::Approx(-2.0 / 3.0));

    auto mixed = sim1_json();
    mixed["gains"] = "set3";
    opts.config = write_config(tmp.path, mixed, "mixed.json");
    std::ostringstream pm;
    CHECK(run_predict(opts, pm, e) == kExitError);
    CHECK(json::parse(pm.str())["error"]["message"].get<std::string>().find("exploratory") != std::string::npos);
}

TEST_CASE("scenario run writes a summary")
{
    TempDir tmp;
    CommandOptions opts;
    opts.out = tmp.path;
    std::ostringstream out, err;
    CHECK(run_scenario("sim2", opts, out, err) == kExitOk);
    const auto summary = json::parse(read_file(tmp.path / "sim2" / "summary.json"));
    CHECK(summary["all_checks_passed"] == true);
    CHECK(summary["runs"].size() == 2);
    CHECK(fs::exists(tmp.path / "sim2" / "a" / "trajectory.csv"));
    CHECK(fs::exists(tmp.path / "sim2" / "b" / "convergence.json"));

    std::ostringstream bad;
    CHECK(run_scenario("sim9", opts, bad, err) == kExitError);
    CHECK_THROWS_AS(builtin_scenario("sim9"), ConfigError);
}

TEST_CASE("executable exit-code contract")
{
    TempDir tmp;
    const auto good = write_config(tmp.path, sim1_json()).string();
    const auto out = (tmp.path / "out").string();
    CHECK(run_exe("simulate --config " + good + " --out " + out) == 0);
    CHECK(run_exe("simulate --config " + good + " --out " + out + " --t-max 5") == 2);
    auto broken = sim1_json();
    broken["gains"] = "nope";
    const auto bad = write_config(tmp.path, broken, "bad.json").string();
    CHECK(run_exe("simulate --config " + bad + " --out " + out) == 1);
    CHECK(run_exe("predict --config " + good) == 0);
    CHECK(run_exe("reachable --config " + good + " --target-deg 60") == 0);
    CHECK(run_exe("scenario fig6 --out " + out) == 0);

    // The output directory falls back to $SWARMSYNC_OUT.
    const auto env_out = tmp.path / "env";
    const int status = std::system(("SWARMSYNC_OUT=" + env_out.string() + " " + SWARMSYNC_EXE + " simulate --config " +
                                    good + " >/dev/null 2>&1")
                                       .c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(env_out / "trajectory.csv"));
}
