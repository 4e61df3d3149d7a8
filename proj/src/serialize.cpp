#include "swarmsync/serialize.hpp"

#include "swarmsync/angles.hpp"

namespace swarmsync {

using nlohmann::json;

namespace {

void put_angle(json& j, const std::string& key, double rad)
{
    j[key + "_rad"] = rad;
    j[key + "_deg"] = rad_to_deg(rad);
}

}  // namespace

json to_json(const ConvergenceReport& r)
{
    json j;
    j["synchronized"] = r.synchronized;
    j["t_sync"] = r.t_sync ? json(*r.t_sync) : json(nullptr);
    put_angle(j, "final_heading_common", r.final_heading_common);
    j["max_heading_spread_final_rad"] = r.max_heading_spread_final;
    j["t_final"] = r.t_final;
    j["max_lyapunov_rate"] = r.max_lyapunov_rate;
    j["max_abs_control"] = r.max_abs_control;
    return j;
}

json to_json(const AngleInterval& i)
{
    return {{"lower_rad", i.lower},
            {"upper_rad", i.upper},
            {"lower_deg", rad_to_deg(i.lower)},
            {"upper_deg", rad_to_deg(i.upper)},
            {"lower_open", i.lower_open},
            {"upper_open", i.upper_open}};
}

json to_json(const RotatedFrame& f)
{
    json j;
    put_angle(j, "theta_R", f.theta_R);
    j["theta_hat0_rad"] = f.theta_hat0;
    put_angle(j, "span", f.span);
    j["acute"] = f.acute;
    return j;
}

json to_json(const ReachabilityReport& r)
{
    json j;
    put_angle(j, "theta_R", r.theta_R);
    j["interval_hat"] = to_json(r.interval_hat);
    put_angle(j, "interval_standard_lower", r.interval_standard_lower);
    put_angle(j, "interval_standard_upper", r.interval_standard_upper);
    put_angle(j, "target", r.target);
    put_angle(j, "target_hat", r.target_hat);
    j["reachable_negative_gains"] = r.reachable_negative_gains;
    j["reachable_two_agent_extended"] =
        r.reachable_two_agent_extended ? json(*r.reachable_two_agent_extended) : json("not_applicable");
    return j;
}

json to_json(const PerturbationBounds& b)
{
    json j;
    j["eta"] = b.eta;
    put_angle(j, "theta_R", b.theta_R);
    put_angle(j, "mean_direction_hat", b.mean_direction_hat);
    put_angle(j, "delta_lower", b.delta_lower);
    put_angle(j, "delta_upper", b.delta_upper);
    j["admissible_hat"] = to_json(b.admissible_hat);
    return j;
}

json to_json(const CriticalPointConfig& c)
{
    json j;
    j["kind"] = std::string(to_string(c.kind));
    j["M"] = c.m ? json(*c.m) : json(nullptr);
    j["p_mag"] = c.p_mag;
    j["witness_qHq"] = c.witness ? json(*c.witness) : json(nullptr);
    if (!c.witness_vector.empty()) j["witness_q"] = c.witness_vector;
    return j;
}

}  // namespace swarmsync
