#include "swarmsync/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "swarmsync/angles.hpp"

namespace swarmsync {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw std::invalid_argument(what);
}

bool all_finite(std::span<const double> v)
{
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double weighted_heading_sum(std::span<const double> theta, const GainVector& gains)
{
    double s = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) s += theta[k] / gains[k];
    return s;
}

}  // namespace

void SimulationConfig::validate() const
{
    require(n >= 2, "n must be at least 2");
    require(theta0.size() == n, "theta0 must have n = " + std::to_string(n) + " entries");
    require(all_finite(theta0), "theta0 entries must be finite");
    require(positions0.size() == n, "positions0 must have n = " + std::to_string(n) + " entries");
    require(gains.size() == n, "gains must have n = " + std::to_string(n) + " entries");
    require(std::isfinite(omega0), "omega0 must be finite");
    require(std::isfinite(dt) && dt > 0.0, "dt must be positive");
    require(std::isfinite(t_max) && t_max > dt, "t_max must exceed dt");
    require(record_stride >= 1, "record_stride must be at least 1");
    if (saturation) require(std::isfinite(*saturation) && *saturation > 0.0, "u_max must be positive");
    if (const auto* g = std::get_if<InteractionGraph>(&topology))
        require(g->node_count() == n, "topology must have n = " + std::to_string(n) + " nodes");
}

std::size_t SimulationConfig::step_count() const
{
    return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
}

std::size_t SimulationConfig::sample_count() const { return step_count() / record_stride + 1; }

ClosedLoop::ClosedLoop(const SimulationConfig& cfg) : cfg_(cfg), coupling_(AllToAll{})
{
    if (const auto* g = std::get_if<InteractionGraph>(&cfg.topology)) {
        laplacian_.emplace(*g);
        coupling_ = std::cref(*laplacian_);
    }
}

ControlCommand ClosedLoop::command(const HeadingVector& theta) const
{
    auto cmd = control(theta, cfg_.gains, coupling_, cfg_.omega0);
    if (cfg_.saturation) cmd = saturate(cmd, *cfg_.saturation);
    return cmd;
}

std::vector<double> ClosedLoop::turn_rates(std::span<const double> theta) const
{
    if (!all_finite(theta)) throw DivergenceError("non-finite heading during integration");
    return command(HeadingVector(std::vector<double>(theta.begin(), theta.end()))).u;
}

SwarmState ClosedLoop::step(const SwarmState& state) const
{
    const std::size_t n = state.theta.size();
    const double dt = cfg_.dt;
    const auto& th = state.theta.vector();

    std::vector<double> stage(n);
    auto advance = [&](const std::vector<double>& rate, double h) {
        for (std::size_t k = 0; k < n; ++k) stage[k] = th[k] + h * rate[k];
        return stage;
    };

    // Position rates are e^{i theta} at each stage's headings.
    const auto w1 = turn_rates(th);
    const auto s2 = advance(w1, 0.5 * dt);
    const auto w2 = turn_rates(s2);
    const auto s3 = advance(w2, 0.5 * dt);
    const auto w3 = turn_rates(s3);
    const auto s4 = advance(w3, dt);
    const auto w4 = turn_rates(s4);

    SwarmState next;
    next.t = state.t + dt;
    std::vector<double> theta(n);
    next.positions.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        theta[k] = th[k] + dt / 6.0 * (w1[k] + 2.0 * w2[k] + 2.0 * w3[k] + w4[k]);
        const auto v = std::polar(1.0, th[k]) + 2.0 * std::polar(1.0, s2[k]) + 2.0 * std::polar(1.0, s3[k]) +
                       std::polar(1.0, s4[k]);
        next.positions[k] = state.positions[k] + dt / 6.0 * v;
        if (!std::isfinite(theta[k]) || !std::isfinite(next.positions[k].real()) ||
            !std::isfinite(next.positions[k].imag()))
            throw DivergenceError("non-finite state for agent " + std::to_string(k + 1) + " at t = " +
                                  std::to_string(next.t));
    }
    next.theta = HeadingVector(std::move(theta));
    return next;
}

SwarmState initial_state(const SimulationConfig& cfg)
{
    cfg.validate();
    std::vector<double> theta = cfg.theta0;
    if (cfg.jitter) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
        for (double& t : theta) t += noise(rng);
    }
    return {0.0, cfg.positions0, HeadingVector(std::move(theta))};
}

SwarmState step(const SwarmState& state, const SimulationConfig& cfg)
{
    cfg.validate();
    const ClosedLoop loop(cfg);
    return loop.step(state);
}

double heading_spread(const HeadingVector& theta)
{
    double spread = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j)
        for (std::size_t k = j + 1; k < theta.size(); ++k)
            spread = std::max(spread, std::abs(angle_diff(theta[j], theta[k])));
    return spread;
}

SimulationResult simulate(const SimulationConfig& cfg)
{
    cfg.validate();
    if (cfg.required_regime) {
        const auto check = validate_gains(cfg.gains, *cfg.required_regime);
        if (!check.pass) throw std::invalid_argument("gains fail the requested regime: " + check.message);
    }

    const ClosedLoop loop(cfg);
    const std::size_t steps = cfg.step_count();

    SimulationResult result;
    auto& traj = result.trajectory;
    auto& report = result.report;
    traj.gains = cfg.gains;
    traj.omega0 = cfg.omega0;
    traj.samples.reserve(cfg.sample_count());

    SwarmState state = initial_state(cfg);
    std::optional<double> window_start;
    report.max_lyapunov_rate = -std::numeric_limits<double>::infinity();

    for (std::size_t i = 0;; ++i) {
        state.t = static_cast<double>(i) * cfg.dt;
        const auto cmd = loop.command(state.theta);
        for (double u : cmd.u) report.max_abs_control = std::max(report.max_abs_control, std::abs(u));
        report.max_lyapunov_rate =
            std::max(report.max_lyapunov_rate, lyapunov_rate(state.theta, cfg.gains, loop.coupling()));

        if (heading_spread(state.theta) < kSyncTolerance) {
            if (!window_start) window_start = state.t;
        } else {
            window_start.reset();
        }

        if (i % cfg.record_stride == 0) {
            const auto p = order_parameter(state.theta);
            std::optional<double> wl;
            if (loop.laplacian()) wl = potential_WL(state.theta, *loop.laplacian());
            TrajectorySample s{state,
                               cmd,
                               p.magnitude,
                               p.mean_phase,
                               potential_U(state.theta),
                               wl,
                               weighted_heading_sum(state.theta.values(), cfg.gains)};
            traj.samples.push_back(std::move(s));
        }

        if (i == steps) break;
        state = loop.step(state);
    }

    report.t_final = state.t;
    report.max_heading_spread_final = heading_spread(state.theta);
    report.synchronized = window_start && report.t_final - *window_start >= kSyncHold - 1e-9;
    if (report.synchronized) report.t_sync = window_start;

    std::vector<double> frame(state.theta.begin(), state.theta.end());
    for (double& t : frame) t -= cfg.omega0 * state.t;
    const auto p = order_parameter(HeadingVector(frame));
    report.final_heading_common = p.mean_phase ? wrap_pi(*p.mean_phase) : wrap_pi(frame.front());
    return result;
}

CircleFit fit_circle(std::span<const std::complex<double>> points)
{
    if (points.size() < 3) throw std::invalid_argument("circle fit needs at least 3 points");
    // x^2 + y^2 = 2 a x + 2 b y + c, linear in (a, b, c).
    const auto m = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd A(m, 3);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto z = points[static_cast<std::size_t>(i)];
        A(i, 0) = 2.0 * z.real();
        A(i, 1) = 2.0 * z.imag();
        A(i, 2) = 1.0;
        rhs(i) = std::norm(z);
    }
    const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(rhs);
    CircleFit fit;
    fit.center = {sol(0), sol(1)};
    fit.radius = std::sqrt(sol(2) + std::norm(fit.center));
    double ss = 0.0;
    for (const auto& z : points) {
        const double r = std::abs(z - fit.center) - fit.radius;
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(points.size()));
    return fit;
}

TrajectoryRecord rotating_frame(const TrajectoryRecord& traj, double omega0)
{
    TrajectoryRecord out = traj;
    out.omega0 = traj.omega0 - omega0;
    for (auto& s : out.samples) {
        const double shift = omega0 * s.state.t;
        std::vector<double> theta(s.state.theta.begin(), s.state.theta.end());
        for (double& t : theta) t -= shift;
        s.state.theta = HeadingVector(std::move(theta));
        for (double& u : s.control.u) u -= omega0;
        if (s.p_psi && shift != 0.0) s.p_psi = wrap_pi(*s.p_psi - shift);
        s.conserved = weighted_heading_sum(s.state.theta.values(), out.gains);
    }
    return out;
}

}  // namespace swarmsync
