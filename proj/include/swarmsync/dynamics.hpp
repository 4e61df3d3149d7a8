#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "swarmsync/control.hpp"
#include "swarmsync/gains.hpp"
#include "swarmsync/phase.hpp"
#include "swarmsync/topology.hpp"

namespace swarmsync {

/// Positions (complex plane, meters) and unwrapped headings at time t.
struct SwarmState {
    double t = 0.0;
    std::vector<std::complex<double>> positions;
    HeadingVector theta;
};

using Topology = std::variant<AllToAll, InteractionGraph>;

struct SimulationConfig {
    std::size_t n = 0;
    std::vector<double> theta0;  // radians
    std::vector<std::complex<double>> positions0;
    GainVector gains;
    double omega0 = 0.0;
    Topology topology = AllToAll{};
    double dt = 0.01;
    double t_max = 100.0;
    std::optional<double> saturation;  // u_max applied inside the vector field
    std::size_t record_stride = 1;
    std::optional<GainRegime> required_regime;
    bool jitter = false;  // uniform +-1e-6 rad on theta0, drawn from seed
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    /// Number of integration steps covering [0, t_max].
    std::size_t step_count() const;
    /// floor(t_max / (dt * stride)) + 1
    std::size_t sample_count() const;
};

/// Raised when the integrated state stops being finite.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TrajectorySample {
    SwarmState state;
    ControlCommand control;
    double p_mag = 0.0;
    std::optional<double> p_psi;
    double U = 0.0;
    std::optional<double> WL;
    double conserved = 0.0;  // sum_k theta_k / K_k
};

struct TrajectoryRecord {
    GainVector gains;
    double omega0 = 0.0;
    std::vector<TrajectorySample> samples;
};

/// Max heading spread below which agents count as aligned, radians.
inline constexpr double kSyncTolerance = 1e-4;
/// Time the spread must stay below tolerance, seconds.
inline constexpr double kSyncHold = 1.0;

struct ConvergenceReport {
    bool synchronized = false;
    std::optional<double> t_sync;
    /// Common heading in (-pi, pi]; in the rotating frame when omega0 != 0.
    double final_heading_common = 0.0;
    double max_heading_spread_final = 0.0;
    double t_final = 0.0;
    /// Largest instantaneous sum_k K_k T_k seen over the run (unsaturated law).
    double max_lyapunov_rate = 0.0;
    double max_abs_control = 0.0;
};

struct SimulationResult {
    TrajectoryRecord trajectory;
    ConvergenceReport report;
};

/// Closed-loop vector field and fixed-step RK4 integrator for one config.
class ClosedLoop {
public:
    explicit ClosedLoop(const SimulationConfig& cfg);
    ClosedLoop(const ClosedLoop&) = delete;
    ClosedLoop& operator=(const ClosedLoop&) = delete;

    /// Commanded turn rates at theta, saturated if the config asks for it.
    ControlCommand command(const HeadingVector& theta) const;
    /// Advances the state by one step of dt.
    SwarmState step(const SwarmState& state) const;

    const Coupling& coupling() const noexcept { return coupling_; }
    const std::optional<LaplacianMatrix>& laplacian() const noexcept { return laplacian_; }

private:
    std::vector<double> turn_rates(std::span<const double> theta) const;

    const SimulationConfig& cfg_;
    std::optional<LaplacianMatrix> laplacian_;
    Coupling coupling_;
};

SwarmState initial_state(const SimulationConfig& cfg);

/// One RK4 step of the closed loop described by cfg.
SwarmState step(const SwarmState& state, const SimulationConfig& cfg);

SimulationResult simulate(const SimulationConfig& cfg);

/// Largest pairwise |wrap(theta_k - theta_j)|.
double heading_spread(const HeadingVector& theta);

struct CircleFit {
    std::complex<double> center;
    double radius = 0.0;
    double rms_residual = 0.0;
};

/// Algebraic least-squares circle through planar points (needs >= 3 points).
CircleFit fit_circle(std::span<const std::complex<double>> points);

/// theta_k(t) -> theta_k(t) - omega0 t (and u_k -> u_k - omega0).
TrajectoryRecord rotating_frame(const TrajectoryRecord& traj, double omega0);

}  // namespace swarmsync
