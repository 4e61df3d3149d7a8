#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swarmsync/gains.hpp"
#include "swarmsync/phase.hpp"
#include "swarmsync/topology.hpp"

namespace swarmsync {

/// Turn-rate commands u_k (rad/s) and which components were clipped.
struct ControlCommand {
    std::vector<double> u;
    std::vector<bool> saturated;

    explicit ControlCommand(std::vector<double> values = {})
        : u(std::move(values)), saturated(u.size(), false) {}

    std::size_t size() const noexcept { return u.size(); }
};

/// u_k = omega0 + K_k dU/dtheta_k.
ControlCommand control_all_to_all(const HeadingVector& theta, const GainVector& gains, double omega0 = 0.0);

/// u_k = omega0 + K_k dW_L/dtheta_k.
ControlCommand control_limited(const HeadingVector& theta, const GainVector& gains,
                               const LaplacianMatrix& L, double omega0 = 0.0);
ControlCommand control_limited(const HeadingVector& theta, const GainVector& gains,
                               const InteractionGraph& g, double omega0 = 0.0);

/// Dispatches on the coupling kind.
ControlCommand control(const HeadingVector& theta, const GainVector& gains,
                       const Coupling& coupling, double omega0 = 0.0);

/// Component-wise sat(u_k; u_max). Throws std::invalid_argument unless u_max > 0.
ControlCommand saturate(const ControlCommand& cmd, double u_max);

/// Largest |K_k| for which the all-to-all law keeps |u_k| <= u_max: (n/(n-1)) u_max.
double gain_cap(std::size_t n, double u_max);

struct GainRegime {
    enum class Kind { all_negative, two_agent_sum, cap };
    Kind kind = Kind::all_negative;
    double u_max = 0.0;  // used by Kind::cap

    static GainRegime all_negative() { return {Kind::all_negative, 0.0}; }
    static GainRegime two_agent_sum() { return {Kind::two_agent_sum, 0.0}; }
    static GainRegime cap(double u_max) { return {Kind::cap, u_max}; }
};

struct GainValidation {
    bool pass = false;
    std::vector<std::size_t> offending;
    std::string message;
};

GainValidation validate_gains(const GainVector& gains, const GainRegime& regime);

}  // namespace swarmsync
