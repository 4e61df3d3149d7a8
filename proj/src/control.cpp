#include "swarmsync/control.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace swarmsync {

namespace {

ControlCommand gradient_law(const std::vector<double>& gradient, const GainVector& gains, double omega0)
{
    if (gains.size() != gradient.size())
        throw std::invalid_argument("gain vector has " + std::to_string(gains.size()) + " entries for " +
                                    std::to_string(gradient.size()) + " agents");
    std::vector<double> u(gradient.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = omega0 + gains[k] * gradient[k];
    return ControlCommand(std::move(u));
}

}  // namespace

ControlCommand control_all_to_all(const HeadingVector& theta, const GainVector& gains, double omega0)
{
    return gradient_law(grad_U(theta), gains, omega0);
}

ControlCommand control_limited(const HeadingVector& theta, const GainVector& gains, const LaplacianMatrix& L,
                               double omega0)
{
    return gradient_law(grad_WL(theta, L), gains, omega0);
}

ControlCommand control_limited(const HeadingVector& theta, const GainVector& gains, const InteractionGraph& g,
                               double omega0)
{
    return control_limited(theta, gains, LaplacianMatrix(g), omega0);
}

ControlCommand control(const HeadingVector& theta, const GainVector& gains, const Coupling& coupling,
                       double omega0)
{
    return gradient_law(potential_gradient(theta, coupling), gains, omega0);
}

ControlCommand saturate(const ControlCommand& cmd, double u_max)
{
    if (!(u_max > 0.0) || !std::isfinite(u_max)) throw std::invalid_argument("u_max must be a positive number");
    ControlCommand out = cmd;
    for (std::size_t k = 0; k < out.u.size(); ++k) {
        if (std::abs(out.u[k]) > u_max) {
            out.u[k] = std::copysign(u_max, out.u[k]);
            out.saturated[k] = true;
        }
    }
    return out;
}

double gain_cap(std::size_t n, double u_max)
{
    if (n < 2) throw std::invalid_argument("gain cap needs n >= 2");
    if (!(u_max > 0.0) || !std::isfinite(u_max)) throw std::invalid_argument("u_max must be a positive number");
    const double nn = static_cast<double>(n);
    return nn / (nn - 1.0) * u_max;
}

GainValidation validate_gains(const GainVector& gains, const GainRegime& regime)
{
    GainValidation v;
    switch (regime.kind) {
    case GainRegime::Kind::all_negative:
        for (std::size_t k = 0; k < gains.size(); ++k)
            if (gains[k] >= 0.0) v.offending.push_back(k);
        v.pass = v.offending.empty();
        v.message = v.pass ? "all gains negative" : "non-negative gains present";
        break;
    case GainRegime::Kind::two_agent_sum:
        if (gains.size() != 2) {
            v.message = "two-agent regime requires exactly 2 gains";
            break;
        }
        v.pass = gains.sum() < 0.0;
        if (!v.pass)
            for (std::size_t k = 0; k < 2; ++k)
                if (gains[k] >= 0.0) v.offending.push_back(k);
        v.message = v.pass ? "K_1 + K_2 < 0" : "K_1 + K_2 >= 0";
        break;
    case GainRegime::Kind::cap: {
        const double cap = gain_cap(gains.size(), regime.u_max);
        for (std::size_t k = 0; k < gains.size(); ++k)
            if (std::abs(gains[k]) > cap) v.offending.push_back(k);
        v.pass = v.offending.empty();
        std::ostringstream msg;
        msg << (v.pass ? "all |K_k| <= " : "some |K_k| > ") << cap;
        v.message = msg.str();
        break;
    }
    }
    return v;
}

}  // namespace swarmsync
