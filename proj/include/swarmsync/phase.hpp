#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <functional>
#include <vector>

#include "swarmsync/gains.hpp"
#include "swarmsync/topology.hpp"

namespace swarmsync {

/// Unwrapped heading angles of N >= 2 agents, radians.
///
/// Headings live on the real line (accumulated turn), never reduced mod 2*pi:
/// the weighted heading sum sum(theta_k / K_k) is only conserved on the
/// unwrapped values. Reduction happens at reporting time.
class HeadingVector {
public:
    HeadingVector() = default;
    explicit HeadingVector(std::vector<double> theta);

    static HeadingVector from_degrees(std::span<const double> deg);

    std::size_t size() const noexcept { return theta_.size(); }
    double operator[](std::size_t k) const noexcept { return theta_[k]; }
    std::span<const double> values() const noexcept { return theta_; }
    const std::vector<double>& vector() const noexcept { return theta_; }

    auto begin() const noexcept { return theta_.begin(); }
    auto end() const noexcept { return theta_.end(); }

private:
    std::vector<double> theta_;
};

struct OrderParameter {
    std::complex<double> value;
    double magnitude = 0.0;
    /// Psi; empty when |p| vanishes and the mean phase is undefined.
    std::optional<double> mean_phase;
};

/// Threshold under which |p_theta| is treated as zero.
inline constexpr double kOrderParameterZero = 1e-12;

/// Marker for all-to-all coupling (potential U instead of W_L).
struct AllToAll {};

using Coupling = std::variant<AllToAll, std::reference_wrapper<const LaplacianMatrix>>;

/// p_theta = (1/N) sum_k exp(i theta_k).
OrderParameter order_parameter(const HeadingVector& theta);

/// U = (N/2)(1 - |p_theta|^2); zero exactly at synchronized configurations.
double potential_U(const HeadingVector& theta);

/// dU/dtheta_k = -<p_theta, i e^{i theta_k}> = -|p| sin(Psi - theta_k).
std::vector<double> grad_U(const HeadingVector& theta);

/// W_L = (1/2) <e^{i theta}, L e^{i theta}>.
double potential_WL(const HeadingVector& theta, const LaplacianMatrix& L);

/// dW_L/dtheta_k = <i e^{i theta_k}, L_k e^{i theta}>.
std::vector<double> grad_WL(const HeadingVector& theta, const LaplacianMatrix& L);

/// Potential for the given coupling: U for all-to-all, W_L otherwise.
double potential(const HeadingVector& theta, const Coupling& coupling);
std::vector<double> potential_gradient(const HeadingVector& theta, const Coupling& coupling);

/// sum_k K_k (dPhi/dtheta_k)^2, the time derivative of Phi under u = omega0 + K * grad Phi.
double lyapunov_rate(const HeadingVector& theta, const GainVector& gains, const Coupling& coupling);

}  // namespace swarmsync
