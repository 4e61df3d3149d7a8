#include "swarmsync/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swarmsync/angles.hpp"

namespace swarmsync {

HeadingVector::HeadingVector(std::vector<double> theta) : theta_(std::move(theta))
{
    if (theta_.size() < 2) throw std::invalid_argument("heading vector needs at least 2 agents");
    for (std::size_t k = 0; k < theta_.size(); ++k)
        if (!std::isfinite(theta_[k]))
            throw std::invalid_argument("heading theta_" + std::to_string(k + 1) + " is not finite");
}

HeadingVector HeadingVector::from_degrees(std::span<const double> deg)
{
    std::vector<double> rad(deg.size());
    for (std::size_t k = 0; k < deg.size(); ++k) rad[k] = deg_to_rad(deg[k]);
    return HeadingVector(std::move(rad));
}

namespace {

std::complex<double> mean_unit_vector(const HeadingVector& theta)
{
    std::complex<double> sum{0.0, 0.0};
    for (double t : theta) sum += std::polar(1.0, t);
    return sum / static_cast<double>(theta.size());
}

void require_same_size(const HeadingVector& theta, const LaplacianMatrix& L)
{
    if (theta.size() != L.size())
        throw std::invalid_argument("heading vector has " + std::to_string(theta.size()) +
                                    " agents but Laplacian is " + std::to_string(L.size()) + "x" +
                                    std::to_string(L.size()));
}

// (L e^{i theta})_k
std::vector<std::complex<double>> laplacian_apply(const HeadingVector& theta, const LaplacianMatrix& L)
{
    const std::size_t n = theta.size();
    std::vector<std::complex<double>> z(n), out(n);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(1.0, theta[k]);
    const auto& m = L.matrix();
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const double l = m(j, k);
            if (l != 0.0) acc += l * z[k];
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace

OrderParameter order_parameter(const HeadingVector& theta)
{
    OrderParameter p;
    p.value = mean_unit_vector(theta);
    p.magnitude = std::abs(p.value);
    if (p.magnitude > kOrderParameterZero) p.mean_phase = std::arg(p.value);
    return p;
}

double potential_U(const HeadingVector& theta)
{
    const double n = static_cast<double>(theta.size());
    return 0.5 * n * (1.0 - std::norm(mean_unit_vector(theta)));
}

std::vector<double> grad_U(const HeadingVector& theta)
{
    // -<p, i e^{i theta_k}> = Im(conj(p) e^{i theta_k}); no Psi needed, so p = 0 is fine.
    const auto p = mean_unit_vector(theta);
    std::vector<double> g(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) g[k] = std::imag(std::conj(p) * std::polar(1.0, theta[k]));
    return g;
}

double potential_WL(const HeadingVector& theta, const LaplacianMatrix& L)
{
    require_same_size(theta, L);
    const auto lz = laplacian_apply(theta, L);
    double q = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) q += std::real(std::conj(std::polar(1.0, theta[k])) * lz[k]);
    return 0.5 * q;
}

std::vector<double> grad_WL(const HeadingVector& theta, const LaplacianMatrix& L)
{
    require_same_size(theta, L);
    const auto lz = laplacian_apply(theta, L);
    std::vector<double> g(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const std::complex<double> ie{-std::sin(theta[k]), std::cos(theta[k])};
        g[k] = std::real(std::conj(ie) * lz[k]);
    }
    return g;
}

double potential(const HeadingVector& theta, const Coupling& coupling)
{
    if (const auto* L = std::get_if<std::reference_wrapper<const LaplacianMatrix>>(&coupling))
        return potential_WL(theta, L->get());
    return potential_U(theta);
}

std::vector<double> potential_gradient(const HeadingVector& theta, const Coupling& coupling)
{
    if (const auto* L = std::get_if<std::reference_wrapper<const LaplacianMatrix>>(&coupling))
        return grad_WL(theta, L->get());
    return grad_U(theta);
}

double lyapunov_rate(const HeadingVector& theta, const GainVector& gains, const Coupling& coupling)
{
    if (gains.size() != theta.size()) throw std::invalid_argument("gain vector length does not match headings");
    const auto g = potential_gradient(theta, coupling);
    double rate = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) rate += gains[k] * g[k] * g[k];
    return rate;
}

}  // namespace swarmsync
