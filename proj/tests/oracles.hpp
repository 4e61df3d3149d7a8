#pragma once

// Reference computations used by the tests. Each one is written from the
// pairwise sine/cosine forms, independently of the library's complex-valued
// order-parameter code, so agreement between the two is meaningful.

#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg(double d) { return d * kPi / 180.0; }

/// U = (1/(2N)) sum_{j,k} (1 - cos(theta_j - theta_k))
inline double potential_U(const std::vector<double>& th)
{
    const double n = static_cast<double>(th.size());
    double s = 0.0;
    for (double a : th)
        for (double b : th) s += 1.0 - std::cos(a - b);
    return s / (2.0 * n);
}

/// dU/dtheta_k = -(1/N) sum_{j != k} sin(theta_j - theta_k)
inline std::vector<double> grad_U(const std::vector<double>& th)
{
    const double n = static_cast<double>(th.size());
    std::vector<double> g(th.size(), 0.0);
    for (std::size_t k = 0; k < th.size(); ++k)
        for (std::size_t j = 0; j < th.size(); ++j)
            if (j != k) g[k] -= std::sin(th[j] - th[k]) / n;
    return g;
}

/// W_L = (1/2) sum over ordered neighbor pairs of (1 - cos), i.e. one term per undirected edge
inline double potential_WL(const std::vector<double>& th, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    double s = 0.0;
    for (auto [j, k] : edges) s += 1.0 - std::cos(th[j] - th[k]);
    return s;
}

inline std::vector<double> grad_WL(const std::vector<double>& th,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<double> g(th.size(), 0.0);
    for (auto [j, k] : edges) {
        g[k] -= std::sin(th[j] - th[k]);
        g[j] -= std::sin(th[k] - th[j]);
    }
    return g;
}

inline std::vector<std::pair<std::size_t, std::size_t>> ring_edges(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t k = 0; k < n; ++k) e.emplace_back(k, (k + 1) % n);
    return e;
}

inline std::vector<std::pair<std::size_t, std::size_t>> complete_edges(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) e.emplace_back(j, k);
    return e;
}

/// Central difference gradient of f at x.
inline std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                       std::vector<double> x, double h = 1e-6)
{
    std::vector<double> g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double x0 = x[k];
        x[k] = x0 + h;
        const double fp = f(x);
        x[k] = x0 - h;
        const double fm = f(x);
        x[k] = x0;
        g[k] = (fp - fm) / (2.0 * h);
    }
    return g;
}

/// Central difference Hessian of f at x.
inline std::vector<std::vector<double>> fd_hessian(const std::function<double(const std::vector<double>&)>& f,
                                                   std::vector<double> x, double h = 1e-4)
{
    const std::size_t n = x.size();
    std::vector<std::vector<double>> H(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto at = [&](double di, double dj) {
                auto y = x;
                y[i] += di;
                y[j] += dj;
                return f(y);
            };
            H[i][j] = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
        }
    return H;
}

/// Weighted harmonic combination sum(theta/K)/sum(1/K) evaluated directly on given angles.
inline double harmonic_mean(const std::vector<double>& th, const std::vector<double>& K)
{
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < th.size(); ++k) {
        num += th[k] / K[k];
        den += 1.0 / K[k];
    }
    return num / den;
}

/// Plain RK4 on theta only, for the all-to-all sine law, used as an integration reference.
inline std::vector<double> integrate_all_to_all(std::vector<double> th, const std::vector<double>& K, double dt,
                                                std::size_t steps)
{
    auto f = [&](const std::vector<double>& x) {
        auto g = grad_U(x);
        for (std::size_t k = 0; k < x.size(); ++k) g[k] *= K[k];
        return g;
    };
    const std::size_t n = th.size();
    for (std::size_t s = 0; s < steps; ++s) {
        auto k1 = f(th);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = th[i] + 0.5 * dt * k1[i];
        auto k2 = f(y);
        for (std::size_t i = 0; i < n; ++i) y[i] = th[i] + 0.5 * dt * k2[i];
        auto k3 = f(y);
        for (std::size_t i = 0; i < n; ++i) y[i] = th[i] + dt * k3[i];
        auto k4 = f(y);
        for (std::size_t i = 0; i < n; ++i) th[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return th;
}

inline std::vector<double> random_angles(std::mt19937_64& rng, std::size_t n, double lo = -kPi, double hi = kPi)
{
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace oracle
