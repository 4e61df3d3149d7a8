#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "swarmsync/gains.hpp"
#include "swarmsync/phase.hpp"

namespace swarmsync {

/// Raised when an analysis precondition such as an acute initial cone fails.
class AnalysisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Frame rotated by theta_R so that every initial heading lies in [0, span].
struct RotatedFrame {
    double theta_R = 0.0;             // [-pi, pi)
    std::vector<double> theta_hat0;   // all in [0, span], min is 0
    double span = 0.0;
    bool acute = false;               // span < pi

    std::size_t min_index() const;
    std::size_t max_index() const;
    /// Rotated-frame image of a standard-frame direction, in (-pi, pi].
    double to_hat(double standard) const;
    /// Standard-frame direction for a rotated one, in (-pi, pi].
    double to_standard(double hat) const;
};

/// Interval on the rotated axis with per-endpoint openness.
struct AngleInterval {
    double lower = 0.0;
    double upper = 0.0;
    bool lower_open = false;
    bool upper_open = false;

    bool contains(double x, double tol = 0.0) const;
};

struct ReachabilityReport {
    double theta_R = 0.0;
    AngleInterval interval_hat;        // (0, span)
    double interval_standard_lower = 0.0;
    double interval_standard_upper = 0.0;
    double target = 0.0;
    double target_hat = 0.0;
    bool reachable_negative_gains = false;
    /// Only meaningful for two agents.
    std::optional<bool> reachable_two_agent_extended;
};

struct PerturbationBounds {
    double eta = 0.0;
    double theta_R = 0.0;
    double mean_direction_hat = 0.0;
    double delta_lower = 0.0;
    double delta_upper = 0.0;
    AngleInterval admissible_hat;
};

enum class CriticalKind { sync_minimum, saddle, balanced_maximum };

struct CriticalPointConfig {
    CriticalKind kind = CriticalKind::sync_minimum;
    std::optional<std::size_t> m;       // agents sitting at Psi + pi
    double p_mag = 0.0;
    std::optional<double> witness;      // q^T H q for saddles
    std::vector<double> witness_vector; // q
};

std::string_view to_string(CriticalKind k) noexcept;

RotatedFrame rotated_frame(const HeadingVector& theta0);

/// Common final heading (standard frame, (-pi, pi]) for all-negative gains.
double predict_direction(const HeadingVector& theta0, const GainVector& gains);
/// Same, in the rotated frame.
double predict_direction_hat(const RotatedFrame& frame, const GainVector& gains);

/// lambda_k = (1/K_k) / sum_j (1/K_j).
std::vector<double> convex_weights(const GainVector& gains);

ReachabilityReport is_reachable(const HeadingVector& theta0, double target);

/// All-negative gains K_k = c / alpha_k steering the group to target.
GainVector synthesize_gains(const HeadingVector& theta0, double target, double c);

PerturbationBounds perturbation_bounds(const HeadingVector& theta0, double eta);

/// Rotated-frame predictions for gains K (1 + e_k), e_k uniform in [-eta, eta].
std::vector<double> sample_perturbed_directions(const HeadingVector& theta0, double nominal_gain,
                                                double eta, std::size_t samples, std::mt19937_64& rng);

/// Two-agent final heading, valid for any gains with K_1 + K_2 < 0.
double two_agent_direction(const HeadingVector& theta0, const GainVector& gains);

/// Gains with K_1 + K_2 < 0 steering two agents to target (anywhere on the circle).
GainVector two_agent_gains(const HeadingVector& theta0, double target);

/// Negated Hessian of U: diagonal 1/N - |p| cos(Psi - theta_k), off-diagonal (1/N) cos(theta_j - theta_k).
/// The sign flip does not change which critical points are indefinite.
Eigen::MatrixXd hessian_negated(const HeadingVector& theta);

CriticalPointConfig classify_critical_point(const HeadingVector& theta);

/// Whether p lies in the closed unit-disk sector spanned by the initial headings.
bool conic_hull_contains(const HeadingVector& theta0, std::complex<double> p);

}  // namespace swarmsync
