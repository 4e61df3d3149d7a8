#include "swarmsync/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "swarmsync/angles.hpp"

namespace swarmsync {

namespace {

// Slack used to keep extreme rays out of the open reachable interval.
constexpr double kEndpointEps = 1e-12;

RotatedFrame acute_frame(const HeadingVector& theta0)
{
    auto frame = rotated_frame(theta0);
    if (!frame.acute)
        throw AnalysisError("initial headings do not span an acute cone (angular spread >= pi)");
    return frame;
}

void require_all_negative(const GainVector& gains)
{
    if (!gains.all_negative())
        throw AnalysisError("closed-form prediction needs every K_k < 0; use the two-agent law for mixed signs");
}

double mean(std::span<const double> v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::size_t RotatedFrame::min_index() const
{
    return static_cast<std::size_t>(std::min_element(theta_hat0.begin(), theta_hat0.end()) - theta_hat0.begin());
}

std::size_t RotatedFrame::max_index() const
{
    return static_cast<std::size_t>(std::max_element(theta_hat0.begin(), theta_hat0.end()) - theta_hat0.begin());
}

double RotatedFrame::to_hat(double standard) const { return wrap_pi(standard - theta_R); }
double RotatedFrame::to_standard(double hat) const { return wrap_pi(hat + theta_R); }

bool AngleInterval::contains(double x, double tol) const
{
    const bool above = lower_open ? x > lower : x >= lower - tol;
    const bool below = upper_open ? x < upper : x <= upper + tol;
    return above && below;
}

std::string_view to_string(CriticalKind k) noexcept
{
    switch (k) {
    case CriticalKind::sync_minimum: return "sync_minimum";
    case CriticalKind::saddle: return "saddle";
    case CriticalKind::balanced_maximum: return "balanced_maximum";
    }
    return "unknown";
}

RotatedFrame rotated_frame(const HeadingVector& theta0)
{
    const std::size_t n = theta0.size();
    std::size_t best = 0;
    double best_span = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
        double span = 0.0;
        for (std::size_t j = 0; j < n; ++j) span = std::max(span, wrap_two_pi(theta0[j] - theta0[c]));
        if (span < best_span) {
            best_span = span;
            best = c;
        }
    }

    RotatedFrame f;
    f.theta_R = wrap_pi(theta0[best]);
    if (f.theta_R >= kPi) f.theta_R -= kTwoPi;
    f.theta_hat0.resize(n);
    for (std::size_t j = 0; j < n; ++j) f.theta_hat0[j] = wrap_two_pi(theta0[j] - theta0[best]);
    f.span = best_span;
    f.acute = best_span < kPi;
    return f;
}

double predict_direction_hat(const RotatedFrame& frame, const GainVector& gains)
{
    if (!frame.acute) throw AnalysisError("initial headings do not span an acute cone (angular spread >= pi)");
    require_all_negative(gains);
    if (gains.size() != frame.theta_hat0.size()) throw AnalysisError("gain count does not match agent count");
    double num = 0.0;
    for (std::size_t k = 0; k < gains.size(); ++k) num += frame.theta_hat0[k] / gains[k];
    return num / gains.inverse_sum();
}

double predict_direction(const HeadingVector& theta0, const GainVector& gains)
{
    const auto frame = rotated_frame(theta0);
    return frame.to_standard(predict_direction_hat(frame, gains));
}

std::vector<double> convex_weights(const GainVector& gains)
{
    require_all_negative(gains);
    const double inv = gains.inverse_sum();
    std::vector<double> w(gains.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = (1.0 / gains[k]) / inv;
    return w;
}

ReachabilityReport is_reachable(const HeadingVector& theta0, double target)
{
    const auto frame = acute_frame(theta0);
    ReachabilityReport r;
    r.theta_R = frame.theta_R;
    r.interval_hat = {0.0, frame.span, true, true};
    r.interval_standard_lower = frame.to_standard(0.0);
    r.interval_standard_upper = frame.to_standard(frame.span);
    r.target = wrap_pi(target);
    r.target_hat = frame.to_hat(target);
    r.reachable_negative_gains = r.target_hat > kEndpointEps && r.target_hat < frame.span - kEndpointEps;
    if (theta0.size() == 2) {
        if (frame.span > kEndpointEps)
            r.reachable_two_agent_extended = std::abs(r.target_hat) > kEndpointEps &&
                                             std::abs(r.target_hat - frame.span) > kEndpointEps;
        else
            r.reachable_two_agent_extended = std::abs(r.target_hat) <= kEndpointEps;
    }
    return r;
}

GainVector synthesize_gains(const HeadingVector& theta0, double target, double c)
{
    if (!(c < 0.0) || !std::isfinite(c)) throw AnalysisError("gain scale c must be negative");
    const auto report = is_reachable(theta0, target);
    if (!report.reachable_negative_gains)
        throw AnalysisError("target is not strictly inside the initial cone; no all-negative gains reach it");

    const auto frame = rotated_frame(theta0);
    const std::size_t n = theta0.size();
    const double t_hat = report.target_hat;
    const double m_hat = mean(frame.theta_hat0);

    // alpha = (1 - s) * uniform + s * (point mass on the extreme agent beyond the target).
    std::size_t extreme = 0;
    double s = 0.0;
    if (t_hat > m_hat) {
        extreme = frame.max_index();
        s = (t_hat - m_hat) / (frame.span - m_hat);
    } else if (t_hat < m_hat) {
        extreme = frame.min_index();
        s = (m_hat - t_hat) / m_hat;
    }

    std::vector<double> gains(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double alpha = (1.0 - s) / static_cast<double>(n) + (k == extreme ? s : 0.0);
        gains[k] = c / alpha;
    }
    return GainVector(std::move(gains));
}

PerturbationBounds perturbation_bounds(const HeadingVector& theta0, double eta)
{
    if (!(eta >= 0.0 && eta < 1.0)) throw AnalysisError("eta must lie in [0, 1)");
    const auto frame = acute_frame(theta0);

    PerturbationBounds b;
    b.eta = eta;
    b.theta_R = frame.theta_R;
    b.mean_direction_hat = mean(frame.theta_hat0);
    b.delta_lower = 2.0 * eta / (1.0 + eta) * b.mean_direction_hat;
    b.delta_upper = 2.0 * eta / (1.0 - eta) * b.mean_direction_hat;

    const double lo = b.mean_direction_hat - b.delta_lower;
    const double hi = b.mean_direction_hat + b.delta_upper;
    auto& a = b.admissible_hat;
    a.lower = std::max(0.0, lo);
    a.lower_open = lo <= 0.0;
    a.upper = std::min(frame.span, hi);
    a.upper_open = hi >= frame.span;
    return b;
}

std::vector<double> sample_perturbed_directions(const HeadingVector& theta0, double nominal_gain, double eta,
                                                std::size_t samples, std::mt19937_64& rng)
{
    if (!(nominal_gain < 0.0)) throw AnalysisError("nominal gain must be negative");
    if (!(eta >= 0.0 && eta < 1.0)) throw AnalysisError("eta must lie in [0, 1)");
    const auto frame = acute_frame(theta0);
    std::uniform_real_distribution<double> err(-eta, eta);
    std::vector<double> out;
    out.reserve(samples);
    std::vector<double> k(theta0.size());
    for (std::size_t s = 0; s < samples; ++s) {
        for (double& g : k) g = nominal_gain * (1.0 + err(rng));
        out.push_back(predict_direction_hat(frame, GainVector(k)));
    }
    return out;
}

double two_agent_direction(const HeadingVector& theta0, const GainVector& gains)
{
    if (theta0.size() != 2 || gains.size() != 2) throw AnalysisError("two-agent law needs exactly 2 agents");
    const double sum = gains[0] + gains[1];
    if (!(sum < 0.0)) throw AnalysisError("two-agent law needs K_1 + K_2 < 0");
    const auto frame = rotated_frame(theta0);
    if (!frame.acute) throw AnalysisError("balanced two-agent start (headings antipodal) never synchronizes");
    const auto& h = frame.theta_hat0;
    return frame.to_standard((gains[1] * h[0] + gains[0] * h[1]) / sum);
}

GainVector two_agent_gains(const HeadingVector& theta0, double target)
{
    if (theta0.size() != 2) throw AnalysisError("two-agent gains need exactly 2 agents");
    const auto frame = rotated_frame(theta0);
    if (!frame.acute) throw AnalysisError("balanced two-agent start (headings antipodal) never synchronizes");
    const double t_hat = frame.to_hat(target);

    if (frame.span <= kEndpointEps) {
        if (std::abs(t_hat) <= kEndpointEps) return GainVector({-1.0, -1.0});
        throw AnalysisError("agents share one heading; no other direction is reachable");
    }

    const std::size_t lo = frame.min_index();
    const std::size_t hi = 1 - lo;
    const double span = frame.span;
    std::vector<double> k(2);
    if (t_hat > kEndpointEps && t_hat < span - kEndpointEps) {
        // Both negative: K = c / alpha with c = -1.
        const double alpha_hi = t_hat / span;
        k[lo] = -1.0 / (1.0 - alpha_hi);
        k[hi] = -1.0 / alpha_hi;
    } else if (t_hat < -kEndpointEps) {
        // Beyond the lower ray: K_lo = beta / c >= 0, K_hi = -(1 + beta) / c, c = 1.
        const double beta = -t_hat / span;
        k[lo] = beta;
        k[hi] = -(1.0 + beta);
    } else if (t_hat > span + kEndpointEps) {
        // Beyond the upper ray: K_lo = -(1 + gamma) / c, K_hi = gamma / c, c = 1.
        const double gamma = (t_hat - span) / span;
        k[lo] = -(1.0 + gamma);
        k[hi] = gamma;
    } else {
        throw AnalysisError("targets on an initial heading need a zero gain, which is not allowed");
    }
    return GainVector(std::move(k));
}

Eigen::MatrixXd hessian_negated(const HeadingVector& theta)
{
    const auto n = static_cast<Eigen::Index>(theta.size());
    const double inv_n = 1.0 / static_cast<double>(n);
    const auto p = order_parameter(theta).value;
    Eigen::MatrixXd h(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto tj = theta[static_cast<std::size_t>(j)];
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto tk = theta[static_cast<std::size_t>(k)];
            h(j, k) = j == k ? inv_n - std::real(std::conj(p) * std::polar(1.0, tk)) : inv_n * std::cos(tj - tk);
        }
    }
    return h;
}

CriticalPointConfig classify_critical_point(const HeadingVector& theta)
{
    const auto g = grad_U(theta);
    const double worst = std::abs(*std::max_element(g.begin(), g.end(), [](double a, double b) {
        return std::abs(a) < std::abs(b);
    }));
    if (worst > 1e-8) throw AnalysisError("configuration is not a critical point of U (max |dU/dtheta| = " +
                                          std::to_string(worst) + ")");

    CriticalPointConfig c;
    const auto p = order_parameter(theta);
    c.p_mag = p.magnitude;
    if (p.magnitude < 1e-8) {
        c.kind = CriticalKind::balanced_maximum;
        return c;
    }

    const double psi = *p.mean_phase;
    std::vector<std::size_t> aligned;
    std::size_t opposite = 0;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        if (std::cos(psi - theta[k]) < 0.0)
            ++opposite;
        else
            aligned.push_back(k);
    }
    c.m = opposite;
    if (opposite == 0) {
        c.kind = CriticalKind::sync_minimum;
        return c;
    }

    // Two agents in the aligned group give q with w^T q = 0, so q^T H q = -2|p|.
    c.kind = CriticalKind::saddle;
    if (aligned.size() < 2) return c;
    c.witness_vector.assign(theta.size(), 0.0);
    c.witness_vector[aligned[aligned.size() - 2]] = -1.0;
    c.witness_vector[aligned.back()] = 1.0;
    const Eigen::Map<const Eigen::VectorXd> q(c.witness_vector.data(), static_cast<Eigen::Index>(theta.size()));
    c.witness = q.dot(hessian_negated(theta) * q);
    return c;
}

bool conic_hull_contains(const HeadingVector& theta0, std::complex<double> p)
{
    const auto frame = acute_frame(theta0);
    const double r = std::abs(p);
    if (r > 1.0 + 1e-12) return false;
    if (r == 0.0) return true;
    constexpr double tol = 1e-9;
    const double rel = wrap_two_pi(std::arg(p) - frame.theta_R);
    return rel <= frame.span + tol || rel >= kTwoPi - tol;
}

}  // namespace swarmsync
