#include "swarmsync/gains.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swarmsync {

GainVector::GainVector(std::vector<double> gains) : gains_(std::move(gains))
{
    for (std::size_t k = 0; k < gains_.size(); ++k) {
        if (!std::isfinite(gains_[k]))
            throw std::invalid_argument("gain K_" + std::to_string(k + 1) + " is not finite");
        if (gains_[k] == 0.0)
            throw std::invalid_argument("gain K_" + std::to_string(k + 1) + " is zero");
    }
    if (!gains_.empty() && std::all_of(gains_.begin(), gains_.end(), [](double g) { return g < 0.0; }))
        class_ = GainClass::all_negative;
    else if (!gains_.empty() && sum() < 0.0)
        class_ = GainClass::mixed_sum_negative;
    else
        class_ = GainClass::other;
}

GainVector GainVector::named(std::string_view name, std::size_t n)
{
    if (n < 2) throw std::invalid_argument("named gain set needs n >= 2");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = static_cast<double>(i + 1);
        if (name == "set1")
            g[i] = -k;
        else if (name == "set2")
            g[i] = -1.0 / k;
        else if (name == "set3")
            g[i] = i == 0 ? 0.5 : -k;
        else if (name == "set4")
            g[i] = -0.1 / k;
        else
            throw std::invalid_argument("unknown gain set '" + std::string(name) + "'");
    }
    return GainVector(std::move(g));
}

double GainVector::sum() const noexcept { return std::accumulate(gains_.begin(), gains_.end(), 0.0); }

double GainVector::inverse_sum() const noexcept
{
    double s = 0.0;
    for (double g : gains_) s += 1.0 / g;
    return s;
}

std::string_view to_string(GainClass c) noexcept
{
    switch (c) {
    case GainClass::all_negative: return "all_negative";
    case GainClass::mixed_sum_negative: return "mixed_sum_negative";
    case GainClass::other: return "other";
    }
    return "other";
}

}  // namespace swarmsync
