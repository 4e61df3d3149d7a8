#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace swarmsync {

enum class GainClass {
    all_negative,        // every K_k < 0
    mixed_sum_negative,  // sum K_k < 0 with some K_k > 0
    other,
};

/// Per-agent controller gains K_k. Zero and non-finite gains are rejected.
class GainVector {
public:
    GainVector() = default;
    explicit GainVector(std::vector<double> gains);

    /// Named gain families used in the reference simulations, sized for n agents:
    ///   set1: K_k = -k         set2: K_k = -1/k
    ///   set3: K_1 = 0.5, K_k = -k for k >= 2
    ///   set4: K_k = -0.1/k
    static GainVector named(std::string_view name, std::size_t n);

    std::size_t size() const noexcept { return gains_.size(); }
    double operator[](std::size_t k) const noexcept { return gains_[k]; }
    std::span<const double> values() const noexcept { return gains_; }
    const std::vector<double>& vector() const noexcept { return gains_; }
    auto begin() const noexcept { return gains_.begin(); }
    auto end() const noexcept { return gains_.end(); }

    GainClass classification() const noexcept { return class_; }
    bool all_negative() const noexcept { return class_ == GainClass::all_negative; }
    double sum() const noexcept;
    /// sum_k 1/K_k
    double inverse_sum() const noexcept;

private:
    std::vector<double> gains_;
    GainClass class_ = GainClass::other;
};

std::string_view to_string(GainClass c) noexcept;

}  // namespace swarmsync
