#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace anibes {

/// Anisotropic smoothness vector with the derived quantities used throughout:
/// beta_min, beta_max, the harmonic mean beta_tilde = (sum_j 1/beta_j)^-1,
/// and beta_prime_i = beta_min / beta_i (the per-direction dilation rates).
class SmoothnessVec {
public:
    explicit SmoothnessVec(std::vector<double> beta);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(beta_.size()); }
    [[nodiscard]] const std::vector<double>& beta() const noexcept { return beta_; }
    [[nodiscard]] double beta(int i) const { return beta_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] double beta_min() const noexcept { return beta_min_; }
    [[nodiscard]] double beta_max() const noexcept { return beta_max_; }
    [[nodiscard]] double beta_tilde() const noexcept { return beta_tilde_; }
    [[nodiscard]] const std::vector<double>& beta_prime() const noexcept { return beta_prime_; }

    /// floor(k * beta_min / beta_i), the dyadic dilation exponent of level k in
    /// direction i. Computed with an integer snap so that quotients that are
    /// mathematically integral (e.g. k*beta_min == beta_i) do not fall to the
    /// next lower integer through rounding.
    [[nodiscard]] int dilation_exp(int level, int i) const;

    /// All d dilation exponents of a level.
    [[nodiscard]] std::vector<int> dilation_exps(int level) const;

    /// ||k||_{beta_min/beta} = sum_i floor(k * beta_min / beta_i).
    [[nodiscard]] std::int64_t level_norm(int level) const;

    friend bool operator==(const SmoothnessVec&, const SmoothnessVec&) = default;

private:
    std::vector<double> beta_;
    std::vector<double> beta_prime_;
    double beta_min_ = 0.0;
    double beta_max_ = 0.0;
    double beta_tilde_ = 0.0;
};

/// floor(x) with a relative snap to the nearest integer; guards level-norm
/// arithmetic against k*(a/b) landing one ulp below an exact integer.
std::int64_t robust_floor(double x);

}  // namespace anibes
