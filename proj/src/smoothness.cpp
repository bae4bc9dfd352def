#include "anibes/smoothness.hpp"

#include <algorithm>
#include <limits>

namespace anibes {

std::int64_t robust_floor(double x) {
    const double r = std::nearbyint(x);
    const double tol = 1e-9 * std::max(1.0, std::fabs(x));
    if (std::fabs(x - r) <= tol) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::floor(x));
}

SmoothnessVec::SmoothnessVec(std::vector<double> beta) : beta_(std::move(beta)) {
    if (beta_.empty()) throw std::invalid_argument("smoothness vector must be nonempty");
    double inv_sum = 0.0;
    beta_min_ = std::numeric_limits<double>::infinity();
    beta_max_ = 0.0;
    for (double b : beta_) {
        if (!(b > 0.0)) throw std::invalid_argument("smoothness entries must be positive");
        inv_sum += 1.0 / b;  // 1/inf == 0 handles directions of unbounded smoothness
        beta_min_ = std::min(beta_min_, b);
        beta_max_ = std::max(beta_max_, b);
    }
    beta_tilde_ = 1.0 / inv_sum;
    beta_prime_.reserve(beta_.size());
    for (double b : beta_) beta_prime_.push_back(beta_min_ / b);
}

int SmoothnessVec::dilation_exp(int level, int i) const {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    const double b = beta_.at(static_cast<std::size_t>(i));
    return static_cast<int>(robust_floor(static_cast<double>(level) * beta_min_ / b));
}

std::vector<int> SmoothnessVec::dilation_exps(int level) const {
    std::vector<int> e(beta_.size());
    for (int i = 0; i < dim(); ++i) e[static_cast<std::size_t>(i)] = dilation_exp(level, i);
    return e;
}

std::int64_t SmoothnessVec::level_norm(int level) const {
    std::int64_t s = 0;
    for (int i = 0; i < dim(); ++i) s += dilation_exp(level, i);
    return s;
}

}  // namespace anibes
