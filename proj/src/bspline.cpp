#include "anibes/bspline.hpp"

#include <cmath>
#include <stdexcept>

namespace anibes {

double cardinal_bspline(int m, double x) {
    if (m < 0) throw std::invalid_argument("spline order must be >= 0");
    if (x <= 0.0 || x >= static_cast<double>(m + 1)) return 0.0;
    if (m == 0) return 1.0;

    // Cox-de Boor triangle on the integer knots. Seed at degree 0 with the
    // cell [i0, i0+1) containing x; at stage p, v[c] holds N_{i0-p+c, p}(x).
    int i0 = static_cast<int>(std::floor(x));
    if (i0 > m) i0 = m;
    std::vector<double> v(static_cast<std::size_t>(m) + 1, 0.0);
    v[0] = 1.0;
    for (int p = 1; p <= m; ++p) {
        for (int c = p; c >= 0; --c) {
            const int i = i0 - p + c;
            const double prev_lo = (c >= 1) ? v[static_cast<std::size_t>(c) - 1] : 0.0;
            const double prev_hi = (c <= p - 1) ? v[static_cast<std::size_t>(c)] : 0.0;
            v[static_cast<std::size_t>(c)] =
                (x - i) / p * prev_lo + (i + p + 1 - x) / p * prev_hi;
        }
    }
    return v[static_cast<std::size_t>(m - i0)];
}

double tensor_basis_dilated(int m, std::span<const int> dilation_exp, std::span<const int> j,
                            std::span<const double> x) {
    if (dilation_exp.size() != j.size() || j.size() != x.size()) {
        throw std::invalid_argument("tensor basis: dimension mismatch between j and x");
    }
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double scale = std::ldexp(1.0, dilation_exp[i]);
        prod *= cardinal_bspline(m, scale * x[i] - static_cast<double>(j[i]));
        if (prod == 0.0) return 0.0;
    }
    return prod;
}

double tensor_basis(int m, const SmoothnessVec& beta, int k, std::span<const int> j,
                    std::span<const double> x) {
    if (beta.dim() != static_cast<int>(x.size())) {
        throw std::invalid_argument("tensor basis: beta dimension does not match x");
    }
    const std::vector<int> e = beta.dilation_exps(k);
    return tensor_basis_dilated(m, e, j, x);
}

LevelIndexSet::LevelIndexSet(int m, const SmoothnessVec& beta, int k, std::uint64_t cap) {
    if (k < 0) throw std::invalid_argument("level must be >= 0");
    if (m < 0) throw std::invalid_argument("spline order must be >= 0");
    const int d = beta.dim();
    lo_.assign(static_cast<std::size_t>(d), -m);
    hi_.resize(static_cast<std::size_t>(d));
    size_ = 1;
    for (int i = 0; i < d; ++i) {
        const int e = beta.dilation_exp(k, i);
        if (e >= 62) throw std::overflow_error("level index set: dilation exponent too large");
        hi_[static_cast<std::size_t>(i)] = static_cast<int>(1LL << e);
        const std::uint64_t extent = (1ULL << e) + static_cast<std::uint64_t>(m) + 1ULL;
        if (size_ > cap / extent) {
            throw std::overflow_error("level index set cardinality exceeds configured cap");
        }
        size_ *= extent;
    }
}

bool LevelIndexSet::contains(std::span<const int> j) const {
    if (static_cast<int>(j.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        if (j[static_cast<std::size_t>(i)] < lo(i) || j[static_cast<std::size_t>(i)] > hi(i)) {
            return false;
        }
    }
    return true;
}

LevelIndexSet::iterator::iterator(const LevelIndexSet* set, bool at_end)
    : set_(set), done_(at_end) {
    if (!done_) {
        current_.resize(static_cast<std::size_t>(set_->dim()));
        for (int i = 0; i < set_->dim(); ++i) current_[static_cast<std::size_t>(i)] = set_->lo(i);
    }
}

LevelIndexSet::iterator& LevelIndexSet::iterator::operator++() {
    // odometer, last dimension fastest
    for (int i = set_->dim() - 1; i >= 0; --i) {
        auto& digit = current_[static_cast<std::size_t>(i)];
        if (digit < set_->hi(i)) {
            ++digit;
            return *this;
        }
        digit = set_->lo(i);
    }
    done_ = true;
    return *this;
}

ActiveRange active_locations(int m, int dilation_exp, double x) {
    const double s = std::ldexp(1.0, dilation_exp) * x;
    // N_m(s - j) != 0 iff s - m - 1 < j < s
    int first = static_cast<int>(std::floor(s - m - 1)) + 1;
    int last = static_cast<int>(std::ceil(s)) - 1;
    if (first < -m) first = -m;
    const int hi = static_cast<int>(1LL << dilation_exp);
    if (last > hi) last = hi;
    return {first, last};
}

}  // namespace anibes
