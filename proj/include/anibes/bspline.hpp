#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anibes/smoothness.hpp"

namespace anibes {

/// Cardinal B-spline N_m on the uniform knots 0,1,...,m+1, evaluated with the
/// Cox-de Boor recursion. N_0 is the unit indicator; N_m is the (m+1)-fold
/// convolution of it, a degree-m piecewise polynomial supported on [0, m+1].
/// Returns exactly 0 for x <= 0 or x >= m+1.
double cardinal_bspline(int m, double x);

/// Resolution level plus location multi-index of one tensor basis function.
struct LevelLocation {
    int k = 0;
    std::vector<int> j;
};

/// M_{k,j}(x) = prod_i N_m(2^{e_i(k)} x_i - j_i) with e_i(k) = floor(k*beta'_i).
double tensor_basis(int m, const SmoothnessVec& beta, int k, std::span<const int> j,
                    std::span<const double> x);

/// Same, with the dilation exponents already expanded (hot path).
double tensor_basis_dilated(int m, std::span<const int> dilation_exp, std::span<const int> j,
                            std::span<const double> x);

/// Lazy enumeration of the level-k location lattice
/// J(k) = X_i {-m, ..., 2^{e_i(k)}}. Cardinality prod_i (2^{e_i}+m+1) is
/// checked against a cap before iteration starts.
class LevelIndexSet {
public:
    LevelIndexSet(int m, const SmoothnessVec& beta, int k,
                  std::uint64_t cardinality_cap = kDefaultCap);

    static constexpr std::uint64_t kDefaultCap = 100'000'000ULL;

    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(lo_.size()); }
    [[nodiscard]] int lo(int i) const { return lo_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] int hi(int i) const { return hi_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] bool contains(std::span<const int> j) const;

    class iterator {
    public:
        using value_type = std::vector<int>;

        iterator() = default;
        iterator(const LevelIndexSet* set, bool at_end);

        const std::vector<int>& operator*() const { return current_; }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        const LevelIndexSet* set_ = nullptr;
        std::vector<int> current_;
        bool done_ = true;
    };

    [[nodiscard]] iterator begin() const { return iterator(this, size_ == 0); }
    [[nodiscard]] iterator end() const { return iterator(this, true); }

private:
    std::vector<int> lo_;
    std::vector<int> hi_;
    std::uint64_t size_ = 0;
};

/// Range of locations j whose basis is nonzero at coordinate value x_i on a
/// level with dilation exponent e: the at most m+1 integers in
/// (2^e x - m - 1, 2^e x) intersected with [-m, 2^e].
struct ActiveRange {
    int first = 0;
    int last = -1;  // inclusive; empty when last < first
};
ActiveRange active_locations(int m, int dilation_exp, double x);

}  // namespace anibes
