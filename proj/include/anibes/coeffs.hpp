#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "anibes/bspline.hpp"
#include "anibes/errors.hpp"
#include "anibes/smoothness.hpp"

namespace anibes {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// 1/p with the usual convention 1/inf = 0.
inline double inv_exp(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

/// Parameters of the anisotropic space B^beta_{p,q} together with the spline
/// order m of the representation basis and the error norm index r.
class BesovParams {
public:
    BesovParams(SmoothnessVec beta, int m, double p, double q, double r = 2.0);

    [[nodiscard]] const SmoothnessVec& beta() const noexcept { return beta_; }
    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double q() const noexcept { return q_; }
    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] int dim() const noexcept { return beta_.dim(); }

    /// delta = (1/p - 1/r)_+, the adaptivity gap.
    [[nodiscard]] double delta() const;

    /// Admissibility of the approximation pipeline: beta_tilde > delta and
    /// 0 < beta_max < min(m, m-1+1/p). Checked where plans and projections
    /// are configured; target generation only needs the raw fields.
    [[nodiscard]] bool admissible(std::string* why = nullptr) const;
    void require_admissible() const;

private:
    SmoothnessVec beta_;
    int m_;
    double p_, q_, r_;
};

/// Geometry of one resolution level: dilation exponents, index bounds and the
/// mixed-radix encoding of locations within J(k).
struct LevelGeom {
    int k = 0;
    std::vector<int> e;
    std::vector<int> lo;
    std::vector<int> hi;
    std::vector<std::uint64_t> stride;
    std::uint64_t count = 0;

    LevelGeom() = default;
    LevelGeom(const SmoothnessVec& beta, int m, int k,
              std::uint64_t cap = LevelIndexSet::kDefaultCap);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(e.size()); }
    [[nodiscard]] bool contains(std::span<const int> j) const;
    [[nodiscard]] std::uint64_t encode(std::span<const int> j) const;
    [[nodiscard]] std::vector<int> decode(std::uint64_t idx) const;
};

/// Sparse level-indexed coefficient set (k, j) -> alpha of a B-spline series.
/// Entries are held per level keyed by the mixed-radix location index, so
/// iteration is deterministic (levels ascending, locations lexicographic).
class SparseCoeffs {
public:
    explicit SparseCoeffs(BesovParams params);

    [[nodiscard]] const BesovParams& params() const noexcept { return params_; }
    [[nodiscard]] int dim() const noexcept { return params_.dim(); }

    void set(int k, std::span<const int> j, double alpha);
    void add(int k, std::span<const int> j, double alpha);
    [[nodiscard]] double get(int k, std::span<const int> j) const;

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const { return size() == 0; }
    [[nodiscard]] int max_level() const;
    [[nodiscard]] std::vector<int> levels() const;
    [[nodiscard]] const std::map<std::uint64_t, double>* level_entries(int k) const;
    [[nodiscard]] const LevelGeom& level_geom(int k) const;

    /// Multiply every coefficient by c.
    void scale(double c);

    /// Remove entries with |alpha| <= tol.
    void prune(double tol = 0.0);

    /// Series evaluation at a point, touching only the locally active window
    /// of at most (m+1)^d entries per populated level.
    [[nodiscard]] double evaluate(std::span<const double> x) const;

    /// Geometry accessor for levels not yet populated.
    [[nodiscard]] LevelGeom make_geom(int k) const;

private:
    BesovParams params_;
    std::map<int, std::map<std::uint64_t, double>> levels_;
    mutable std::map<int, LevelGeom> geoms_;
    const LevelGeom& geom(int k) const;
};

/// ||(alpha_{k,j})||_{b^beta_{p,q}} with level weights 2^{k*beta_min - ||k||/p};
/// p or q = inf switch the inner/outer sums to suprema.
double sequence_norm(const SparseCoeffs& coeffs);

/// Line-oriented text format:
///   besov-coeffs v1; d=<d>; m=<m>; beta=<csv>
///   k j1 ... jd alpha
std::string save_coeffs(const SparseCoeffs& coeffs);
SparseCoeffs load_coeffs(const std::string& text, double p, double q, double r = 2.0);

}  // namespace anibes
