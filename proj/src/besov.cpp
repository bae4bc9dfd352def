#include "anibes/besov.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace anibes {

namespace {

struct DimBasis {
    int lo = 0;
    int s = 0;  // number of basis functions in this dimension
    Eigen::MatrixXd colloc;  // grid points x basis functions
    Eigen::LDLT<Eigen::MatrixXd> gram;
    double cond = 1.0;
};

// Tensor values are stored flat with the last dimension fastest, matching
// LevelGeom's location encoding.
std::vector<double> ttm(const std::vector<double>& in, std::vector<std::size_t>& dims, int axis,
                        const Eigen::MatrixXd& a, bool transpose) {
    const std::size_t n_in = dims[static_cast<std::size_t>(axis)];
    const std::size_t n_out =
        transpose ? static_cast<std::size_t>(a.cols()) : static_cast<std::size_t>(a.rows());
    std::size_t left = 1;
    std::size_t right = 1;
    for (int i = 0; i < axis; ++i) left *= dims[static_cast<std::size_t>(i)];
    for (std::size_t i = static_cast<std::size_t>(axis) + 1; i < dims.size(); ++i) {
        right *= dims[i];
    }
    std::vector<double> out(left * n_out * right);
    Eigen::VectorXd fiber(static_cast<Eigen::Index>(n_in));
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t r = 0; r < right; ++r) {
            const std::size_t base_in = l * n_in * right + r;
            for (std::size_t i = 0; i < n_in; ++i) {
                fiber(static_cast<Eigen::Index>(i)) = in[base_in + i * right];
            }
            Eigen::VectorXd res = transpose ? Eigen::VectorXd(a.transpose() * fiber)
                                            : Eigen::VectorXd(a * fiber);
            const std::size_t base_out = l * n_out * right + r;
            for (std::size_t i = 0; i < n_out; ++i) {
                out[base_out + i * right] = res(static_cast<Eigen::Index>(i));
            }
        }
    }
    dims[static_cast<std::size_t>(axis)] = n_out;
    return out;
}

void solve_axis(std::vector<double>& data, const std::vector<std::size_t>& dims, int axis,
                const Eigen::LDLT<Eigen::MatrixXd>& gram) {
    const std::size_t n = dims[static_cast<std::size_t>(axis)];
    std::size_t left = 1;
    std::size_t right = 1;
    for (int i = 0; i < axis; ++i) left *= dims[static_cast<std::size_t>(i)];
    for (std::size_t i = static_cast<std::size_t>(axis) + 1; i < dims.size(); ++i) {
        right *= dims[i];
    }
    Eigen::VectorXd fiber(static_cast<Eigen::Index>(n));
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t r = 0; r < right; ++r) {
            const std::size_t base = l * n * right + r;
            for (std::size_t i = 0; i < n; ++i) {
                fiber(static_cast<Eigen::Index>(i)) = data[base + i * right];
            }
            Eigen::VectorXd res = gram.solve(fiber);
            for (std::size_t i = 0; i < n; ++i) {
                data[base + i * right] = res(static_cast<Eigen::Index>(i));
            }
        }
    }
}

// Projection machinery for one level on a shared tensor grid.
class LevelSolver {
public:
    LevelSolver(const BesovParams& params, int k, const std::vector<std::vector<double>>& grid)
        : geom_(params.beta(), params.m(), k) {
        const int d = params.dim();
        const int m = params.m();
        dims_.reserve(static_cast<std::size_t>(d));
        basis_.resize(static_cast<std::size_t>(d));
        double cond_total = 1.0;
        for (int i = 0; i < d; ++i) {
            DimBasis& b = basis_[static_cast<std::size_t>(i)];
            b.lo = geom_.lo[static_cast<std::size_t>(i)];
            b.s = geom_.hi[static_cast<std::size_t>(i)] - geom_.lo[static_cast<std::size_t>(i)] + 1;
            const auto& xs = grid[static_cast<std::size_t>(i)];
            const double scale = std::ldexp(1.0, geom_.e[static_cast<std::size_t>(i)]);
            b.colloc.setZero(static_cast<Eigen::Index>(xs.size()), b.s);
            for (std::size_t t = 0; t < xs.size(); ++t) {
                for (int c = 0; c < b.s; ++c) {
                    b.colloc(static_cast<Eigen::Index>(t), c) =
                        cardinal_bspline(m, scale * xs[t] - static_cast<double>(b.lo + c));
                }
            }
            Eigen::MatrixXd g = b.colloc.transpose() * b.colloc;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
            const double lmax = es.eigenvalues().maxCoeff();
            const double lmin = es.eigenvalues().minCoeff();
            b.cond = (lmin > 0.0) ? lmax / lmin : std::numeric_limits<double>::infinity();
            cond_total *= b.cond;
            b.gram.compute(g);
            dims_.push_back(xs.size());
        }
        if (!(cond_total <= 1e12)) {
            throw NumericError("quasi-projection Gram system ill-conditioned at level " +
                               std::to_string(k) + " (condition estimate " +
                               std::to_string(cond_total) + ")");
        }
    }

    [[nodiscard]] const LevelGeom& geom() const noexcept { return geom_; }

    /// Least-squares coefficients over J(k) for grid samples `values`.
    [[nodiscard]] std::vector<double> project(const std::vector<double>& values) const {
        std::vector<double> acc = values;
        std::vector<std::size_t> dims = dims_;
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            acc = ttm(acc, dims, i, basis_[static_cast<std::size_t>(i)].colloc, true);
        }
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            solve_axis(acc, dims, i, basis_[static_cast<std::size_t>(i)].gram);
        }
        return acc;
    }

    /// Grid values of the level-k expansion with the given coefficients.
    [[nodiscard]] std::vector<double> expand(const std::vector<double>& coeffs) const {
        std::vector<double> acc = coeffs;
        std::vector<std::size_t> dims;
        dims.reserve(basis_.size());
        for (const auto& b : basis_) dims.push_back(static_cast<std::size_t>(b.s));
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
            acc = ttm(acc, dims, i, basis_[static_cast<std::size_t>(i)].colloc, false);
        }
        return acc;
    }

private:
    LevelGeom geom_;
    std::vector<DimBasis> basis_;
    std::vector<std::size_t> dims_;
};

std::vector<std::vector<double>> make_grid(const BesovParams& params, int grid_level,
                                           int oversample) {
    const int d = params.dim();
    const int m = params.m();
    std::vector<std::vector<double>> grid(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const int e = params.beta().dilation_exp(grid_level, i);
        const std::size_t n =
            static_cast<std::size_t>(oversample) * ((1ULL << e) + static_cast<std::size_t>(m) + 1);
        auto& xs = grid[static_cast<std::size_t>(i)];
        xs.resize(n);
        for (std::size_t t = 0; t < n; ++t) {
            xs[t] = (static_cast<double>(t) + 0.5) / static_cast<double>(n);
        }
    }
    return grid;
}

std::vector<double> eval_on_grid(const RealFn& f, const std::vector<std::vector<double>>& grid) {
    const int d = static_cast<int>(grid.size());
    std::size_t total = 1;
    for (const auto& xs : grid) total *= xs.size();
    std::vector<double> values(total);
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> x(static_cast<std::size_t>(d));
    for (std::size_t p = 0; p < total; ++p) {
        for (int i = 0; i < d; ++i) {
            x[static_cast<std::size_t>(i)] =
                grid[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
        }
        values[p] = f(x);
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[static_cast<std::size_t>(i)] < grid[static_cast<std::size_t>(i)].size()) {
                break;
            }
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    return values;
}

}  // namespace

std::vector<double> quasi_project(const RealFn& f, int k, const BesovParams& params,
                                  int oversample, int grid_level) {
    if (k < 0) throw ConfigError("quasi_project: level must be >= 0");
    params.require_admissible();
    const int gl = std::max(k, grid_level);
    const auto grid = make_grid(params, gl, oversample);
    LevelSolver solver(params, k, grid);
    return solver.project(eval_on_grid(f, grid));
}

SparseCoeffs telescoped_coeffs(const RealFn& f, int K_max, const BesovParams& params,
                               int oversample) {
    if (K_max < 0) throw ConfigError("telescoped_coeffs: K_max must be >= 0");
    params.require_admissible();
    const auto grid = make_grid(params, K_max, oversample);
    const std::vector<double> f_vals = eval_on_grid(f, grid);

    SparseCoeffs out(params);
    std::vector<double> prev_grid(f_vals.size(), 0.0);
    for (int k = 0; k <= K_max; ++k) {
        LevelSolver solver(params, k, grid);
        const std::vector<double> a_k = solver.project(f_vals);
        std::vector<double> alpha = a_k;
        if (k > 0) {
            const std::vector<double> c_k = solver.project(prev_grid);
            for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] -= c_k[i];
        }
        const LevelGeom& g = solver.geom();
        for (std::size_t idx = 0; idx < alpha.size(); ++idx) {
            if (std::fabs(alpha[idx]) > 1e-14) {
                out.set(k, g.decode(idx), alpha[idx]);
            }
        }
        if (k < K_max) prev_grid = solver.expand(a_k);
    }
    return out;
}

double difference_norm(const RealFn& f, int r_order, std::span<const double> h, double p,
                       std::span<const double> points, int d) {
    if (r_order < 1) throw ConfigError("difference order must be >= 1");
    std::vector<double> binom(static_cast<std::size_t>(r_order) + 1, 1.0);
    for (int i = 1; i <= r_order; ++i) {
        binom[static_cast<std::size_t>(i)] =
            binom[static_cast<std::size_t>(i) - 1] * (r_order - i + 1) / i;
    }
    const std::size_t n = points.size() / static_cast<std::size_t>(d);
    std::vector<double> shifted(static_cast<std::size_t>(d));
    double acc = 0.0;
    double mx = 0.0;
    for (std::size_t pt = 0; pt < n; ++pt) {
        const double* x = points.data() + pt * static_cast<std::size_t>(d);
        bool inside = true;
        for (int i = 0; i < d; ++i) {
            const double endpoint = x[i] + r_order * h[static_cast<std::size_t>(i)];
            if (endpoint < 0.0 || endpoint > 1.0) {
                inside = false;
                break;
            }
        }
        double delta = 0.0;
        if (inside) {
            for (int i = 0; i <= r_order; ++i) {
                for (int c = 0; c < d; ++c) {
                    shifted[static_cast<std::size_t>(c)] = x[c] + i * h[static_cast<std::size_t>(c)];
                }
                const double sign = ((r_order - i) % 2 == 0) ? 1.0 : -1.0;
                delta += sign * binom[static_cast<std::size_t>(i)] * f(shifted);
            }
        }
        if (std::isinf(p)) {
            mx = std::max(mx, std::fabs(delta));
        } else {
            acc += std::pow(std::fabs(delta), p);
        }
    }
    if (std::isinf(p)) return mx;
    return n == 0 ? 0.0 : std::pow(acc / static_cast<double>(n), 1.0 / p);
}

double modulus_of_smoothness(const RealFn& f, int r_order, std::span<const double> t, double p,
                             std::int64_t n_samples, std::uint64_t seed) {
    const int d = static_cast<int>(t.size());
    for (double ti : t) {
        if (!(ti > 0.0)) throw ConfigError("modulus: t entries must be positive");
    }
    const std::vector<double> xs = uniform_points(d, n_samples, seed);

    constexpr std::size_t kSobolDirections = 1U << 12;
    const std::vector<double> dirs = sobol_points(d, kSobolDirections);
    std::vector<double> h(static_cast<std::size_t>(d));
    double best = 0.0;
    for (std::size_t s = 0; s < kSobolDirections; ++s) {
        for (int i = 0; i < d; ++i) {
            const double u = dirs[s * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)];
            h[static_cast<std::size_t>(i)] = (2.0 * u - 1.0) * t[static_cast<std::size_t>(i)];
        }
        best = std::max(best, difference_norm(f, r_order, h, p, xs, d));
    }
    // axis-aligned extremes
    for (int axis = 0; axis < d; ++axis) {
        for (double sign : {1.0, -1.0}) {
            std::fill(h.begin(), h.end(), 0.0);
            h[static_cast<std::size_t>(axis)] = sign * t[static_cast<std::size_t>(axis)];
            best = std::max(best, difference_norm(f, r_order, h, p, xs, d));
        }
    }
    return best;
}

}  // namespace anibes
