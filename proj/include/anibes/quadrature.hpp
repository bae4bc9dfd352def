#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace anibes {

using RealFn = std::function<double(std::span<const double>)>;

/// How an L^r functional over [0,1]^d is discretized.
struct QuadratureSpec {
    enum class Kind { TensorGrid, MonteCarlo };
    Kind kind = Kind::MonteCarlo;
    int grid_per_dim = 256;       // tensor grid resolution (d <= 3)
    std::int64_t n_mc = 100'000;  // Monte Carlo sample count
    std::uint64_t seed = 42;

    static QuadratureSpec grid(int per_dim) {
        QuadratureSpec s;
        s.kind = Kind::TensorGrid;
        s.grid_per_dim = per_dim;
        return s;
    }
    static QuadratureSpec mc(std::int64_t n, std::uint64_t seed) {
        QuadratureSpec s;
        s.kind = Kind::MonteCarlo;
        s.n_mc = n;
        s.seed = seed;
        return s;
    }
};

/// Evaluation points in [0,1]^d for a spec, flattened row-major (point-major).
std::vector<double> quadrature_points(const QuadratureSpec& spec, int d);

/// (mean_x |f(x)|^r)^{1/r} over the spec's points; r = inf takes the max.
double lr_norm(const RealFn& f, int d, double r, const QuadratureSpec& spec);

/// First n points of the d-dimensional Sobol sequence in [0,1]^d (d <= 40).
std::vector<double> sobol_points(int d, std::size_t n);

/// n uniform points in [0,1]^d from a seeded mt19937_64, point-major.
std::vector<double> uniform_points(int d, std::int64_t n, std::uint64_t seed);

}  // namespace anibes
