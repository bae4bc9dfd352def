#include "anibes/quadrature.hpp"

#include <gsl/gsl_qrng.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "anibes/errors.hpp"

namespace anibes {

std::vector<double> sobol_points(int d, std::size_t n) {
    if (d < 1 || d > 40) throw ConfigError("sobol_points: dimension must be in [1, 40]");
    std::unique_ptr<gsl_qrng, decltype(&gsl_qrng_free)> q(
        gsl_qrng_alloc(gsl_qrng_sobol, static_cast<unsigned>(d)), gsl_qrng_free);
    if (!q) throw NumericError("sobol_points: allocation failed");
    std::vector<double> pts(n * static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < n; ++i) {
        gsl_qrng_get(q.get(), pts.data() + i * static_cast<std::size_t>(d));
    }
    return pts;
}

std::vector<double> uniform_points(int d, std::int64_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> pts(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (double& v : pts) v = unit(rng);
    return pts;
}

std::vector<double> quadrature_points(const QuadratureSpec& spec, int d) {
    if (spec.kind == QuadratureSpec::Kind::MonteCarlo) {
        return uniform_points(d, spec.n_mc, spec.seed);
    }
    if (d > 3) throw ConfigError("tensor-grid quadrature is limited to d <= 3");
    const int g = spec.grid_per_dim;
    if (g < 1) throw ConfigError("grid_per_dim must be >= 1");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(g);
    std::vector<double> pts(total * static_cast<std::size_t>(d));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    for (std::size_t pt = 0; pt < total; ++pt) {
        for (int i = 0; i < d; ++i) {
            pts[pt * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] =
                (idx[static_cast<std::size_t>(i)] + 0.5) / g;
        }
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[static_cast<std::size_t>(i)] < g) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
    }
    return pts;
}

double lr_norm(const RealFn& f, int d, double r, const QuadratureSpec& spec) {
    const std::vector<double> pts = quadrature_points(spec, d);
    const std::size_t n = pts.size() / static_cast<std::size_t>(d);
    if (n == 0) return 0.0;
    if (std::isinf(r)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mx = std::max(mx, std::fabs(f(std::span<const double>(
                                  pts.data() + i * static_cast<std::size_t>(d),
                                  static_cast<std::size_t>(d)))));
        }
        return mx;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::pow(std::fabs(f(std::span<const double>(
                            pts.data() + i * static_cast<std::size_t>(d),
                            static_cast<std::size_t>(d)))),
                        r);
    }
    return std::pow(acc / static_cast<double>(n), 1.0 / r);
}

}  // namespace anibes
