#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anibes/coeffs.hpp"
#include "anibes/quadrature.hpp"

namespace anibes {

/// Discrete least-squares projection of f onto the level-k B-spline span,
/// computed on an oversampled tensor grid (>= `oversample` points per basis
/// support cell and per basis function in every dimension). The grid can be
/// refined to the geometry of a finer level via `grid_level` so that a whole
/// telescoping sweep shares one sampling measure.
///
/// Returns the coefficient vector over J(k) in lexicographic (odometer)
/// order; throws NumericError when the per-dimension Gram condition estimate
/// exceeds 1e12.
std::vector<double> quasi_project(const RealFn& f, int k, const BesovParams& params,
                                  int oversample = 4, int grid_level = -1);

/// Telescoped coefficients of p_k = P_k f - P_{k-1} f for k = 0..K_max with
/// P_{-1} = 0; level-k entries are obtained by re-projecting the difference
/// onto level k. Reconstruction of the result equals P_{K_max} f on the
/// shared grid.
SparseCoeffs telescoped_coeffs(const RealFn& f, int K_max, const BesovParams& params,
                               int oversample = 4);

/// ||Delta_h^r f||_p estimated over a fixed set of sample points (point-major
/// layout); the difference is set to 0 whenever x + r*h leaves [0,1]^d.
double difference_norm(const RealFn& f, int r_order, std::span<const double> h, double p,
                       std::span<const double> points, int d);

/// Monte Carlo modulus-of-smoothness diagnostic: max of ||Delta_h^r f||_p
/// over a deterministic Sobol set of directions |h_i| <= t_i (2^12 points)
/// plus the axis-aligned extremes +-t_i e_i.
double modulus_of_smoothness(const RealFn& f, int r_order, std::span<const double> t, double p,
                             std::int64_t n_samples, std::uint64_t seed);

}  // namespace anibes
