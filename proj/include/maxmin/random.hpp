#pragma once

// Seeded generators for test and benchmark instances. Coordinates are drawn
// from the uniform grid lo + k (hi - lo) / den, so instances stay exact.

#include <cstdint>
#include <random>
#include <vector>

#include "maxmin/koenig.hpp"
#include "maxmin/point.hpp"
#include "maxmin/tnorm.hpp"

namespace maxmin {

using Rng = std::mt19937_64;

/// lo + k (hi - lo) / den with k uniform in [k_min, k_max].
Value random_grid_value(Rng& rng, std::int64_t den, std::int64_t k_min, std::int64_t k_max,
                        const SemiringBounds& bounds = {});

/// Any grid value, zero and unity included.
Point random_point(Rng& rng, std::size_t d, std::int64_t den, const SemiringBounds& bounds = {});
/// Grid values strictly inside the bounds.
Point random_finite_point(Rng& rng, std::size_t d, std::int64_t den, const SemiringBounds& bounds = {});
/// Non-increasing finite point.
Point random_sorted_point(Rng& rng, std::size_t d, std::int64_t den, const SemiringBounds& bounds = {});

std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t d, std::int64_t den,
                                 const SemiringBounds& bounds = {});

/// A max-T combination of the generators with grid coefficients, one of them equal to hi.
Point random_hull_point(Rng& rng, const Polytope& x, const TNorm& t, std::int64_t den);

/// Grid point of the box; a coordinate whose interval holds no grid value takes the lower end.
Point random_point_in_box(Rng& rng, const Box& box, std::int64_t den, const SemiringBounds& bounds = {});

/// One generator drawn from every sector at p plus `extra` arbitrary grid
/// points, shuffled. p lies in the max-min hull of the result.
std::vector<Point> random_generators_around(Rng& rng, const Point& p, std::size_t extra, std::int64_t den,
                                            const SemiringBounds& bounds = {});

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t den,
                     const SemiringBounds& bounds = {});

}  // namespace maxmin
