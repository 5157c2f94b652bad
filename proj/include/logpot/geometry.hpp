#pragma once

#include <span>
#include <vector>

#include "logpot/matrix.hpp"

namespace logpot {

/// Vertices of the convex hull in counter-clockwise order (monotone chain).
/// Degenerate inputs give 1 or 2 vertices.
std::vector<cplx> convex_hull(std::span<const cplx> points);

/// Euclidean distance from z to the convex hull of `points` (0 inside).
double distance_to_hull(std::span<const cplx> points, cplx z);

/// Best-fit line through planar points: centroid, unit direction and the
/// singular values of the centered 2 x n coordinate matrix (largest first).
struct LineFit {
    cplx centroid;
    cplx direction;
    double sigma_max = 0.0;
    double sigma_min = 0.0;
};

LineFit fit_line(std::span<const cplx> points);

/// Smallest singular value of the centered coordinates <= rel_tol * largest.
bool is_collinear(std::span<const cplx> points, double rel_tol = 1e-10);

double diameter(std::span<const cplx> points);

} // namespace logpot
