#pragma once

#include <span>
#include <string>
#include <vector>

#include "logpot/matrix.hpp"

namespace logpot {

enum class ConvexKind {
    Support,  ///< max(0, Re(e^{-i theta} (z - c)))
    Power,    ///< |z - c|^alpha, alpha >= 1 (alpha = 1 is the distance)
};

/// A planar convex test function.
struct ConvexFunction {
    ConvexKind kind = ConvexKind::Power;
    cplx center{0.0, 0.0};
    double theta = 0.0;
    double alpha = 1.0;

    double operator()(cplx z) const;
    std::string describe() const;
};

struct BatteryParameters {
    int angles = 24;
    int grid = 9;                           ///< grid x grid centers over the bounding box
    std::vector<double> alphas{1, 2, 3, 4};
    bool support = true;
};

/// Support functions at every angle and powers for every alpha, centered on a grid
/// spanning the bounding box of `anchor`.
std::vector<ConvexFunction> planar_battery(std::span<const cplx> anchor, const BatteryParameters& params = {});

} // namespace logpot
