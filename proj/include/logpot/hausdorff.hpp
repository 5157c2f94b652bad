#pragma once

#include <vector>

#include "logpot/matrix.hpp"
#include "logpot/potential.hpp"

namespace logpot {

/// Nonempty finite planar point multiset; exact duplicates are dropped on construction.
class PointSet {
public:
    static PointSet create(std::vector<cplx> points);

    const std::vector<cplx>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    explicit PointSet(std::vector<cplx> p) : points_(std::move(p)) {}
    std::vector<cplx> points_;
};

/// max over s1 of the distance to s2. Outer loop runs in parallel.
double directed_hausdorff(const PointSet& s1, const PointSet& s2);
double symmetric_hausdorff(const PointSet& s1, const PointSet& s2);

namespace reference {
double directed_hausdorff(const PointSet& s1, const PointSet& s2);
} // namespace reference

/// Equilibria together with the charge barycenter.
PointSet extended_equilibria(const ChargeConfiguration& config);
PointSet extended_equilibria(const ChargeConfiguration& config, std::span<const cplx> equilibria);

/// h(W_e, Z) against the charge-weighted standard deviation sigma.
struct ExtendedBoundCheck {
    double h_we_z = 0.0;
    double h_w_z = 0.0;   ///< without the barycenter; 0 for a single charge
    double sigma = 0.0;
    double margin = 0.0;  ///< sigma - h_we_z
};

ExtendedBoundCheck check_extended_bound(const ChargeConfiguration& config);
ExtendedBoundCheck check_extended_bound(const ChargeConfiguration& config, std::span<const cplx> equilibria);

/// Symmetric H(Z, W_e) against sigma; collinear charges only.
struct CollinearBoundCheck {
    double h_sym = 0.0;
    double sigma = 0.0;
    double margin = 0.0;  ///< sigma - h_sym
};

/// Throws InputError unless the points are collinear (relative tolerance 1e-10).
CollinearBoundCheck check_collinear_bound(const ChargeConfiguration& config);
CollinearBoundCheck check_collinear_bound(const ChargeConfiguration& config, std::span<const cplx> equilibria);

} // namespace logpot
