#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "logpot/convex.hpp"
#include "logpot/matrix.hpp"
#include "logpot/simplex_lp.hpp"

namespace logpot {

/// m vectors in R^d with positive weights summing to 1.
class WeightedTuple {
public:
    /// `coords` is row-major m x d. Weights must lie in (0, 1] and sum to 1 within `weight_tol`.
    static WeightedTuple create(std::size_t dim, std::vector<double> coords, std::vector<double> weights,
                                double weight_tol = 1e-12);
    static WeightedTuple planar(std::span<const cplx> points, std::span<const double> weights,
                                double weight_tol = 1e-12);
    /// Equal weights 1/m.
    static WeightedTuple uniform(std::span<const cplx> points);

    std::size_t size() const noexcept { return weights_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::span<const double> vec(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    /// Requires dim() == 2.
    cplx point(std::size_t i) const;
    std::vector<cplx> points() const;
    std::vector<double> barycenter() const;

private:
    WeightedTuple(std::size_t dim, std::vector<double> coords, std::vector<double> weights)
        : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {}

    std::size_t dim_ = 0;
    std::vector<double> coords_;
    std::vector<double> weights_;
};

struct CertificateResiduals {
    double row = 0.0;     ///< max |sum_j r_ij - 1|
    double mix = 0.0;     ///< max ||x_i - sum_j r_ij y_j||
    double weight = 0.0;  ///< max |b_j - sum_i a_i r_ij|
    double min_entry = 0.0;

    double max() const noexcept { return std::max({row, mix, weight}); }
    bool certifies(double tol = 1e-8) const noexcept { return max() <= tol && min_entry >= -1e-12; }
};

/// Row-stochastic R with x_i = sum_j r_ij y_j and b = a R.
struct StochasticCertificate {
    RealMatrix r;
    CertificateResiduals residuals;
};

CertificateResiduals verify_certificate(const RealMatrix& r, const WeightedTuple& x, const WeightedTuple& y);

/// phi(v) = max_i (offset_i + <slope_i, v>)
struct PiecewiseLinearConvex {
    std::vector<double> offsets;
    std::vector<std::vector<double>> slopes;

    double operator()(std::span<const double> v) const;
};

/// A convex function with sum_i a_i phi(x_i) - sum_j b_j phi(y_j) = violation > 0.
struct MajorizationWitness {
    PiecewiseLinearConvex phi;
    double lhs = 0.0;  ///< sum_i a_i phi(x_i)
    double rhs = 0.0;  ///< sum_j b_j phi(y_j)
    double violation = 0.0;
    bool verified = false;  ///< violation > tol by direct evaluation
};

struct MajorizationOptions {
    double certification_tol = 1e-8;
    PhaseOneOptions lp{};
};

struct MajorizationResult {
    bool feasible = false;
    std::optional<StochasticCertificate> certificate;
    std::optional<MajorizationWitness> witness;
    double lp_infeasibility = 0.0;
    std::size_t lp_iterations = 0;
};

/// Decides (x, a) < (y, b) by LP feasibility of the mixing matrix.
MajorizationResult check_weighted_majorization(const WeightedTuple& x, const WeightedTuple& y,
                                               const MajorizationOptions& options = {});

struct ConvexBatteryReport {
    double worst_margin = 0.0;  ///< min over battery of sum b phi(y) - sum a phi(x)
    ConvexFunction worst_function;
    std::size_t evaluations = 0;
};

/// Planar only. Centers are drawn over the bounding box of y.
ConvexBatteryReport convex_battery(const WeightedTuple& x, const WeightedTuple& y,
                                   const BatteryParameters& params = {});
ConvexBatteryReport convex_battery(std::span<const cplx> x, std::span<const double> a, std::span<const cplx> y,
                                   std::span<const double> b, const std::vector<ConvexFunction>& battery);

enum class ChoquetVerdict { Dominated, NotDominated, Undetermined };

struct ChoquetResult {
    ChoquetVerdict verdict = ChoquetVerdict::Undetermined;
    MajorizationResult lp;
    std::optional<ConvexBatteryReport> battery;  ///< attached when it exhibits a violation
};

ChoquetResult choquet_compare(const WeightedTuple& x, const WeightedTuple& y, const MajorizationOptions& options = {});

} // namespace logpot
