#pragma once

#include <span>
#include <vector>

#include "logpot/linalg.hpp"
#include "logpot/matrix.hpp"
#include "logpot/polynomial.hpp"

namespace logpot {

enum class CoincidentPolicy { Reject, Merge };

/// Distinct planar points carrying positive charges.
class ChargeConfiguration {
public:
    /// Validates distinctness (separation > 1e-9 * diameter) and positivity.
    /// With CoincidentPolicy::Merge, points closer than the separation tolerance are
    /// merged into their charge-weighted mean carrying the summed charge.
    static ChargeConfiguration create(std::vector<cplx> points, std::vector<double> charges,
                                      CoincidentPolicy policy = CoincidentPolicy::Reject);

    const std::vector<cplx>& points() const noexcept { return points_; }
    const std::vector<double>& charges() const noexcept { return charges_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool normalized() const noexcept { return normalized_; }
    double total_charge() const noexcept;
    double diameter() const noexcept { return diameter_; }
    double separation_tolerance() const noexcept { return 1e-9 * diameter_; }

private:
    ChargeConfiguration(std::vector<cplx> points, std::vector<double> charges);

    std::vector<cplx> points_;
    std::vector<double> charges_;
    double diameter_ = 0.0;
    bool normalized_ = false;
};

ChargeConfiguration normalize(const ChargeConfiguration& config);

/// f(z) = sum a_i / (z - z_i)
cplx field_eval(const ChargeConfiguration& config, cplx z);

enum class PotentialGauge {
    Origin,   ///< sum a_i log|1 - z/z_i|, requires every z_i != 0
    Shifted,  ///< sum a_i log|z - z_i|, same gradient
};

double potential_eval(const ChargeConfiguration& config, cplx z, PotentialGauge gauge = PotentialGauge::Origin);

/// Monic coefficients (ascending) of sum_i a_i prod_{j != i} (z - z_j). Requires a normalized configuration.
Polynomial equilibrium_polynomial(const ChargeConfiguration& config);

/// B* diag(z) B with B an orthonormal basis of the hyperplane orthogonal to (sqrt a_i).
ComplexMatrix compression_matrix(const ChargeConfiguration& config);

/// Orthonormal basis (v_1, ..., v_{n-1}, v_n) of C^n in which the compression is upper
/// triangular; v_n = (sqrt a_1, ..., sqrt a_n). Columns of `basis` are the v_i.
struct CompressionBasis {
    ComplexMatrix basis;       ///< n x n unitary
    ComplexMatrix triangular;  ///< (n-1) x (n-1), diagonal = equilibria
    ComplexVector equilibria;  ///< diagonal of `triangular`
    bool hermitian_route = false;
};

/// Uses hermitian_eigen when the points are collinear, schur_decompose otherwise.
CompressionBasis compression_basis(const ChargeConfiguration& config);

enum class SolveMethod { Compression, Polynomial };

struct EquilibriumSet {
    ComplexVector points;            ///< n-1 zeros of the field, with multiplicity
    std::vector<double> residuals;   ///< see equilibrium_residuals
    SolveMethod method = SolveMethod::Compression;

    double max_residual() const noexcept;
};

struct SolveOptions {
    double residual_tolerance = 1e-8;
};

/// Equilibria from the spectrum of the compression. Throws NumericalError if any
/// normalized residual exceeds the tolerance.
EquilibriumSet solve_equilibria(const ChargeConfiguration& config, const SolveOptions& options = {});

/// Equilibria as Aberth roots of the expanded equilibrium polynomial (cross-check route).
EquilibriumSet solve_equilibria_polynomial(const ChargeConfiguration& config);

/// Normalized residuals of candidate equilibria against the equilibrium polynomial, taken
/// in the frame centred at the barycenter with the charges inside the unit disk.
std::vector<double> equilibrium_residuals(const ChargeConfiguration& config, std::span<const cplx> w);

/// Charge-weighted barycenter sum a_i z_i (normalized configuration).
cplx barycenter(const ChargeConfiguration& config);

/// sum a_i |z_i - zeta|^2
double weighted_variance(const ChargeConfiguration& config);

/// sum a_i |z_i - alpha|^2 for an arbitrary center alpha
double weighted_second_moment(const ChargeConfiguration& config, cplx alpha);

/// Square root of the weighted variance.
double weighted_std(const ChargeConfiguration& config);

} // namespace logpot
