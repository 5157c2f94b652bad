#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "logpot/compound.hpp"
#include "logpot/majorization.hpp"
#include "logpot/matrix.hpp"
#include "logpot/potential.hpp"

namespace logpot {

/// Elementary symmetric functions of order m of the affinely mapped points, over all
/// k-subsets of the equilibria (w side) and of the charges (z side), lexicographic.
struct SymmetricVectors {
    std::size_t k = 1;
    std::size_t m = 1;
    cplx lambda{1.0, 0.0};
    cplx mu{0.0, 0.0};
    ComplexVector w_vec;             ///< C(n-1, k) entries
    ComplexVector z_vec;             ///< C(n, k) entries
    std::vector<double> a_weights;   ///< uniform 1 / C(n-1, k)
    std::vector<double> b_weights;   ///< (1 - sum_{s in J} a_s) / C(n-1, k)

    WeightedTuple w_tuple() const;
    WeightedTuple z_tuple() const;
};

/// e_m(values)
cplx elementary_symmetric(std::span<const cplx> values, std::size_t m);

SymmetricVectors symmetric_vectors(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                   std::size_t k, std::size_t m, cplx lambda = 1.0, cplx mu = 0.0);

struct HierarchyOptions {
    std::size_t transforms = 20;          ///< random (lambda, mu) pairs re-checked with the same R
    std::uint64_t seed = 0x6c6f67706f74;
};

/// Row-stochastic R_k certifying (W^[k], a^[k]) < (Z^[k], b^[k]).
struct DbsCertificate {
    std::size_t k = 1;
    RealMatrix r;                    ///< C(n-1, k) x C(n, k)
    ComplexVector equilibria;        ///< Schur diagonal order
    CertificateResiduals residuals;  ///< lambda = 1, mu = 0, m = k
    /// Worst residual over m = 1..k and the random transforms, each divided by
    /// max(1, largest |z-side entry|).
    double transform_residual = 0.0;
};

/// r_ij = |<v_i, e_j>|^2 from the Schur basis of the compression.
DbsCertificate construct_first_order(const ChargeConfiguration& config, const HierarchyOptions& options = {});

/// S_k = |U^(k)|^2 entrywise restricted to rows avoiding the last index, U mapping
/// the Schur basis to the standard basis.
DbsCertificate construct_hierarchy(const ChargeConfiguration& config, std::size_t k,
                                   const HierarchyOptions& options = {});

struct IdentityCheck {
    cplx lhs;   ///< sum over k-subsets of equilibria of the products
    cplx rhs;   ///< sum over k-subsets of charges of (1 - sum a) times the products
    double residual = 0.0;
};

IdentityCheck check_newton_identities(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                      std::size_t k);

struct MomentCheck {
    double lhs = 0.0;     ///< sum |e_m(w_I)|^alpha
    double rhs = 0.0;     ///< sum (1 - sum a_J) |e_m(z_J)|^alpha
    double margin = 0.0;  ///< rhs - lhs
};

MomentCheck moment_inequalities(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                std::size_t k, std::size_t m, double alpha);

/// Same comparison with both sides divided by C(n-1, k); equal charges give the
/// averaged form over k-subsets.
MomentCheck moment_inequalities_averaged(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                         std::size_t k, std::size_t m, double alpha);

struct MMatrixCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

/// X = I - x^T x; lhs = sum_i det X(i,i) - m det X, rhs = |x|^2.
MMatrixCheck m_matrix_identity(std::span<const double> x);

} // namespace logpot
