#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "logpot/dbs_relations.hpp"
#include "logpot/majorization.hpp"
#include "logpot/potential.hpp"

namespace logpot {

enum class FamilyKind { BoundedReal, BoundedComplex, Unbounded, ComplexCharge };

struct FamilyTerm {
    cplx z;
    cplx a;
};

/// A charge sequence given by a rule i -> (z_i, a_i), i = 1, 2, ...
struct SequenceFamily {
    FamilyKind kind = FamilyKind::BoundedReal;
    std::string name;
    double rho = 0.0;                      ///< disk radius for bounded kinds, 0 otherwise
    std::size_t max_terms = 0;             ///< 0 = unlimited
    std::function<FamilyTerm(std::size_t)> term;

    /// z_i = rho (1 - base^i), a_i = base^i
    static SequenceFamily geometric_real(double rho = 1.0, double base = 0.5);
    /// z_i = rho (1 - base^i) e^{i twist / i^2}, a_i = base^i
    static SequenceFamily geometric_spiral(double rho = 1.0, double base = 0.5, double twist = 1.0);
    /// z_i = i e^{i spin i}, a_i = 1 / i^2
    static SequenceFamily harmonic_unbounded(double spin = 2.399963229728653);
    /// a_i = base^i e^{i theta_i}, z_i = rho (1 - base^i) e^{i theta_i}, theta_i = spin i
    static SequenceFamily complex_charge(double rho = 1.0, double base = 0.5, double spin = 1.0);
    /// Finite user list; kind is inferred (BoundedReal if all points are real).
    static SequenceFamily user_list(std::vector<cplx> points, std::vector<double> charges);
};

/// First n terms as raw poles and (possibly complex) charges.
void family_terms(const SequenceFamily& family, std::size_t n, std::vector<cplx>& z, std::vector<cplx>& a);

/// First n terms as a positive configuration. Throws InputError for complex charges,
/// coincident points or bounded-family points outside the disk.
ChargeConfiguration truncate(const SequenceFamily& family, std::size_t n, bool renormalize = true);

/// Zeros of the truncated field sum_{i <= n} a_i / (z - z_i).
ComplexVector truncated_zeros(const SequenceFamily& family, std::size_t n);

struct InterlacingReport {
    bool interlaced = false;
    std::string pattern;     ///< merged order, e.g. "zwzwz"
    double min_gap = 0.0;    ///< smallest gap between consecutive merged entries
    std::vector<double> z_sorted, w_sorted;
};

/// Requires exactly real points.
InterlacingReport interlacing_check(const ChargeConfiguration& config);
InterlacingReport interlacing_check(const ChargeConfiguration& config, std::span<const cplx> equilibria);

struct RealLineCertificate {
    DbsCertificate certificate;
    double column_residual = 0.0;  ///< max_j |sum_i r_ij - (1 - a_j)|
};

RealLineCertificate real_line_certificate(const ChargeConfiguration& config);

/// min over the battery of sum (1 - a_i) phi(lambda z_i + mu) - sum phi(lambda w_j + mu).
ConvexBatteryReport nonnegative_convex_margin(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                              cplx lambda, cplx mu, const std::vector<ConvexFunction>& battery);
/// Default battery: |z - c|^alpha (alpha = 1, 2, 3) and support functions, centers over the mapped charges.
ConvexBatteryReport nonnegative_convex_margin(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                              cplx lambda = 1.0, cplx mu = 0.0);

struct Region {
    enum class Kind { Disk, Annulus } kind = Kind::Disk;
    cplx center{0.0, 0.0};
    double inner = 0.0;  ///< annulus only
    double outer = 1.0;

    bool contains(cplx w) const;
    static Region disk(cplx center, double radius);
    static Region annulus(cplx center, double inner, double outer);
};

struct LevelReport {
    std::size_t n = 0;
    ComplexVector zeros;
    std::size_t count_in_region = 0;
    std::vector<long> trajectory;       ///< trajectory id per zero
    std::vector<double> displacement;   ///< distance to the matched previous zero, NaN when new
    double max_displacement = 0.0;      ///< over matched zeros
};

struct ZeroLadder {
    std::vector<LevelReport> levels;
    std::size_t trajectories = 0;
    bool counts_nondecreasing = true;
    bool displacement_nonincreasing = true;
};

inline constexpr std::size_t kMaxLadderLevel = 64;

/// Levels are solved concurrently, then matched in level order by nearest neighbour
/// with rejection beyond half the smallest gap between zeros.
ZeroLadder zero_count_explorer(const SequenceFamily& family, std::span<const std::size_t> levels,
                               const Region& region);

} // namespace logpot
