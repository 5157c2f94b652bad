#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "logpot/convex.hpp"
#include "logpot/potential.hpp"
#include "logpot/rng.hpp"

namespace logpot {

/// Uniform point of the standard simplex in R^k from sorted uniform spacings.
std::vector<double> simplex_sample(std::size_t k, CounterRng& rng);

/// A line in R^3; the complex plane is the x1x2-plane.
struct InertiaSpec {
    double alpha = 2.0;
    std::array<double, 3> point{0.0, 0.0, 0.0};
    std::array<double, 3> direction{0.0, 0.0, 1.0};

    /// Throws InputError unless alpha >= 1 and |direction| = 1 within 1e-12.
    void validate() const;
    double distance_pow(cplx x) const;  ///< d(x, L)^alpha
};

struct McEstimate {
    double mean = 0.0;
    double se = 0.0;
    std::size_t trials = 0;
};

/// Trials per shard; shard s draws from CounterRng(seed, s).
inline constexpr std::size_t kShardSize = 4096;

/// E d(t_1 v_1 + ... + t_k v_k, L)^alpha for t uniform on the simplex. Shards run in
/// parallel and are merged in shard order, so the result does not depend on the thread count.
McEstimate inertia_moment_mc(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials,
                             std::uint64_t seed);

namespace reference {
McEstimate inertia_moment_mc(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials,
                             std::uint64_t seed);
} // namespace reference

/// Largest |estimate - identity estimate| over `permutations` random relabelings, each
/// reusing the same simplex samples with the weights permuted along with the vertices.
double permutation_invariance_check(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials,
                                    std::uint64_t seed, std::size_t permutations = 10);

struct HierarchyTrial {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  ///< rhs - lhs
};

/// Both sides of the symmetrized hierarchy inequality by enumeration over index sets and
/// permutations of t. Requires k! C(n, k) <= 10^6.
HierarchyTrial dbs_hierarchy_trial(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                   std::size_t k, std::size_t m, std::span<const cplx> t, const ConvexFunction& phi);

enum class TrialVerdict { Consistent, ViolationCandidate };

struct TrialReport {
    double lhs_estimate = 0.0;
    double rhs_estimate = 0.0;
    double lhs_se = 0.0;
    double rhs_se = 0.0;
    double margin = 0.0;
    TrialVerdict verdict = TrialVerdict::Consistent;
    std::size_t trials = 0;
};

/// Violation candidate iff margin < -5 (lhs_se + rhs_se).
TrialVerdict classify(double margin, double lhs_se, double rhs_se);

/// Sum over equilibrium k-subsets of the inertia moment against the (1 - sum a)-weighted
/// sum over charge k-subsets. Every hull sees the same simplex sample in a trial.
/// Requires C(n, k) <= 1000 and trials >= 10^4.
TrialReport inertia_inequality_trial(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                     std::size_t k, const InertiaSpec& spec, std::size_t trials, std::uint64_t seed);

} // namespace logpot
