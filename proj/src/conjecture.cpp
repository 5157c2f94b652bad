#include "logpot/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>

#include "logpot/compound.hpp"
#include "logpot/dbs_relations.hpp"
#include "logpot/error.hpp"

namespace logpot {

std::vector<double> simplex_sample(std::size_t k, CounterRng& rng)
{
    if (k == 0) throw InputError("simplex_sample: k must be positive");
    std::vector<double> cut(k + 1);
    cut[0] = 0.0;
    cut[k] = 1.0;
    for (std::size_t i = 1; i < k; ++i) cut[i] = rng.uniform();
    std::sort(cut.begin() + 1, cut.begin() + static_cast<long>(k));
    std::vector<double> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = cut[i + 1] - cut[i];
    return t;
}

void InertiaSpec::validate() const
{
    if (!(alpha >= 1.0)) throw InputError("inertia: alpha must be >= 1");
    const double nrm = std::hypot(direction[0], direction[1], direction[2]);
    if (!(std::abs(nrm - 1.0) <= 1e-12)) throw InputError("inertia: line direction must be a unit vector");
    for (double p : point)
        if (!std::isfinite(p)) throw InputError("inertia: line point must be finite");
}

double InertiaSpec::distance_pow(cplx x) const
{
    const double d0 = x.real() - point[0], d1 = x.imag() - point[1], d2 = -point[2];
    const double proj = d0 * direction[0] + d1 * direction[1] + d2 * direction[2];
    const double p0 = d0 - proj * direction[0], p1 = d1 - proj * direction[1], p2 = d2 - proj * direction[2];
    const double sq = p0 * p0 + p1 * p1 + p2 * p2;
    if (alpha == 2.0) return sq;
    return std::pow(std::sqrt(sq), alpha);
}

namespace {

// Welford accumulator with Chan's pairwise merge.
struct Moments {
    double n = 0.0, mean = 0.0, m2 = 0.0;

    void push(double x)
    {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o)
    {
        if (o.n == 0.0) return;
        if (n == 0.0) {
            *this = o;
            return;
        }
        const double tot = n + o.n;
        const double d = o.mean - mean;
        mean += d * o.n / tot;
        m2 += o.m2 + d * d * n * o.n / tot;
        n = tot;
    }

    McEstimate estimate() const
    {
        McEstimate e;
        e.mean = mean;
        e.trials = static_cast<std::size_t>(n);
        e.se = n > 1.0 ? std::sqrt(std::max(m2, 0.0) / (n - 1.0) / n) : 0.0;
        return e;
    }
};

template <std::size_t N, class Sampler>
std::array<Moments, N> run_shard(std::size_t shard, std::size_t count, std::uint64_t seed, Sampler& sample)
{
    CounterRng rng(seed, shard);
    std::array<Moments, N> acc{};
    std::array<double, N> out{};
    for (std::size_t i = 0; i < count; ++i) {
        sample(rng, out);
        for (std::size_t c = 0; c < N; ++c) acc[c].push(out[c]);
    }
    return acc;
}

template <std::size_t N, class Sampler>
std::array<Moments, N> sharded_mc(std::size_t trials, std::uint64_t seed, Sampler sample, bool parallel)
{
    const std::size_t shards = (trials + kShardSize - 1) / kShardSize;
    std::vector<std::array<Moments, N>> parts(shards);
    std::vector<std::exception_ptr> errors(shards);
    auto body = [&](std::size_t s) {
        try {
            const std::size_t count = std::min(kShardSize, trials - s * kShardSize);
            parts[s] = run_shard<N>(s, count, seed, sample);
        } catch (...) {
            errors[s] = std::current_exception();
        }
    };
    if (parallel) {
        const long ls = static_cast<long>(shards);
#pragma omp parallel for schedule(dynamic)
        for (long s = 0; s < ls; ++s) body(static_cast<std::size_t>(s));
    } else {
        for (std::size_t s = 0; s < shards; ++s) body(s);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::array<Moments, N> total{};
    for (const auto& p : parts)
        for (std::size_t c = 0; c < N; ++c) total[c].merge(p[c]);
    return total;
}

McEstimate moment_mc(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials, std::uint64_t seed,
                     bool parallel)
{
    if (vertices.empty()) throw InputError("inertia_moment_mc: no vertices");
    if (trials < 1000) throw InputError("inertia_moment_mc: at least 1000 trials required");
    spec.validate();
    const std::size_t k = vertices.size();
    auto sample = [&](CounterRng& rng, std::array<double, 1>& out) {
        const auto t = simplex_sample(k, rng);
        cplx x = 0.0;
        for (std::size_t i = 0; i < k; ++i) x += t[i] * vertices[i];
        out[0] = spec.distance_pow(x);
    };
    return sharded_mc<1>(trials, seed, sample, parallel)[0].estimate();
}

} // namespace

McEstimate inertia_moment_mc(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials,
                             std::uint64_t seed)
{
    return moment_mc(vertices, spec, trials, seed, true);
}

namespace reference {

McEstimate inertia_moment_mc(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials,
                             std::uint64_t seed)
{
    return moment_mc(vertices, spec, trials, seed, false);
}

} // namespace reference

double permutation_invariance_check(std::span<const cplx> vertices, const InertiaSpec& spec, std::size_t trials,
                                    std::uint64_t seed, std::size_t permutations)
{
    if (vertices.empty()) throw InputError("permutation_invariance_check: no vertices");
    if (trials < 1000) throw InputError("permutation_invariance_check: at least 1000 trials required");
    spec.validate();
    const std::size_t k = vertices.size();
    auto estimate = [&](const std::vector<std::size_t>& perm) {
        auto sample = [&](CounterRng& rng, std::array<double, 1>& out) {
            const auto t = simplex_sample(k, rng);
            cplx x = 0.0;
            for (std::size_t i = 0; i < k; ++i) x += t[perm[i]] * vertices[perm[i]];
            out[0] = spec.distance_pow(x);
        };
        return sharded_mc<1>(trials, seed, sample, true)[0].mean;
    };
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    const double base = estimate(perm);
    CounterRng shuffle(seed ^ 0x7065726d75746174ULL, ~0ULL);
    double worst = 0.0;
    for (std::size_t p = 0; p < permutations; ++p) {
        for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[shuffle.next() % i]);
        worst = std::max(worst, std::abs(estimate(perm) - base));
    }
    return worst;
}

HierarchyTrial dbs_hierarchy_trial(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                   std::size_t k, std::size_t m, std::span<const cplx> t, const ConvexFunction& phi)
{
    const std::size_t n = config.size();
    if (!config.normalized()) throw InputError("dbs_hierarchy_trial: charges must sum to 1");
    if (equilibria.size() + 1 != n) throw InputError("dbs_hierarchy_trial: expected n-1 equilibria");
    if (k < 1 || k + 1 > n || m < 1 || m > k) throw InputError("dbs_hierarchy_trial: need 1 <= m <= k <= n-1");
    if (t.size() != k) throw InputError("dbs_hierarchy_trial: t must have k entries");
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    if (fact * static_cast<double>(binomial(n, k)) > 1e6)
        throw InputError("dbs_hierarchy_trial: k! C(n,k) exceeds 10^6");

    auto side = [&](std::span<const cplx> pts, std::size_t total, auto weight) {
        double s = 0.0;
        std::vector<std::size_t> perm(k);
        std::vector<cplx> args(k);
        for (const auto& idx : index_sets(total, k)) {
            const double w = weight(idx);
            std::iota(perm.begin(), perm.end(), 0);
            double inner = 0.0;
            do {
                for (std::size_t i = 0; i < k; ++i) args[i] = t[perm[i]] * pts[idx[i]];
                inner += phi(elementary_symmetric(args, m));
            } while (std::next_permutation(perm.begin(), perm.end()));
            s += w * inner;
        }
        return s;
    };
    HierarchyTrial r;
    r.lhs = side(equilibria, n - 1, [](const IndexSet&) { return 1.0; });
    r.rhs = side(config.points(), n, [&](const IndexSet& idx) {
        double a = 0.0;
        for (auto i : idx) a += config.charges()[i];
        return 1.0 - a;
    });
    r.margin = r.rhs - r.lhs;
    return r;
}

TrialVerdict classify(double margin, double lhs_se, double rhs_se)
{
    return margin < -5.0 * (lhs_se + rhs_se) ? TrialVerdict::ViolationCandidate : TrialVerdict::Consistent;
}

TrialReport inertia_inequality_trial(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                     std::size_t k, const InertiaSpec& spec, std::size_t trials, std::uint64_t seed)
{
    const std::size_t n = config.size();
    if (!config.normalized()) throw InputError("inertia_inequality_trial: charges must sum to 1");
    if (equilibria.size() + 1 != n) throw InputError("inertia_inequality_trial: expected n-1 equilibria");
    if (k < 1 || k + 1 > n) throw InputError("inertia_inequality_trial: need 1 <= k <= n-1");
    if (binomial(n, k) > 1000) throw InputError("inertia_inequality_trial: C(n,k) exceeds 1000");
    if (trials < 10000) throw InputError("inertia_inequality_trial: at least 10^4 trials required");
    spec.validate();

    const auto wsets = index_sets(n - 1, k);
    const auto zsets = index_sets(n, k);
    std::vector<double> zweight;
    for (const auto& idx : zsets) {
        double a = 0.0;
        for (auto i : idx) a += config.charges()[i];
        zweight.push_back(1.0 - a);
    }
    const auto& z = config.points();
    auto sample = [&](CounterRng& rng, std::array<double, 2>& out) {
        const auto t = simplex_sample(k, rng);
        double lhs = 0.0, rhs = 0.0;
        for (const auto& idx : wsets) {
            cplx x = 0.0;
            for (std::size_t i = 0; i < k; ++i) x += t[i] * equilibria[idx[i]];
            lhs += spec.distance_pow(x);
        }
        for (std::size_t j = 0; j < zsets.size(); ++j) {
            cplx x = 0.0;
            for (std::size_t i = 0; i < k; ++i) x += t[i] * z[zsets[j][i]];
            rhs += zweight[j] * spec.distance_pow(x);
        }
        out = {lhs, rhs};
    };
    const auto acc = sharded_mc<2>(trials, seed, sample, true);
    const auto l = acc[0].estimate(), r = acc[1].estimate();
    TrialReport rep;
    rep.lhs_estimate = l.mean;
    rep.rhs_estimate = r.mean;
    rep.lhs_se = l.se;
    rep.rhs_se = r.se;
    rep.margin = r.mean - l.mean;
    rep.verdict = classify(rep.margin, rep.lhs_se, rep.rhs_se);
    rep.trials = l.trials;
    return rep;
}

} // namespace logpot
