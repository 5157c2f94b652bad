#include "logpot/infinite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <tuple>
#include <string>

#include "logpot/error.hpp"
#include "logpot/polynomial.hpp"

namespace logpot {

SequenceFamily SequenceFamily::geometric_real(double rho, double base)
{
    if (!(rho > 0.0) || !(base > 0.0 && base < 1.0)) throw InputError("geometric-real: need rho > 0, 0 < base < 1");
    SequenceFamily f;
    f.kind = FamilyKind::BoundedReal;
    f.name = "geometric-real";
    f.rho = rho;
    f.term = [rho, base](std::size_t i) {
        const double p = std::pow(base, static_cast<double>(i));
        return FamilyTerm{rho * (1.0 - p), p};
    };
    return f;
}

SequenceFamily SequenceFamily::geometric_spiral(double rho, double base, double twist)
{
    if (!(rho > 0.0) || !(base > 0.0 && base < 1.0)) throw InputError("geometric-spiral: need rho > 0, 0 < base < 1");
    SequenceFamily f;
    f.kind = FamilyKind::BoundedComplex;
    f.name = "geometric-spiral";
    f.rho = rho;
    f.term = [rho, base, twist](std::size_t i) {
        const double p = std::pow(base, static_cast<double>(i));
        const double t = twist / (static_cast<double>(i) * static_cast<double>(i));
        return FamilyTerm{std::polar(rho * (1.0 - p), t), p};
    };
    return f;
}

SequenceFamily SequenceFamily::harmonic_unbounded(double spin)
{
    SequenceFamily f;
    f.kind = FamilyKind::Unbounded;
    f.name = "harmonic-unbounded";
    f.term = [spin](std::size_t i) {
        const double x = static_cast<double>(i);
        return FamilyTerm{std::polar(x, spin * x), 1.0 / (x * x)};
    };
    return f;
}

SequenceFamily SequenceFamily::complex_charge(double rho, double base, double spin)
{
    if (!(rho > 0.0) || !(base > 0.0 && base < 1.0)) throw InputError("complex-charge: need rho > 0, 0 < base < 1");
    SequenceFamily f;
    f.kind = FamilyKind::ComplexCharge;
    f.name = "complex-charge";
    f.rho = rho;
    f.term = [rho, base, spin](std::size_t i) {
        const double p = std::pow(base, static_cast<double>(i));
        const double t = spin * static_cast<double>(i);
        return FamilyTerm{std::polar(rho * (1.0 - p), t), std::polar(p, t)};
    };
    return f;
}

SequenceFamily SequenceFamily::user_list(std::vector<cplx> points, std::vector<double> charges)
{
    if (points.empty() || points.size() != charges.size())
        throw InputError("user list: need equally many points and charges");
    for (double c : charges)
        if (!(c > 0.0)) throw InputError("user list: charges must be positive");
    SequenceFamily f;
    f.kind = std::all_of(points.begin(), points.end(), [](cplx z) { return z.imag() == 0.0; })
                 ? FamilyKind::BoundedReal
                 : FamilyKind::BoundedComplex;
    f.name = "points";
    f.max_terms = points.size();
    f.term = [p = std::move(points), c = std::move(charges)](std::size_t i) { return FamilyTerm{p[i - 1], c[i - 1]}; };
    return f;
}

void family_terms(const SequenceFamily& family, std::size_t n, std::vector<cplx>& z, std::vector<cplx>& a)
{
    if (n == 0) throw InputError("truncation length must be positive");
    if (family.max_terms && n > family.max_terms)
        throw InputError("family '" + family.name + "' has only " + std::to_string(family.max_terms) + " terms");
    z.resize(n);
    a.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = family.term(i + 1);
        z[i] = t.z;
        a[i] = t.a;
        if (family.rho > 0.0 && !(std::abs(t.z) < family.rho))
            throw InputError("family '" + family.name + "': term " + std::to_string(i + 1) + " lies outside the disk");
    }
}

ChargeConfiguration truncate(const SequenceFamily& family, std::size_t n, bool renormalize)
{
    if (family.kind == FamilyKind::ComplexCharge)
        throw InputError("truncate: complex charges do not form a positive configuration");
    std::vector<cplx> z, a;
    family_terms(family, n, z, a);
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[i].real();
    auto cfg = ChargeConfiguration::create(std::move(z), std::move(c));
    return renormalize ? normalize(cfg) : cfg;
}

ComplexVector truncated_zeros(const SequenceFamily& family, std::size_t n)
{
    if (family.kind != FamilyKind::ComplexCharge) return solve_equilibria(truncate(family, n, true)).points;
    std::vector<cplx> z, a;
    family_terms(family, n, z, a);
    if (n == 1) return {};
    return rational_zeros(z, a);
}

InterlacingReport interlacing_check(const ChargeConfiguration& config, std::span<const cplx> equilibria)
{
    for (cplx z : config.points())
        if (z.imag() != 0.0) throw InputError("interlacing_check: points must be real");
    InterlacingReport r;
    for (cplx z : config.points()) r.z_sorted.push_back(z.real());
    for (cplx w : equilibria) r.w_sorted.push_back(w.real());
    std::sort(r.z_sorted.begin(), r.z_sorted.end());
    std::sort(r.w_sorted.begin(), r.w_sorted.end());

    std::vector<std::pair<double, char>> merged;
    for (double v : r.z_sorted) merged.emplace_back(v, 'z');
    for (double v : r.w_sorted) merged.emplace_back(v, 'w');
    std::stable_sort(merged.begin(), merged.end(), [](auto& x, auto& y) { return x.first < y.first; });
    r.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < merged.size(); ++i) {
        r.pattern += merged[i].second;
        if (i) r.min_gap = std::min(r.min_gap, merged[i].first - merged[i - 1].first);
    }
    const double spread = r.z_sorted.back() - r.z_sorted.front();
    bool alternating = merged.size() == 2 * r.z_sorted.size() - 1;
    for (std::size_t i = 0; alternating && i < merged.size(); ++i) alternating = merged[i].second == (i % 2 ? 'w' : 'z');
    r.interlaced = alternating && (merged.size() == 1 || r.min_gap > 1e-12 * spread);
    return r;
}

InterlacingReport interlacing_check(const ChargeConfiguration& config)
{
    for (cplx z : config.points())
        if (z.imag() != 0.0) throw InputError("interlacing_check: points must be real");
    return interlacing_check(config, solve_equilibria(config).points);
}

RealLineCertificate real_line_certificate(const ChargeConfiguration& config)
{
    for (cplx z : config.points())
        if (z.imag() != 0.0) throw InputError("real_line_certificate: points must be real");
    RealLineCertificate out{construct_first_order(config), 0.0};
    const auto& r = out.certificate.r;
    for (std::size_t j = 0; j < r.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.rows(); ++i) s += r(i, j);
        out.column_residual = std::max(out.column_residual, std::abs(s - (1.0 - config.charges()[j])));
    }
    return out;
}

ConvexBatteryReport nonnegative_convex_margin(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                              cplx lambda, cplx mu, const std::vector<ConvexFunction>& battery)
{
    if (!config.normalized()) throw InputError("nonnegative_convex_margin: charges must sum to 1");
    if (equilibria.size() + 1 != config.size()) throw InputError("nonnegative_convex_margin: expected n-1 equilibria");
    std::vector<cplx> z, w;
    std::vector<double> zb, wb(equilibria.size(), 1.0);
    for (std::size_t i = 0; i < config.size(); ++i) {
        z.push_back(lambda * config.points()[i] + mu);
        zb.push_back(1.0 - config.charges()[i]);
    }
    for (cplx v : equilibria) w.push_back(lambda * v + mu);
    return convex_battery(w, wb, z, zb, battery);
}

ConvexBatteryReport nonnegative_convex_margin(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                              cplx lambda, cplx mu)
{
    std::vector<cplx> anchor;
    for (cplx p : config.points()) anchor.push_back(lambda * p + mu);
    BatteryParameters params;
    params.alphas = {1.0, 2.0, 3.0};
    return nonnegative_convex_margin(config, equilibria, lambda, mu, planar_battery(anchor, params));
}

Region Region::disk(cplx center, double radius)
{
    if (!(radius > 0.0)) throw InputError("region: radius must be positive");
    return Region{Kind::Disk, center, 0.0, radius};
}

Region Region::annulus(cplx center, double inner, double outer)
{
    if (!(inner >= 0.0 && outer > inner)) throw InputError("region: need 0 <= inner < outer");
    return Region{Kind::Annulus, center, inner, outer};
}

bool Region::contains(cplx w) const
{
    const double r = std::abs(w - center);
    return kind == Kind::Disk ? r < outer : (r > inner && r < outer);
}

namespace {

double min_gap(const ComplexVector& v)
{
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) g = std::min(g, std::abs(v[i] - v[j]));
    return g;
}

} // namespace

ZeroLadder zero_count_explorer(const SequenceFamily& family, std::span<const std::size_t> levels, const Region& region)
{
    if (levels.empty()) throw InputError("zero_count_explorer: no levels");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] == 0 || levels[i] > kMaxLadderLevel)
            throw InputError("zero_count_explorer: levels must lie in 1.." + std::to_string(kMaxLadderLevel));
        if (i && levels[i] <= levels[i - 1]) throw InputError("zero_count_explorer: levels must increase strictly");
    }

    ZeroLadder out;
    out.levels.resize(levels.size());
    std::vector<std::exception_ptr> errors(levels.size());
    const long count = static_cast<long>(levels.size());
#pragma omp parallel for schedule(dynamic)
    for (long l = 0; l < count; ++l) {
        try {
            auto& rep = out.levels[l];
            rep.n = levels[l];
            rep.zeros = truncated_zeros(family, rep.n);
        } catch (...) {
            errors[l] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    long next_id = 0;
    for (std::size_t l = 0; l < out.levels.size(); ++l) {
        auto& cur = out.levels[l];
        cur.count_in_region = std::count_if(cur.zeros.begin(), cur.zeros.end(), [&](cplx w) { return region.contains(w); });
        cur.trajectory.assign(cur.zeros.size(), -1);
        cur.displacement.assign(cur.zeros.size(), std::numeric_limits<double>::quiet_NaN());
        if (l > 0) {
            const auto& prev = out.levels[l - 1];
            const double limit = 0.5 * std::min(min_gap(prev.zeros), min_gap(cur.zeros));
            std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < cur.zeros.size(); ++i)
                for (std::size_t j = 0; j < prev.zeros.size(); ++j) {
                    const double d = std::abs(cur.zeros[i] - prev.zeros[j]);
                    if (d <= limit) pairs.emplace_back(d, i, j);
                }
            std::sort(pairs.begin(), pairs.end());
            std::vector<bool> used(prev.zeros.size(), false);
            for (auto [d, i, j] : pairs) {
                if (cur.trajectory[i] >= 0 || used[j]) continue;
                used[j] = true;
                cur.trajectory[i] = prev.trajectory[j];
                cur.displacement[i] = d;
                cur.max_displacement = std::max(cur.max_displacement, d);
            }
            if (cur.count_in_region < prev.count_in_region) out.counts_nondecreasing = false;
            if (l > 1 && cur.max_displacement > prev.max_displacement) out.displacement_nonincreasing = false;
        }
        for (auto& t : cur.trajectory)
            if (t < 0) t = next_id++;
    }
    out.trajectories = static_cast<std::size_t>(next_id);
    return out;
}

} // namespace logpot
