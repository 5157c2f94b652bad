#include "logpot/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "logpot/error.hpp"
#include "logpot/geometry.hpp"

namespace logpot {

PointSet PointSet::create(std::vector<cplx> points)
{
    if (points.empty()) throw InputError("PointSet: empty point set");
    for (cplx p : points)
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw InputError("PointSet: non-finite point");
    auto less = [](cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); };
    std::sort(points.begin(), points.end(), less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return PointSet(std::move(points));
}

namespace {

double distance_to_set(cplx w, const std::vector<cplx>& s)
{
    double best = std::numeric_limits<double>::infinity();
    for (cplx z : s) best = std::min(best, std::norm(w - z));
    return std::sqrt(best);
}

} // namespace

double directed_hausdorff(const PointSet& s1, const PointSet& s2)
{
    const auto& a = s1.points();
    const auto& b = s2.points();
    const long n = static_cast<long>(a.size());
    double h = 0.0;
#pragma omp parallel for reduction(max : h) schedule(static)
    for (long i = 0; i < n; ++i) h = std::max(h, distance_to_set(a[i], b));
    return h;
}

namespace reference {

double directed_hausdorff(const PointSet& s1, const PointSet& s2)
{
    double h = 0.0;
    for (cplx w : s1.points()) h = std::max(h, distance_to_set(w, s2.points()));
    return h;
}

} // namespace reference

double symmetric_hausdorff(const PointSet& s1, const PointSet& s2)
{
    return std::max(directed_hausdorff(s1, s2), directed_hausdorff(s2, s1));
}

PointSet extended_equilibria(const ChargeConfiguration& config, std::span<const cplx> equilibria)
{
    std::vector<cplx> p(equilibria.begin(), equilibria.end());
    p.push_back(barycenter(normalize(config)));
    return PointSet::create(std::move(p));
}

PointSet extended_equilibria(const ChargeConfiguration& config)
{
    return extended_equilibria(config, solve_equilibria(config).points);
}

ExtendedBoundCheck check_extended_bound(const ChargeConfiguration& config, std::span<const cplx> equilibria)
{
    const auto z = PointSet::create(config.points());
    ExtendedBoundCheck c;
    c.h_we_z = directed_hausdorff(extended_equilibria(config, equilibria), z);
    if (!equilibria.empty())
        c.h_w_z = directed_hausdorff(PointSet::create({equilibria.begin(), equilibria.end()}), z);
    c.sigma = weighted_std(normalize(config));
    c.margin = c.sigma - c.h_we_z;
    return c;
}

ExtendedBoundCheck check_extended_bound(const ChargeConfiguration& config)
{
    return check_extended_bound(config, solve_equilibria(config).points);
}

CollinearBoundCheck check_collinear_bound(const ChargeConfiguration& config, std::span<const cplx> equilibria)
{
    if (!is_collinear(config.points(), 1e-10)) throw InputError("check_collinear_bound: charges are not collinear");
    CollinearBoundCheck c;
    c.h_sym = symmetric_hausdorff(PointSet::create(config.points()), extended_equilibria(config, equilibria));
    c.sigma = weighted_std(normalize(config));
    c.margin = c.sigma - c.h_sym;
    return c;
}

CollinearBoundCheck check_collinear_bound(const ChargeConfiguration& config)
{
    if (!is_collinear(config.points(), 1e-10)) throw InputError("check_collinear_bound: charges are not collinear");
    return check_collinear_bound(config, solve_equilibria(config).points);
}

} // namespace logpot
