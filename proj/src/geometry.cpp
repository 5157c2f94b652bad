#include "logpot/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace logpot {

namespace {

double cross(cplx o, cplx a, cplx b)
{
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(cplx a, cplx b, cplx z)
{
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

} // namespace

std::vector<cplx> convex_hull(std::span<const cplx> points)
{
    std::vector<cplx> p(points.begin(), points.end());
    std::sort(p.begin(), p.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return p;
    std::vector<cplx> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

double distance_to_hull(std::span<const cplx> points, cplx z)
{
    const auto h = convex_hull(points);
    if (h.empty()) throw InputError("distance_to_hull: empty point set");
    if (h.size() == 1) return std::abs(z - h[0]);
    if (h.size() == 2) return distance_to_segment(h[0], h[1], z);
    bool inside = true;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (cross(h[i], h[(i + 1) % h.size()], z) < 0.0) inside = false;
    if (inside) return 0.0;
    double d = INFINITY;
    for (std::size_t i = 0; i < h.size(); ++i) d = std::min(d, distance_to_segment(h[i], h[(i + 1) % h.size()], z));
    return d;
}

LineFit fit_line(std::span<const cplx> points)
{
    if (points.empty()) throw InputError("fit_line: empty point set");
    LineFit f;
    cplx c{};
    for (const auto& z : points) c += z;
    c /= static_cast<double>(points.size());
    f.centroid = c;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& z : points) {
        const cplx d = z - c;
        sxx += d.real() * d.real();
        syy += d.imag() * d.imag();
        sxy += d.real() * d.imag();
    }
    // principal axis of the 2x2 scatter matrix; singular values from projections onto it
    const double angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    f.direction = cplx(std::cos(angle), std::sin(angle));
    double along = 0.0, across = 0.0;
    for (const auto& z : points) {
        const cplx local = std::conj(f.direction) * (z - c);
        along += local.real() * local.real();
        across += local.imag() * local.imag();
    }
    f.sigma_max = std::sqrt(std::max(along, across));
    f.sigma_min = std::sqrt(std::min(along, across));
    return f;
}

bool is_collinear(std::span<const cplx> points, double rel_tol)
{
    const LineFit f = fit_line(points);
    return f.sigma_min <= rel_tol * f.sigma_max;
}

double diameter(std::span<const cplx> points)
{
    double d = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) d = std::max(d, std::abs(points[i] - points[j]));
    return d;
}

} // namespace logpot
