#include "logpot/convex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "logpot/error.hpp"

namespace logpot {

double ConvexFunction::operator()(cplx z) const
{
    const cplx d = z - center;
    if (kind == ConvexKind::Support) {
        const double s = d.real() * std::cos(theta) + d.imag() * std::sin(theta);
        return std::max(0.0, s);
    }
    const double r = std::abs(d);
    if (alpha == 1.0) return r;
    if (alpha == 2.0) return std::norm(d);
    return std::pow(r, alpha);
}

std::string ConvexFunction::describe() const
{
    char buf[160];
    if (kind == ConvexKind::Support)
        std::snprintf(buf, sizeof buf, "support(c=%.6g%+.6gi, theta=%.6g)", center.real(), center.imag(), theta);
    else
        std::snprintf(buf, sizeof buf, "power(c=%.6g%+.6gi, alpha=%.6g)", center.real(), center.imag(), alpha);
    return buf;
}

std::vector<ConvexFunction> planar_battery(std::span<const cplx> anchor, const BatteryParameters& params)
{
    if (anchor.empty()) throw InputError("planar_battery: empty anchor set");
    if (params.grid < 1 || params.angles < 0) throw InputError("planar_battery: bad grid parameters");
    for (double a : params.alphas)
        if (!(a >= 1.0)) throw InputError("planar_battery: exponents must be >= 1");

    double x0 = anchor[0].real(), x1 = x0, y0 = anchor[0].imag(), y1 = y0;
    for (cplx p : anchor) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
    }
    std::vector<cplx> centers;
    const int g = params.grid;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const double u = g == 1 ? 0.5 : double(i) / (g - 1);
            const double v = g == 1 ? 0.5 : double(j) / (g - 1);
            centers.emplace_back(x0 + u * (x1 - x0), y0 + v * (y1 - y0));
        }

    std::vector<ConvexFunction> out;
    for (cplx c : centers) {
        if (params.support)
            for (int t = 0; t < params.angles; ++t)
                out.push_back({ConvexKind::Support, c, 2.0 * std::numbers::pi * t / params.angles, 1.0});
        for (double a : params.alphas) out.push_back({ConvexKind::Power, c, 0.0, a});
    }
    return out;
}

} // namespace logpot
