#include "logpot/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace logpot {

namespace {

constexpr int kMaxAberthIterations = 2000;

// Simultaneous Aberth iteration given a routine returning the Newton correction p/p' at z.
template <typename NewtonRatio>
void aberth_iterate(std::vector<cplx>& roots, NewtonRatio newton_ratio, double scale)
{
    const std::size_t d = roots.size();
    std::vector<bool> done(d, false);
    for (int it = 0; it < kMaxAberthIterations; ++it) {
        bool all_done = true;
        for (std::size_t j = 0; j < d; ++j) {
            if (done[j]) continue;
            const cplx ratio = newton_ratio(roots[j]);
            if (ratio == cplx{}) {
                done[j] = true;
                continue;
            }
            cplx repulsion{};
            for (std::size_t k = 0; k < d; ++k)
                if (k != j) {
                    const cplx diff = roots[j] - roots[k];
                    if (diff != cplx{}) repulsion += 1.0 / diff;
                }
            const cplx step = ratio / (1.0 - ratio * repulsion);
            roots[j] -= step;
            if (std::abs(step) <= 4.0 * 2.220446049250313e-16 * (std::abs(roots[j]) + scale))
                done[j] = true;
            else
                all_done = false;
        }
        if (all_done) return;
    }
}

std::vector<cplx> circle_start(std::size_t d, cplx center, double radius)
{
    std::vector<cplx> z(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d) + 0.4;
        z[j] = center + radius * cplx(std::cos(ang), std::sin(ang));
    }
    return z;
}

} // namespace

cplx poly_eval(std::span<const cplx> coeffs, cplx z)
{
    cplx acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial poly_multiply(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.empty() || b.empty()) return {};
    Polynomial c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<cplx> aberth_roots(std::span<const cplx> coeffs)
{
    std::size_t top = coeffs.size();
    while (top > 0 && coeffs[top - 1] == cplx{}) --top;
    if (top == 0) throw InputError("aberth_roots: zero polynomial");
    const std::size_t d = top - 1;
    if (d == 0) return {};
    const std::span<const cplx> p = coeffs.first(top);

    Polynomial dp(d);
    for (std::size_t i = 1; i <= d; ++i) dp[i - 1] = static_cast<double>(i) * p[i];

    // Fujiwara-type bound on root moduli
    double radius = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        radius = std::max(radius, std::pow(std::abs(p[i] / p[d]), 1.0 / static_cast<double>(d - i)));
    radius = std::max(radius, 1e-3);
    const cplx center = -p[d - 1] / (static_cast<double>(d) * p[d]);

    std::vector<cplx> roots = circle_start(d, center, radius);
    auto ratio = [&](cplx z) {
        const cplx pv = poly_eval(p, z);
        if (pv == cplx{}) return cplx{};
        const cplx dv = poly_eval(dp, z);
        return dv == cplx{} ? cplx(radius * 1e-3) : pv / dv;
    };
    aberth_iterate(roots, ratio, radius * 1e-3);

    for (auto& z : roots) {
        for (int k = 0; k < 3; ++k) {
            const cplx dv = poly_eval(dp, z);
            if (dv == cplx{}) break;
            const cplx step = poly_eval(p, z) / dv;
            const cplx cand = z - step;
            if (std::abs(poly_eval(p, cand)) < std::abs(poly_eval(p, z))) z = cand;
            else break;
        }
    }
    return roots;
}

std::vector<cplx> rational_zeros(std::span<const cplx> poles, std::span<const cplx> weights)
{
    if (poles.size() != weights.size()) throw InputError("rational_zeros: pole/weight count mismatch");
    const std::size_t n = poles.size();
    if (n < 2) return {};
    cplx total{};
    double mass = 0.0;
    for (const auto& w : weights) total += w, mass += std::abs(w);
    if (std::abs(total) <= 1e-14 * mass) throw InputError("rational_zeros: weights sum to zero");

    double spread = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) spread = std::max(spread, std::abs(poles[i] - poles[j]));

    // p/p' for p(z) = f(z) prod (z - z_i): p'/p = f'/f + sum 1/(z - z_i)
    auto ratio = [&](cplx z) {
        cplx f{}, df{}, logd{};
        for (std::size_t i = 0; i < n; ++i) {
            const cplx inv = 1.0 / (z - poles[i]);
            f += weights[i] * inv;
            df -= weights[i] * inv * inv;
            logd += inv;
        }
        if (f == cplx{}) return cplx{};
        return 1.0 / (df / f + logd);
    };

    std::vector<cplx> zeros(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double ang = 0.7 + 2.0 * static_cast<double>(j);
        zeros[j] = 0.5 * (poles[j] + poles[j + 1]) + 1e-2 * spread * cplx(std::cos(ang), std::sin(ang));
    }
    aberth_iterate(zeros, ratio, spread * 1e-3);
    return zeros;
}

} // namespace logpot
