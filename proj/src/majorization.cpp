#include "logpot/majorization.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "logpot/error.hpp"

namespace logpot {

WeightedTuple WeightedTuple::create(std::size_t dim, std::vector<double> coords, std::vector<double> weights,
                                    double weight_tol)
{
    if (dim == 0) throw InputError("WeightedTuple: dimension must be positive");
    if (weights.empty()) throw InputError("WeightedTuple: empty tuple");
    if (coords.size() != dim * weights.size())
        throw InputError("WeightedTuple: coordinate count does not match weights");
    double s = 0.0;
    for (double w : weights) {
        if (!(w > 0.0 && w <= 1.0)) throw InputError("WeightedTuple: weights must lie in (0, 1]");
        s += w;
    }
    if (std::abs(s - 1.0) > weight_tol)
        throw InputError("WeightedTuple: weights sum to " + std::to_string(s) + ", expected 1");
    for (double c : coords)
        if (!std::isfinite(c)) throw InputError("WeightedTuple: non-finite coordinate");
    return WeightedTuple(dim, std::move(coords), std::move(weights));
}

WeightedTuple WeightedTuple::planar(std::span<const cplx> points, std::span<const double> weights, double weight_tol)
{
    if (points.size() != weights.size()) throw InputError("WeightedTuple: point and weight counts differ");
    std::vector<double> coords;
    coords.reserve(2 * points.size());
    for (cplx p : points) {
        coords.push_back(p.real());
        coords.push_back(p.imag());
    }
    return create(2, std::move(coords), {weights.begin(), weights.end()}, weight_tol);
}

WeightedTuple WeightedTuple::uniform(std::span<const cplx> points)
{
    std::vector<double> w(points.size(), points.empty() ? 0.0 : 1.0 / points.size());
    return planar(points, w, 1e-12);
}

cplx WeightedTuple::point(std::size_t i) const
{
    if (dim_ != 2) throw InputError("WeightedTuple::point: tuple is not planar");
    return {coords_[2 * i], coords_[2 * i + 1]};
}

std::vector<cplx> WeightedTuple::points() const
{
    std::vector<cplx> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = point(i);
    return out;
}

std::vector<double> WeightedTuple::barycenter() const
{
    std::vector<double> c(dim_, 0.0);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t k = 0; k < dim_; ++k) c[k] += weights_[i] * coords_[i * dim_ + k];
    return c;
}

CertificateResiduals verify_certificate(const RealMatrix& r, const WeightedTuple& x, const WeightedTuple& y)
{
    const std::size_t m = x.size(), n = y.size(), d = x.dim();
    if (r.rows() != m || r.cols() != n) throw InputError("verify_certificate: matrix shape does not match tuples");
    if (y.dim() != d) throw InputError("verify_certificate: tuples have different dimensions");

    CertificateResiduals res;
    res.min_entry = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        std::vector<double> mix(x.vec(i).begin(), x.vec(i).end());
        for (std::size_t j = 0; j < n; ++j) {
            s += r(i, j);
            res.min_entry = std::min(res.min_entry, r(i, j));
            for (std::size_t k = 0; k < d; ++k) mix[k] -= r(i, j) * y.vec(j)[k];
        }
        res.row = std::max(res.row, std::abs(s - 1.0));
        double nrm = 0.0;
        for (double v : mix) nrm += v * v;
        res.mix = std::max(res.mix, std::sqrt(nrm));
    }
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += x.weights()[i] * r(i, j);
        res.weight = std::max(res.weight, std::abs(y.weights()[j] - s));
    }
    return res;
}

double PiecewiseLinearConvex::operator()(std::span<const double> v) const
{
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        double s = offsets[i];
        for (std::size_t k = 0; k < v.size(); ++k) s += slopes[i][k] * v[k];
        best = std::max(best, s);
    }
    return best;
}

MajorizationResult check_weighted_majorization(const WeightedTuple& x, const WeightedTuple& y,
                                               const MajorizationOptions& options)
{
    const std::size_t m = x.size(), n = y.size(), d = x.dim();
    if (y.dim() != d) throw InputError("check_weighted_majorization: tuples have different dimensions");

    // variables r_ij at i * n + j; rows: m row sums, m*d mixing, n-1 weighted columns
    const std::size_t rows = m + m * d + (n - 1);
    RealMatrix a(rows, m * n, 0.0);
    std::vector<double> b(rows, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, i * n + j) = 1.0;
            for (std::size_t k = 0; k < d; ++k) a(m + i * d + k, i * n + j) = y.vec(j)[k];
            if (j + 1 < n) a(m + m * d + j, i * n + j) = x.weights()[i];
        }
        b[i] = 1.0;
        for (std::size_t k = 0; k < d; ++k) b[m + i * d + k] = x.vec(i)[k];
    }
    for (std::size_t j = 0; j + 1 < n; ++j) b[m + m * d + j] = y.weights()[j];

    const PhaseOneResult lp = solve_phase_one(a, b, options.lp);
    MajorizationResult out;
    out.feasible = lp.feasible;
    out.lp_infeasibility = lp.infeasibility;
    out.lp_iterations = lp.iterations;

    if (lp.feasible) {
        StochasticCertificate cert{RealMatrix(m, n, std::vector<double>(lp.x.begin(), lp.x.end())), {}};
        cert.residuals = verify_certificate(cert.r, x, y);
        out.certificate = std::move(cert);
        return out;
    }

    // Dual (u_i, p_i, q_j) satisfies u_i + <p_i, y_j> + a_i q_j <= 0, hence
    // phi(v) = max_i (u_i + <p_i, v>) / a_i gives sum a phi(x) - sum b phi(y) >= dual objective.
    MajorizationWitness w;
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double ai = x.weights()[i];
        w.phi.offsets.push_back(lp.farkas[i] / ai);
        std::vector<double> slope(d);
        for (std::size_t k = 0; k < d; ++k) slope[k] = lp.farkas[m + i * d + k] / ai;
        scale = std::max(scale, std::abs(w.phi.offsets.back()));
        for (double s : slope) scale = std::max(scale, std::abs(s));
        w.phi.slopes.push_back(std::move(slope));
    }
    if (scale > 0.0) {
        for (auto& o : w.phi.offsets) o /= scale;
        for (auto& s : w.phi.slopes)
            for (auto& v : s) v /= scale;
    }
    for (std::size_t i = 0; i < m; ++i) w.lhs += x.weights()[i] * w.phi(x.vec(i));
    for (std::size_t j = 0; j < n; ++j) w.rhs += y.weights()[j] * w.phi(y.vec(j));
    w.violation = w.lhs - w.rhs;
    w.verified = w.violation > options.certification_tol;
    out.witness = std::move(w);
    return out;
}

ConvexBatteryReport convex_battery(std::span<const cplx> x, std::span<const double> a, std::span<const cplx> y,
                                   std::span<const double> b, const std::vector<ConvexFunction>& battery)
{
    if (battery.empty()) throw InputError("convex_battery: empty battery");
    ConvexBatteryReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& phi : battery) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) lhs += a[i] * phi(x[i]);
        for (std::size_t j = 0; j < y.size(); ++j) rhs += b[j] * phi(y[j]);
        ++rep.evaluations;
        if (rhs - lhs < rep.worst_margin) {
            rep.worst_margin = rhs - lhs;
            rep.worst_function = phi;
        }
    }
    return rep;
}

ConvexBatteryReport convex_battery(const WeightedTuple& x, const WeightedTuple& y, const BatteryParameters& params)
{
    if (x.dim() != 2 || y.dim() != 2) throw InputError("convex_battery: the battery is planar");
    const auto xp = x.points(), yp = y.points();
    return convex_battery(xp, x.weights(), yp, y.weights(), planar_battery(yp, params));
}

ChoquetResult choquet_compare(const WeightedTuple& x, const WeightedTuple& y, const MajorizationOptions& options)
{
    if (x.dim() != 2 || y.dim() != 2) throw InputError("choquet_compare: planar tuples required");
    ChoquetResult res;
    res.lp = check_weighted_majorization(x, y, options);
    res.verdict = res.lp.feasible ? ChoquetVerdict::Dominated : ChoquetVerdict::NotDominated;
    if (!res.lp.feasible) {
        auto rep = convex_battery(x, y);
        if (rep.worst_margin < -options.certification_tol) res.battery = rep;
    }
    return res;
}

} // namespace logpot
