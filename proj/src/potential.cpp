#include "logpot/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "logpot/geometry.hpp"

namespace logpot {

namespace {

void require_normalized(const ChargeConfiguration& c, const char* what)
{
    if (!c.normalized()) throw InputError(std::string(what) + " requires a normalized configuration");
}

} // namespace

ChargeConfiguration::ChargeConfiguration(std::vector<cplx> points, std::vector<double> charges)
    : points_(std::move(points)), charges_(std::move(charges)), diameter_(logpot::diameter(points_))
{
    normalized_ = std::abs(total_charge() - 1.0) <= 1e-12;
}

ChargeConfiguration ChargeConfiguration::create(std::vector<cplx> points, std::vector<double> charges,
                                                CoincidentPolicy policy)
{
    if (points.size() != charges.size())
        throw InputError("configuration has " + std::to_string(points.size()) + " points but " +
                         std::to_string(charges.size()) + " charges");
    if (points.empty()) throw InputError("configuration needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].real()) || !std::isfinite(points[i].imag()))
            throw InputError("point " + std::to_string(i + 1) + " is not finite");
        if (!(charges[i] > 0.0) || !std::isfinite(charges[i]))
            throw InputError("charge " + std::to_string(i + 1) + " must be a positive finite number");
    }

    const double sep = 1e-9 * logpot::diameter(points);
    if (policy == CoincidentPolicy::Merge) {
        std::vector<cplx> mp;
        std::vector<double> mc;
        std::vector<cplx> moment;
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::size_t j = 0;
            for (; j < mp.size(); ++j)
                if (std::abs(mp[j] - points[i]) <= sep) break;
            if (j == mp.size()) {
                mp.push_back(points[i]);
                mc.push_back(charges[i]);
                moment.push_back(charges[i] * points[i]);
            } else {
                mc[j] += charges[i];
                moment[j] += charges[i] * points[i];
                mp[j] = moment[j] / mc[j];
            }
        }
        points = std::move(mp);
        charges = std::move(mc);
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (std::abs(points[i] - points[j]) <= sep)
                    throw InputError("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                     " coincide within the separation tolerance");
    }
    return ChargeConfiguration(std::move(points), std::move(charges));
}

double ChargeConfiguration::total_charge() const noexcept
{
    return std::accumulate(charges_.begin(), charges_.end(), 0.0);
}

double EquilibriumSet::max_residual() const noexcept
{
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

ChargeConfiguration normalize(const ChargeConfiguration& config)
{
    if (config.normalized()) return config;
    const double total = config.total_charge();
    std::vector<double> a = config.charges();
    for (auto& x : a) x /= total;
    return ChargeConfiguration::create(config.points(), std::move(a));
}

cplx field_eval(const ChargeConfiguration& config, cplx z)
{
    const auto& p = config.points();
    const auto& a = config.charges();
    cplx f{};
    for (std::size_t i = 0; i < p.size(); ++i) {
        const cplx d = z - p[i];
        if (std::abs(d) <= config.separation_tolerance() || d == cplx{})
            throw InputError("field evaluated at a pole (point " + std::to_string(i + 1) + ")");
        f += a[i] / d;
    }
    return f;
}

double potential_eval(const ChargeConfiguration& config, cplx z, PotentialGauge gauge)
{
    const auto& p = config.points();
    const auto& a = config.charges();
    double u = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const cplx d = z - p[i];
        if (std::abs(d) <= config.separation_tolerance() || d == cplx{})
            throw InputError("potential evaluated at a pole (point " + std::to_string(i + 1) + ")");
        if (gauge == PotentialGauge::Origin) {
            if (p[i] == cplx{})
                throw InputError("origin gauge needs nonzero points; point " + std::to_string(i + 1) + " is 0");
            u += a[i] * std::log(std::abs(1.0 - z / p[i]));
        } else {
            u += a[i] * std::log(std::abs(d));
        }
    }
    return u;
}

Polynomial equilibrium_polynomial(const ChargeConfiguration& config)
{
    require_normalized(config, "equilibrium_polynomial");
    const auto& p = config.points();
    const auto& a = config.charges();
    const std::size_t n = p.size();
    Polynomial sum(n, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial term{cplx(a[i])};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const cplx lin[2] = {-p[j], cplx(1.0)};
            term = poly_multiply(term, lin);
        }
        for (std::size_t k = 0; k < term.size(); ++k) sum[k] += term[k];
    }
    const cplx lead = sum.back();
    for (auto& c : sum) c /= lead;
    sum.back() = 1.0;
    return sum;
}

ComplexMatrix compression_matrix(const ChargeConfiguration& config)
{
    require_normalized(config, "compression_matrix");
    const std::size_t n = config.size();
    if (n < 2) throw InputError("compression_matrix needs at least two points");
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::sqrt(config.charges()[i]);
    double norm = 0.0;
    for (const auto& x : v) norm = std::hypot(norm, std::abs(x));
    for (auto& x : v) x /= norm;
    const ComplexMatrix b = orthonormal_complement(v);
    const auto& z = config.points();

    ComplexMatrix c(n - 1, n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j) {
            cplx s{};
            for (std::size_t k = 0; k < n; ++k) s += std::conj(b(k, i)) * z[k] * b(k, j);
            c(i, j) = s;
        }
    const bool real_points = std::all_of(z.begin(), z.end(), [](cplx p) { return p.imag() == 0.0; });
    if (real_points) {
        for (std::size_t i = 0; i < n - 1; ++i) {
            c(i, i) = c(i, i).real();
            for (std::size_t j = i + 1; j < n - 1; ++j) c(j, i) = std::conj(c(i, j));
        }
    }
    return c;
}

CompressionBasis compression_basis(const ChargeConfiguration& config)
{
    require_normalized(config, "compression_basis");
    const std::size_t n = config.size();
    if (n < 2) throw InputError("compression_basis needs at least two points");
    const auto& z = config.points();
    const auto& a = config.charges();

    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::sqrt(a[i]);
    double norm = 0.0;
    for (const auto& x : v) norm = std::hypot(norm, std::abs(x));
    for (auto& x : v) x /= norm;
    const ComplexMatrix b = orthonormal_complement(v);

    // Collinear points: z = origin + direction * x with x real, so the compression is
    // origin + direction * (Hermitian matrix) and its eigenvectors triangularize it.
    const bool real_points = std::all_of(z.begin(), z.end(), [](cplx p) { return p.imag() == 0.0; });
    cplx origin{0.0, 0.0}, direction{1.0, 0.0};
    bool collinear = real_points;
    if (!collinear && n > 2) {
        const LineFit fit = fit_line(z);
        if (fit.sigma_min <= 1e-14 * fit.sigma_max) {
            collinear = true;
            origin = fit.centroid;
            direction = fit.direction;
        }
    }

    CompressionBasis out;
    ComplexMatrix inner;  // (n-1) x (n-1) unitary acting on the complement
    if (collinear) {
        std::vector<cplx> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = (std::conj(direction) * (z[i] - origin)).real();
        ComplexMatrix h(n - 1, n - 1);
        for (std::size_t i = 0; i < n - 1; ++i)
            for (std::size_t j = i; j < n - 1; ++j) {
                cplx s{};
                for (std::size_t k = 0; k < n; ++k) s += std::conj(b(k, i)) * x[k] * b(k, j);
                h(i, j) = s;
                h(j, i) = std::conj(s);
            }
        for (std::size_t i = 0; i < n - 1; ++i) h(i, i) = h(i, i).real();
        HermitianEigen eig = hermitian_eigen(h);
        inner = std::move(eig.vectors);
        out.triangular = ComplexMatrix(n - 1, n - 1);
        for (std::size_t i = 0; i < n - 1; ++i) out.triangular(i, i) = origin + direction * eig.values[i];
        out.hermitian_route = true;
    } else {
        SchurForm s = schur_decompose(compression_matrix(config));
        inner = std::move(s.q);
        out.triangular = std::move(s.t);
    }

    const ComplexMatrix bq = b * inner;
    out.basis = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) out.basis(i, j) = bq(i, j);
        out.basis(i, n - 1) = v[i];
    }
    out.equilibria = out.triangular.diag();
    return out;
}

std::vector<double> equilibrium_residuals(const ChargeConfiguration& config, std::span<const cplx> w)
{
    // Evaluated as sum_i a_i prod_{j != i} (w - z_j) in the frame centred at the barycenter
    // with unit radius; the expanded coefficients lose everything on clustered charges.
    const ChargeConfiguration c = normalize(config);
    const cplx zeta = barycenter(c);
    double radius = 0.0;
    for (cplx z : c.points()) radius = std::max(radius, std::abs(z - zeta));
    if (radius == 0.0) radius = 1.0;
    const std::size_t n = c.size();
    const double deg = static_cast<double>(n - 1);
    std::vector<cplx> zs(n);
    for (std::size_t i = 0; i < n; ++i) zs[i] = (c.points()[i] - zeta) / radius;
    std::vector<double> r(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        const cplx x = (w[k] - zeta) / radius;
        cplx p = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx t = c.charges()[i];
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) t *= x - zs[j];
            p += t;
        }
        r[k] = std::abs(p) / (1.0 + std::pow(std::abs(x), deg));
    }
    return r;
}

EquilibriumSet solve_equilibria(const ChargeConfiguration& config, const SolveOptions& options)
{
    EquilibriumSet out;
    out.method = SolveMethod::Compression;
    if (config.size() < 2) return out;
    const ChargeConfiguration c = normalize(config);
    out.points = compression_basis(c).equilibria;
    out.residuals = equilibrium_residuals(c, out.points);
    if (out.max_residual() > options.residual_tolerance)
    {
        char buf[128];
        std::snprintf(buf, sizeof buf, "equilibrium residual %.3g exceeds tolerance %.3g", out.max_residual(),
                      options.residual_tolerance);
        throw NumericalError(buf);
    }
    return out;
}

EquilibriumSet solve_equilibria_polynomial(const ChargeConfiguration& config)
{
    EquilibriumSet out;
    out.method = SolveMethod::Polynomial;
    if (config.size() < 2) return out;
    const ChargeConfiguration c = normalize(config);
    out.points = aberth_roots(equilibrium_polynomial(c));
    out.residuals = equilibrium_residuals(c, out.points);
    return out;
}

cplx barycenter(const ChargeConfiguration& config)
{
    require_normalized(config, "barycenter");
    cplx s{};
    for (std::size_t i = 0; i < config.size(); ++i) s += config.charges()[i] * config.points()[i];
    return s;
}

double weighted_second_moment(const ChargeConfiguration& config, cplx alpha)
{
    require_normalized(config, "weighted_second_moment");
    double s = 0.0;
    for (std::size_t i = 0; i < config.size(); ++i) s += config.charges()[i] * std::norm(config.points()[i] - alpha);
    return s;
}

double weighted_variance(const ChargeConfiguration& config)
{
    return weighted_second_moment(config, barycenter(config));
}

double weighted_std(const ChargeConfiguration& config)
{
    return std::sqrt(weighted_variance(config));
}

} // namespace logpot
