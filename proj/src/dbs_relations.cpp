#include "logpot/dbs_relations.hpp"

#include <cmath>
#include <random>
#include <string>

#include "logpot/error.hpp"
#include "logpot/linalg.hpp"

namespace logpot {

namespace {

void check_levels(std::size_t n, std::size_t k, std::size_t m)
{
    if (k < 1 || k + 1 > n)
        throw InputError("level k=" + std::to_string(k) + " outside 1.." + std::to_string(n > 0 ? n - 1 : 0));
    if (m < 1 || m > k) throw InputError("order m=" + std::to_string(m) + " outside 1.." + std::to_string(k));
    if (binomial(n, k) > kMaxCompoundDim)
        throw InputError("C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the level cap");
}

const ChargeConfiguration& require_normalized(const ChargeConfiguration& config)
{
    if (!config.normalized()) throw InputError("configuration charges must sum to 1");
    return config;
}

WeightedTuple tuple_of(std::span<const cplx> v, std::span<const double> w)
{
    return WeightedTuple::planar(v, w, 1e-10);
}

} // namespace

cplx elementary_symmetric(std::span<const cplx> values, std::size_t m)
{
    if (m > values.size()) return 0.0;
    std::vector<cplx> e(m + 1, 0.0);
    e[0] = 1.0;
    for (cplx v : values)
        for (std::size_t j = m; j >= 1; --j) e[j] += v * e[j - 1];
    return e[m];
}

WeightedTuple SymmetricVectors::w_tuple() const { return tuple_of(w_vec, a_weights); }
WeightedTuple SymmetricVectors::z_tuple() const { return tuple_of(z_vec, b_weights); }

SymmetricVectors symmetric_vectors(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                   std::size_t k, std::size_t m, cplx lambda, cplx mu)
{
    require_normalized(config);
    const std::size_t n = config.size();
    if (equilibria.size() + 1 != n) throw InputError("symmetric_vectors: expected n-1 equilibria");
    check_levels(n, k, m);

    SymmetricVectors sv;
    sv.k = k;
    sv.m = m;
    sv.lambda = lambda;
    sv.mu = mu;
    const double cw = static_cast<double>(binomial(n - 1, k));
    std::vector<cplx> buf(k);
    for (const auto& s : index_sets(n - 1, k)) {
        for (std::size_t t = 0; t < k; ++t) buf[t] = lambda * equilibria[s[t]] + mu;
        sv.w_vec.push_back(elementary_symmetric(buf, m));
        sv.a_weights.push_back(1.0 / cw);
    }
    const auto& z = config.points();
    const auto& a = config.charges();
    for (const auto& s : index_sets(n, k)) {
        double wsum = 0.0;
        for (std::size_t t = 0; t < k; ++t) {
            buf[t] = lambda * z[s[t]] + mu;
            wsum += a[s[t]];
        }
        sv.z_vec.push_back(elementary_symmetric(buf, m));
        sv.b_weights.push_back((1.0 - wsum) / cw);
    }
    return sv;
}

namespace {

DbsCertificate certify(const ChargeConfiguration& config, std::size_t k, RealMatrix r, ComplexVector equilibria,
                       const HierarchyOptions& options)
{
    DbsCertificate cert;
    cert.k = k;
    cert.r = std::move(r);
    cert.equilibria = std::move(equilibria);
    {
        const auto sv = symmetric_vectors(config, cert.equilibria, k, k);
        cert.residuals = verify_certificate(cert.r, sv.w_tuple(), sv.z_tuple());
    }
    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * k));
    std::normal_distribution<double> g(0.0, 1.0);
    for (std::size_t t = 0; t < options.transforms; ++t) {
        cplx lambda{g(rng), g(rng)};
        if (std::abs(lambda) < 1e-3) lambda = 1.0;
        const cplx mu{g(rng), g(rng)};
        for (std::size_t m = 1; m <= k; ++m) {
            const auto sv = symmetric_vectors(config, cert.equilibria, k, m, lambda, mu);
            double scale = 1.0;
            for (cplx v : sv.z_vec) scale = std::max(scale, std::abs(v));
            const auto res = verify_certificate(cert.r, sv.w_tuple(), sv.z_tuple());
            cert.transform_residual = std::max(cert.transform_residual, res.max() / scale);
        }
    }
    return cert;
}

} // namespace

DbsCertificate construct_first_order(const ChargeConfiguration& config, const HierarchyOptions& options)
{
    require_normalized(config);
    const std::size_t n = config.size();
    if (n < 2) throw InputError("construct_first_order: need at least two charges");
    const auto cb = compression_basis(config);
    RealMatrix r(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = std::norm(cb.basis(j, i));
    return certify(config, 1, std::move(r), cb.equilibria, options);
}

DbsCertificate construct_hierarchy(const ChargeConfiguration& config, std::size_t k, const HierarchyOptions& options)
{
    require_normalized(config);
    const std::size_t n = config.size();
    check_levels(n, k, k);
    const auto cb = compression_basis(config);
    const ComplexMatrix u = cb.basis.adjoint();
    const ComplexMatrix uk = compound(u, k);
    const auto rows = index_sets(n, k);
    RealMatrix r(binomial(n - 1, k), uk.cols());
    std::size_t out = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].back() == n - 1) continue;
        for (std::size_t j = 0; j < uk.cols(); ++j) r(out, j) = std::norm(uk(i, j));
        ++out;
    }
    return certify(config, k, std::move(r), cb.equilibria, options);
}

IdentityCheck check_newton_identities(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                      std::size_t k)
{
    require_normalized(config);
    const std::size_t n = config.size();
    if (equilibria.size() + 1 != n) throw InputError("check_newton_identities: expected n-1 equilibria");
    check_levels(n, k, 1);
    IdentityCheck c;
    for (const auto& s : index_sets(n - 1, k)) {
        cplx p = 1.0;
        for (auto i : s) p *= equilibria[i];
        c.lhs += p;
    }
    const auto& z = config.points();
    const auto& a = config.charges();
    for (const auto& s : index_sets(n, k)) {
        cplx p = 1.0;
        double wsum = 0.0;
        for (auto i : s) {
            p *= z[i];
            wsum += a[i];
        }
        c.rhs += (1.0 - wsum) * p;
    }
    c.residual = std::abs(c.lhs - c.rhs);
    return c;
}

MomentCheck moment_inequalities(const ChargeConfiguration& config, std::span<const cplx> equilibria, std::size_t k,
                                std::size_t m, double alpha)
{
    if (!(alpha >= 1.0)) throw InputError("moment_inequalities: alpha must be >= 1");
    const auto sv = symmetric_vectors(config, equilibria, k, m);
    const double cw = static_cast<double>(binomial(config.size() - 1, k));
    MomentCheck c;
    for (cplx v : sv.w_vec) c.lhs += std::pow(std::abs(v), alpha);
    for (std::size_t j = 0; j < sv.z_vec.size(); ++j) c.rhs += cw * sv.b_weights[j] * std::pow(std::abs(sv.z_vec[j]), alpha);
    c.margin = c.rhs - c.lhs;
    return c;
}

MomentCheck moment_inequalities_averaged(const ChargeConfiguration& config, std::span<const cplx> equilibria,
                                         std::size_t k, std::size_t m, double alpha)
{
    auto c = moment_inequalities(config, equilibria, k, m, alpha);
    const double cw = static_cast<double>(binomial(config.size() - 1, k));
    c.lhs /= cw;
    c.rhs /= cw;
    c.margin = c.rhs - c.lhs;
    return c;
}

MMatrixCheck m_matrix_identity(std::span<const double> x)
{
    const std::size_t m = x.size();
    if (m == 0) throw InputError("m_matrix_identity: empty vector");
    double nrm2 = 0.0;
    for (double v : x) {
        if (!(v > 0.0 && v < 1.0)) throw InputError("m_matrix_identity: entries must lie in (0, 1)");
        nrm2 += v * v;
    }
    if (!(nrm2 < 1.0)) throw InputError("m_matrix_identity: |x| must be < 1");

    ComplexMatrix xm(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) xm(i, j) = (i == j ? 1.0 : 0.0) - x[i] * x[j];
    MMatrixCheck c;
    for (std::size_t i = 0; i < m; ++i) {
        if (m == 1) {
            c.lhs += 1.0;
            continue;
        }
        IndexSet keep;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) keep.push_back(j);
        c.lhs += determinant(submatrix(xm, keep, keep)).real();
    }
    c.lhs -= static_cast<double>(m) * determinant(xm).real();
    c.rhs = nrm2;
    c.residual = std::abs(c.lhs - c.rhs);
    return c;
}

} // namespace logpot
