#include "logpot/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

namespace logpot {

namespace {

constexpr double kEps = DBL_EPSILON;

// Rotation G = [[c, s], [-conj(s), c]] with c real, chosen so that G (x, y)^T = (r, 0)^T.
struct Givens {
    double c = 1.0;
    cplx s{0.0, 0.0};

    static Givens zeroing(cplx x, cplx y)
    {
        Givens g;
        const double ay = std::abs(y);
        if (ay == 0.0) return g;
        const double ax = std::abs(x);
        if (ax == 0.0) {
            g.c = 0.0;
            g.s = std::conj(y) / ay;
            return g;
        }
        const double r = std::hypot(ax, ay);
        g.c = ax / r;
        g.s = (x / ax) * std::conj(y) / r;
        return g;
    }

    // rows k, k+1 of m, columns [j0, j1)
    void apply_left(ComplexMatrix& m, std::size_t k, std::size_t j0, std::size_t j1) const
    {
        for (std::size_t j = j0; j < j1; ++j) {
            const cplx a = m(k, j);
            const cplx b = m(k + 1, j);
            m(k, j) = c * a + s * b;
            m(k + 1, j) = -std::conj(s) * a + c * b;
        }
    }

    // columns k, k+1 of m multiplied by G*, rows [i0, i1)
    void apply_right_adjoint(ComplexMatrix& m, std::size_t k, std::size_t i0, std::size_t i1) const
    {
        for (std::size_t i = i0; i < i1; ++i) {
            const cplx a = m(i, k);
            const cplx b = m(i, k + 1);
            m(i, k) = a * c + b * std::conj(s);
            m(i, k + 1) = -a * s + b * c;
        }
    }
};

// In-place Householder reduction to upper Hessenberg form; accumulates the unitary factor in q.
void reduce_to_hessenberg(ComplexMatrix& h, ComplexMatrix& q)
{
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<cplx> u(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm = std::hypot(xnorm, std::abs(h(i, k)));
        if (xnorm == 0.0) continue;
        const cplx x0 = h(k + 1, k);
        const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0, 0.0) : x0 / std::abs(x0);
        std::fill(u.begin(), u.end(), cplx{});
        u[k + 1] = x0 + phase * xnorm;
        for (std::size_t i = k + 2; i < n; ++i) u[i] = h(i, k);
        double unorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) unorm2 += std::norm(u[i]);
        if (unorm2 == 0.0) continue;
        const double beta = 2.0 / unorm2;

        // h <- (I - beta u u*) h
        for (std::size_t j = k; j < n; ++j) {
            cplx dot{};
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(u[i]) * h(i, j);
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= u[i] * dot;
        }
        // h <- h (I - beta u u*), q <- q (I - beta u u*)
        auto right = [&](ComplexMatrix& m) {
            for (std::size_t i = 0; i < n; ++i) {
                cplx dot{};
                for (std::size_t j = k + 1; j < n; ++j) dot += m(i, j) * u[j];
                dot *= beta;
                for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= dot * std::conj(u[j]);
            }
        };
        right(h);
        right(q);
        h(k + 1, k) = -phase * xnorm;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = cplx{};
    }
}

cplx wilkinson_shift(const ComplexMatrix& h, std::size_t hi)
{
    const cplx a = h(hi - 1, hi - 1);
    const cplx b = h(hi - 1, hi);
    const cplx c = h(hi, hi - 1);
    const cplx d = h(hi, hi);
    const cplx half_diff = 0.5 * (a - d);
    const cplx disc = std::sqrt(half_diff * half_diff + b * c);
    const cplx mean = 0.5 * (a + d);
    const cplx mu1 = mean + disc;
    const cplx mu2 = mean - disc;
    return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

} // namespace

ComplexMatrix orthonormal_complement(std::span<const cplx> v)
{
    const std::size_t n = v.size();
    if (n < 2) throw InputError("orthonormal_complement needs dimension >= 2, got " + std::to_string(n));
    double norm = 0.0;
    for (const auto& x : v) norm = std::hypot(norm, std::abs(x));
    if (std::abs(norm - 1.0) > 1e-12)
        throw InputError("orthonormal_complement needs a unit vector, |v| = " + std::to_string(norm));

    const cplx phase = std::abs(v[0]) == 0.0 ? cplx(1.0, 0.0) : v[0] / std::abs(v[0]);
    std::vector<cplx> u(v.begin(), v.end());
    u[0] += phase;
    double unorm2 = 0.0;
    for (const auto& x : u) unorm2 += std::norm(x);
    const double beta = 2.0 / unorm2;

    ComplexMatrix c(n, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            c(i, j - 1) = (i == j ? 1.0 : 0.0) - beta * u[i] * std::conj(u[j]);
    return c;
}

SchurForm schur_decompose(const ComplexMatrix& a)
{
    if (!a.square()) throw InputError("schur_decompose needs a square matrix");
    if (!a.all_finite()) throw InputError("schur_decompose: non-finite entries");
    const std::size_t n = a.rows();
    if (n > 2048) throw InputError("schur_decompose: dimension above 2048");

    SchurForm f{ComplexMatrix::identity(n), a};
    ComplexMatrix& h = f.t;
    ComplexMatrix& q = f.q;
    if (n <= 1) return f;

    reduce_to_hessenberg(h, q);
    const double anorm = std::max(h.max_abs(), DBL_MIN);
    const double small = DBL_MIN / kEps;

    std::vector<Givens> rot(n);
    std::size_t hi = n - 1;
    int iter = 0;
    while (hi > 0) {
        std::size_t l = hi;
        for (; l > 0; --l) {
            double s = std::abs(h(l, l)) + std::abs(h(l - 1, l - 1));
            if (s == 0.0) s = anorm;
            const double sub = std::abs(h(l, l - 1));
            if (sub <= kEps * s || sub < small) {
                h(l, l - 1) = cplx{};
                break;
            }
        }
        if (l == hi) {
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > 30)
            throw NumericalError("schur_decompose: no convergence after 30 QR sweeps for eigenvalue " +
                                 std::to_string(hi));

        cplx shift;
        if (iter == 10 || iter == 20) {
            // exceptional shift to break stagnation cycles
            shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1)) * cplx(1.0, 0.5);
        } else {
            shift = wilkinson_shift(h, hi);
        }

        for (std::size_t i = l; i <= hi; ++i) h(i, i) -= shift;
        for (std::size_t k = l; k < hi; ++k) {
            rot[k] = Givens::zeroing(h(k, k), h(k + 1, k));
            rot[k].apply_left(h, k, k, n);
            h(k + 1, k) = cplx{};
        }
        for (std::size_t k = l; k < hi; ++k) {
            rot[k].apply_right_adjoint(h, k, 0, k + 2);
            rot[k].apply_right_adjoint(q, k, 0, n);
        }
        for (std::size_t i = l; i <= hi; ++i) h(i, i) += shift;
    }

    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) h(i, j) = cplx{};
    return f;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a)
{
    if (!a.square()) throw InputError("hermitian_eigen needs a square matrix");
    const std::size_t n = a.rows();
    if (n > 2048) throw InputError("hermitian_eigen: dimension above 2048");
    const double amax = a.max_abs();
    double skew = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) skew = std::max(skew, std::abs(a(i, j) - std::conj(a(j, i))));
    if (skew > 1e-12 * amax)
        throw InputError("hermitian_eigen: matrix is not Hermitian (skew residual " + std::to_string(skew) + ")");

    ComplexMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(m(i, j));
        return std::sqrt(2.0 * s);
    };
    double total = 0.0;
    for (const auto& x : m.data()) total += std::norm(x);
    total = std::sqrt(total);

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_norm() > 1e-15 * total && total > 0.0) {
        if (++sweep > kMaxSweeps) throw NumericalError("hermitian_eigen: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = m(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx ph = apq / mag;  // e^{i phi}
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // V restricted to (p, q) = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                const cplx v00 = c, v01 = s;
                const cplx v10 = -s * std::conj(ph), v11 = c * std::conj(ph);
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx x = m(i, p), y = m(i, q);
                    m(i, p) = x * v00 + y * v10;
                    m(i, q) = x * v01 + y * v11;
                    const cplx ex = v(i, p), ey = v(i, q);
                    v(i, p) = ex * v00 + ey * v10;
                    v(i, q) = ex * v01 + ey * v11;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx x = m(p, j), y = m(q, j);
                    m(p, j) = std::conj(v00) * x + std::conj(v10) * y;
                    m(q, j) = std::conj(v01) * x + std::conj(v11) * y;
                }
                m(p, q) = m(q, p) = cplx{};
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });
    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = m(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("hadamard: shape mismatch");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
    return c;
}

cplx determinant(const ComplexMatrix& a)
{
    if (!a.square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    switch (n) {
    case 0: return {1.0, 0.0};
    case 1: return a(0, 0);
    case 2: return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    default: break;
    }
    ComplexMatrix lu = a;
    cplx det{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > best) best = std::abs(lu(i, k)), piv = i;
        if (best == 0.0) return {0.0, 0.0};
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        const cplx pivot = lu(k, k);
        det *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = lu(i, k) / pivot;
            if (f == cplx{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

double match_multisets(std::span<const cplx> a, std::span<const cplx> b)
{
    if (a.size() != b.size()) throw InputError("match_multisets: sizes differ");
    const std::size_t n = a.size();
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    pairs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(std::abs(a[i] - b[j]), i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> used_a(n), used_b(n);
    double worst = 0.0;
    std::size_t matched = 0;
    for (const auto& [d, i, j] : pairs) {
        if (used_a[i] || used_b[j]) continue;
        used_a[i] = used_b[j] = true;
        worst = std::max(worst, d);
        if (++matched == n) break;
    }
    return worst;
}

double unitarity_residual(const ComplexMatrix& m)
{
    const ComplexMatrix g = m.adjoint() * m;
    double r = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            r = std::max(r, std::abs(g(i, j) - (i == j ? cplx(1.0) : cplx{})));
    return r;
}

} // namespace logpot
