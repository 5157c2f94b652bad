#include "logpot/simplex_lp.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace logpot {

PhaseOneResult solve_phase_one(const RealMatrix& a, std::span<const double> b, const PhaseOneOptions& options)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw InputError("solve_phase_one: rhs length does not match constraint count");

    // Tableau columns: n structural, m artificial, 1 rhs. Row m holds reduced costs.
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<double> t((m + 1) * width, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * width + j]; };

    std::vector<double> sign(m, 1.0);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) at(i, j) = sign[i] * a(i, j);
        at(i, n + i) = 1.0;
        at(i, rhs) = sign[i] * b[i];
        basis[i] = n + i;
    }
    // reduced costs for cost vector (0, ..., 0, 1, ..., 1); the rhs cell holds -objective
    for (std::size_t j = 0; j < width; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += at(i, j);
        at(m, j) = (j >= n && j < rhs) ? 1.0 - s : -s;
    }

    PhaseOneResult res;
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (at(m, j) < -options.reduced_cost_tol) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double piv = at(i, enter);
            if (piv <= options.pivot_tol) continue;
            const double ratio = std::max(at(i, rhs), 0.0) / piv;
            if (leave == m) {
                best = ratio;
                leave = i;
                continue;
            }
            const double slack = 1e-12 * std::max(1.0, best);
            if (ratio < best - slack || (ratio <= best + slack && basis[i] < basis[leave])) {
                best = std::min(best, ratio);
                leave = i;
            }
        }
        if (leave == m) {
            // no positive pivot: the reduced cost is round-off, drop it
            at(m, enter) = 0.0;
            continue;
        }

        if (++res.iterations > options.max_iterations)
            throw NumericalError("simplex phase one exceeded " + std::to_string(options.max_iterations) +
                                 " iterations");

        const double piv = at(leave, enter);
        for (std::size_t j = 0; j < width; ++j) at(leave, j) /= piv;
        at(leave, enter) = 1.0;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = at(i, enter);
            if (f == 0.0) continue;
            double* row = &t[i * width];
            const double* prow = &t[leave * width];
            for (std::size_t j = 0; j < width; ++j) row[j] -= f * prow[j];
            row[enter] = 0.0;
        }
        basis[leave] = enter;
    }

    res.infeasibility = -at(m, rhs);
    res.feasible = res.infeasibility < options.feasibility_tol;
    if (res.feasible) {
        res.x.assign(n, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.x[basis[i]] = std::max(at(i, rhs), 0.0);
    } else {
        // duals of the sign-adjusted system: y_i = c_art - reduced cost = 1 - d_{n+i}
        res.farkas.resize(m);
        for (std::size_t i = 0; i < m; ++i) res.farkas[i] = sign[i] * (1.0 - at(m, n + i));
    }
    return res;
}

} // namespace logpot
