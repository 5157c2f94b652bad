#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "logpot/error.hpp"
#include "logpot/matrix.hpp"

namespace logpot {

struct PhaseOneOptions {
    double feasibility_tol = 1e-9;        ///< artificial objective below this => feasible
    double pivot_tol = 1e-11;
    double reduced_cost_tol = 1e-11;
    std::size_t max_iterations = 1'000'000;
};

/// Outcome of the phase-one program  min sum(artificials)  s.t.  A x + s = b, x, s >= 0.
struct PhaseOneResult {
    bool feasible = false;
    std::vector<double> x;       ///< a feasible point when `feasible`
    std::vector<double> farkas;  ///< y with y^T A <= 0 and y^T b > 0 when infeasible
    double infeasibility = 0.0;  ///< terminal artificial objective
    std::size_t iterations = 0;
};

/// Decides feasibility of {x >= 0 : A x = b} with a dense tableau and Bland's
/// anti-cycling rule. Throws NumericalError when the iteration cap is hit.
PhaseOneResult solve_phase_one(const RealMatrix& a, std::span<const double> b, const PhaseOneOptions& options = {});

} // namespace logpot
