#pragma once

#include <span>
#include <vector>

#include "logpot/matrix.hpp"

namespace logpot {

/// Coefficients in ascending powers: c[0] + c[1] z + ... + c[d] z^d.
using Polynomial = std::vector<cplx>;

cplx poly_eval(std::span<const cplx> coeffs, cplx z);

/// Product of two polynomials (ascending coefficients).
Polynomial poly_multiply(std::span<const cplx> a, std::span<const cplx> b);

/// All roots of a polynomial with nonzero leading coefficient, by simultaneous
/// Aberth-Ehrlich iteration followed by Newton polishing.
std::vector<cplx> aberth_roots(std::span<const cplx> coeffs);

/// Zeros of sum_i c_i / (z - p_i) for complex weights c_i with nonzero sum.
/// Runs the Aberth iteration directly on the rational function, never expanding coefficients.
std::vector<cplx> rational_zeros(std::span<const cplx> poles, std::span<const cplx> weights);

} // namespace logpot
