#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "logpot/matrix.hpp"

namespace logpot {

/// A = Q T Q* with Q unitary and T upper triangular.
struct SchurForm {
    ComplexMatrix q;
    ComplexMatrix t;

    /// Eigenvalues in the order they appear on the diagonal of T.
    ComplexVector eigenvalues() const { return t.diag(); }
};

struct HermitianEigen {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< columns are the matching unit eigenvectors
};

/// Columns form an orthonormal basis of the hyperplane orthogonal to the unit vector `v`.
/// Built from the Householder reflector that maps `v` onto a multiple of e_1.
ComplexMatrix orthonormal_complement(std::span<const cplx> v);

/// Complex Schur decomposition by Householder reduction to Hessenberg form followed
/// by single-shift QR sweeps with Wilkinson shifts. Throws NumericalError when an
/// eigenvalue needs more than 30 sweeps.
SchurForm schur_decompose(const ComplexMatrix& a);

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// Determinant by LU with partial pivoting, closed forms for orders 0..2.
cplx determinant(const ComplexMatrix& a);

/// Greedy nearest-pair matching of two equally sized multisets.
/// Returns the largest distance among the matched pairs.
double match_multisets(std::span<const cplx> a, std::span<const cplx> b);

/// max_ij |(M* M - I)_ij|
double unitarity_residual(const ComplexMatrix& m);

} // namespace logpot
