#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "logpot/matrix.hpp"

namespace logpot {

/// Strictly increasing 0-based indices drawn from {0, ..., n-1}.
using IndexSet = std::vector<std::size_t>;

/// Largest compound dimension C(n, k) accepted by the compound kernels.
inline constexpr std::uint64_t kMaxCompoundDim = 10000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<IndexSet> index_sets(std::size_t n, std::size_t k);

/// Position of `s` in the lexicographic enumeration of k-subsets of {0, ..., n-1}.
std::size_t lex_rank(std::span<const std::size_t> s, std::size_t n);

ComplexMatrix submatrix(const ComplexMatrix& m, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols);

/// k-th multiplicative compound: entry (I, J) = det M(I, J), lexicographic index sets.
/// Rows are filled in parallel.
ComplexMatrix compound(const ComplexMatrix& m, std::size_t k);

/// k-th additive compound, the t-coefficient of (I + tC)^(k). Rows filled in parallel.
ComplexMatrix additive_compound(const ComplexMatrix& c, std::size_t k);

namespace reference {

/// Serial compound, kept as the baseline for the parallel kernel.
ComplexMatrix compound(const ComplexMatrix& m, std::size_t k);
ComplexMatrix additive_compound(const ComplexMatrix& c, std::size_t k);

} // namespace reference

} // namespace logpot
