#include "logpot/compound.hpp"

#include <limits>
#include <string>

#include "logpot/linalg.hpp"

namespace logpot {

namespace {

void check_compound_args(const ComplexMatrix& m, std::size_t k)
{
    if (!m.square()) throw InputError("compound needs a square matrix");
    const std::size_t n = m.rows();
    if (k < 1 || k > n)
        throw InputError("compound order k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    if (binomial(n, k) > kMaxCompoundDim)
        throw InputError("compound dimension C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") exceeds cap " + std::to_string(kMaxCompoundDim));
}

cplx minor_det(const ComplexMatrix& m, const IndexSet& r, const IndexSet& c)
{
    switch (r.size()) {
    case 1: return m(r[0], c[0]);
    case 2: return m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
    default: return determinant(submatrix(m, r, c));
    }
}

// Entry (I, J) of the additive compound: trace part on the diagonal, a signed single entry of C
// when I and J differ in exactly one index, zero otherwise.
cplx additive_entry(const ComplexMatrix& c, const IndexSet& I, const IndexSet& J)
{
    const std::size_t k = I.size();
    if (I == J) {
        cplx s{};
        for (auto i : I) s += c(i, i);
        return s;
    }
    std::size_t ri = k, cj = k, common = 0;
    std::size_t a = 0, b = 0;
    while (a < k && b < k) {
        if (I[a] == J[b]) {
            ++common, ++a, ++b;
        } else if (I[a] < J[b]) {
            ri = a++;
        } else {
            cj = b++;
        }
    }
    if (a < k) ri = a;
    if (b < k) cj = b;
    if (common != k - 1) return {};
    const double sign = ((ri + cj) % 2 == 0) ? 1.0 : -1.0;
    return sign * c(I[ri], J[cj]);
}

template <typename Entry>
ComplexMatrix fill(std::size_t n, std::size_t k, bool parallel, Entry entry)
{
    const auto sets = index_sets(n, k);
    const std::size_t dim = sets.size();
    ComplexMatrix out(dim, dim);
    const auto rows = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < dim; ++j) out(static_cast<std::size_t>(i), j) = entry(sets[i], sets[j]);
    return out;
}

} // namespace

std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

std::vector<IndexSet> index_sets(std::size_t n, std::size_t k)
{
    std::vector<IndexSet> out;
    if (k > n) return out;
    if (binomial(n, k) > 100'000'000) throw InputError("index_sets: enumeration too large");
    out.reserve(binomial(n, k));
    IndexSet s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::size_t lex_rank(std::span<const std::size_t> s, std::size_t n)
{
    const std::size_t k = s.size();
    std::size_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t start = (i == 0) ? 0 : prev + 1;
        for (std::size_t v = start; v < s[i]; ++v) rank += binomial(n - v - 1, k - i - 1);
        prev = s[i];
    }
    return rank;
}

ComplexMatrix submatrix(const ComplexMatrix& m, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols)
{
    ComplexMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

ComplexMatrix compound(const ComplexMatrix& m, std::size_t k)
{
    check_compound_args(m, k);
    return fill(m.rows(), k, true, [&](const IndexSet& r, const IndexSet& c) { return minor_det(m, r, c); });
}

ComplexMatrix additive_compound(const ComplexMatrix& c, std::size_t k)
{
    check_compound_args(c, k);
    return fill(c.rows(), k, true, [&](const IndexSet& r, const IndexSet& s) { return additive_entry(c, r, s); });
}

namespace reference {

ComplexMatrix compound(const ComplexMatrix& m, std::size_t k)
{
    check_compound_args(m, k);
    const auto sets = index_sets(m.rows(), k);
    ComplexMatrix out(sets.size(), sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) out(i, j) = determinant(submatrix(m, sets[i], sets[j]));
    return out;
}

ComplexMatrix additive_compound(const ComplexMatrix& c, std::size_t k)
{
    check_compound_args(c, k);
    return fill(c.rows(), k, false, [&](const IndexSet& r, const IndexSet& s) { return additive_entry(c, r, s); });
}

} // namespace reference

} // namespace logpot
