#include <doctest.h>

#include <random>

#include "logpot/compound.hpp"
#include "logpot/linalg.hpp"
#include "support/random_configs.hpp"

using namespace logpot;
using logpot::testing::random_matrix;

TEST_CASE("index sets enumerate lexicographically and rank back")
{
    const auto s = index_sets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == IndexSet{0, 1});
    CHECK(s[1] == IndexSet{0, 2});
    CHECK(s[2] == IndexSet{0, 3});
    CHECK(s[3] == IndexSet{1, 2});
    CHECK(s[5] == IndexSet{2, 3});
    const auto big = index_sets(9, 4);
    for (std::size_t i = 0; i < big.size(); ++i) CHECK(lex_rank(big[i], 9) == i);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 4) == 0);
}

TEST_CASE("compound of identity and diagonal matrices")
{
    CHECK((compound(ComplexMatrix::identity(5), 3) - ComplexMatrix::identity(10)).max_abs() == 0.0);

    const cplx z[] = {1.0, cplx(0.0, 2.0), 3.0, cplx(-1.0, 1.0)};
    const ComplexMatrix d = ComplexMatrix::diagonal(std::span<const cplx>(z));
    const ComplexMatrix c = compound(d, 2);
    const auto sets = index_sets(4, 2);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) {
            const cplx expected = (i == j) ? z[sets[i][0]] * z[sets[i][1]] : cplx{};
            CHECK(std::abs(c(i, j) - expected) < 1e-15);
        }
}

TEST_CASE("compound is multiplicative (Binet-Cauchy)")
{
    std::mt19937_64 rng(21);
    const ComplexMatrix a = random_matrix(rng, 5, 5);
    const ComplexMatrix b = random_matrix(rng, 5, 5);
    for (std::size_t k = 1; k <= 5; ++k)
        CHECK((compound(a * b, k) - compound(a, k) * compound(b, k)).max_abs() < 1e-10);
}

TEST_CASE("compound of a unitary matrix is unitary")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix u = schur_decompose(random_matrix(rng, 7, 7)).q;
        for (std::size_t k = 1; k <= 7; ++k) CHECK(unitarity_residual(compound(u, k)) < 1e-10);
    }
}

TEST_CASE("compound argument validation")
{
    CHECK_THROWS_AS(compound(ComplexMatrix::identity(3), 0), InputError);
    CHECK_THROWS_AS(compound(ComplexMatrix::identity(3), 4), InputError);
    CHECK_THROWS_AS(compound(ComplexMatrix(2, 3), 1), InputError);
    // C(20, 10) = 184756 exceeds the cap
    CHECK_THROWS_AS(compound(ComplexMatrix::identity(20), 10), InputError);
}

TEST_CASE("parallel compound kernels equal the serial reference bit for bit")
{
    std::mt19937_64 rng(23);
    const ComplexMatrix a = random_matrix(rng, 8, 8);
    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK(compound(a, k) == reference::compound(a, k));
        CHECK(additive_compound(a, k) == reference::additive_compound(a, k));
    }
}

TEST_CASE("additive compound of diagonal and zero matrices")
{
    const cplx l[] = {1.0, 2.0, cplx(0.0, 1.0), -3.0};
    const ComplexMatrix d = ComplexMatrix::diagonal(std::span<const cplx>(l));
    const auto sets = index_sets(4, 3);
    const ComplexMatrix ac = additive_compound(d, 3);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) {
            cplx expected{};
            if (i == j)
                for (auto s : sets[i]) expected += l[s];
            CHECK(std::abs(ac(i, j) - expected) < 1e-15);
        }
    CHECK(additive_compound(ComplexMatrix(5, 5), 2).max_abs() == 0.0);
}

TEST_CASE("additive compound equals the derivative of the compound of I + tC")
{
    std::mt19937_64 rng(24);
    const ComplexMatrix c = random_matrix(rng, 5, 5);
    const ComplexMatrix id = ComplexMatrix::identity(5);
    const double h = 1e-5;
    for (std::size_t k = 1; k <= 5; ++k) {
        // central difference, O(h^2) truncation
        const ComplexMatrix fd = cplx(1.0 / (2.0 * h)) * (compound(id + cplx(h) * c, k) - compound(id - cplx(h) * c, k));
        CHECK((fd - additive_compound(c, k)).max_abs() < 1e-7);
    }
}

TEST_CASE("additive compound spectrum is the set of pairwise eigenvalue sums")
{
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix c = random_matrix(rng, 5, 5);
        const auto eig = schur_decompose(c).eigenvalues();
        ComplexVector sums;
        for (const auto& s : index_sets(5, 2)) sums.push_back(eig[s[0]] + eig[s[1]]);
        const auto spec = schur_decompose(additive_compound(c, 2)).eigenvalues();
        CHECK(match_multisets(spec, sums) < 1e-8);
    }
}

TEST_CASE("trace of the additive compound")
{
    std::mt19937_64 rng(26);
    for (std::size_t n = 2; n <= 7; ++n) {
        const ComplexMatrix c = random_matrix(rng, n, n);
        cplx tr{};
        for (std::size_t i = 0; i < n; ++i) tr += c(i, i);
        for (std::size_t k = 1; k <= n; ++k) {
            const ComplexMatrix ac = additive_compound(c, k);
            cplx t{};
            for (std::size_t i = 0; i < ac.rows(); ++i) t += ac(i, i);
            CHECK(std::abs(t - static_cast<double>(binomial(n - 1, k - 1)) * tr) < 1e-10);
        }
    }
}
