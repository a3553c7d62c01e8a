#include "equik/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using equik::Rational;
using namespace equik::linalg;

namespace {

// Leibniz expansion, independent of elimination.
Rational leibniz(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += perm[a] > perm[b];
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r)
            term *= m(r, perm[r]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = d(rng);
    return m;
}

} // namespace

TEST(Matrix, ProductAndTranspose) {
    Matrix a{{1, 2}, {3, 4}};
    Matrix b{{0, 1}, {1, 0}};
    EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
    EXPECT_EQ(a.transpose(), (Matrix{{1, 3}, {2, 4}}));
    EXPECT_EQ((a * Vector{1, 1}), (Vector{3, 7}));
    EXPECT_THROW(a * Matrix(3, 3), equik::dimension_mismatch);
}

TEST(Kernel, Examples) {
    Subspace k = kernel(Matrix{{1, 1}, {1, 1}});
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_EQ(k.basis().front(), (Vector{-1, 1}));
    EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
    EXPECT_EQ(kernel(Matrix(3, 3)).dim(), 3u);
    EXPECT_THROW(kernel(Matrix(2, 3)), equik::dimension_mismatch);
}

TEST(Kernel, VectorsAreAnnihilatedAndRankNullity) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 5;
        Matrix m = random_matrix(rng, n, -1, 1);
        Subspace k = kernel(m);
        for (const Vector& v : k.basis())
            EXPECT_EQ(m * v, Vector(n, Rational(0)));
        EXPECT_EQ(k.dim() + rank(m), n);
    }
}

TEST(Det, Examples) {
    EXPECT_EQ(det(Matrix(0, 0)), 1);
    EXPECT_EQ(det(Matrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(det(Matrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}), 24);
    EXPECT_EQ(det(Matrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(det(Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
}

TEST(Det, MatchesLeibniz) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        Matrix m = random_matrix(rng, 1 + trial % 5, -3, 3);
        EXPECT_EQ(det(m), leibniz(m));
    }
}

TEST(Inverse, RoundTrip) {
    std::mt19937 rng(3);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, 4, -2, 2);
        if (det(m) == 0) {
            EXPECT_THROW(inverse(m), equik::invalid_basis);
            continue;
        }
        EXPECT_EQ(m * inverse(m), Matrix::identity(4));
        ++tested;
    }
    EXPECT_GT(tested, 10);
}

TEST(Restrict, Examples) {
    Subspace diag(2, {{1, 1}});
    Matrix swap{{0, 1}, {1, 0}};
    EXPECT_EQ(restrict(swap, diag), (Matrix{{1}}));
    Subspace anti(2, {{1, -1}});
    EXPECT_EQ(restrict(swap, anti), (Matrix{{-1}}));
    EXPECT_THROW(restrict(swap, Subspace(2, {{1, 0}})), equik::not_invariant);
    EXPECT_EQ(restrict(swap, Subspace(2)).rows(), 0u);
    EXPECT_EQ(det(restrict(swap, Subspace(2))), 1);
}

TEST(Restrict, DeterminantIndependentOfBasis) {
    // 3-cycle on R^3 fixes the diagonal line and rotates the orthogonal plane.
    Matrix cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    Subspace plane_a(3, {{1, -1, 0}, {0, 1, -1}});
    Subspace plane_b(3, {{2, -1, -1}, {1, 1, -2}});
    EXPECT_EQ(plane_a, plane_b);
    EXPECT_EQ(det(restrict(cyc, plane_a)), 1);
    EXPECT_EQ(det(restrict(cyc, plane_b)), 1);
    Matrix flip{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    EXPECT_EQ(det(restrict(flip, plane_a)), -1);
    EXPECT_EQ(det(restrict(flip, plane_b)), -1);
}

TEST(Subspace, RejectsDependentBasis) {
    EXPECT_THROW(Subspace(2, {{1, 2}, {2, 4}}), equik::invalid_basis);
    EXPECT_THROW(Subspace(2, {{1, 2, 3}}), equik::dimension_mismatch);
    EXPECT_TRUE(Subspace::full(3).contains({5, 6, 7}));
    EXPECT_FALSE(Subspace(3, {{1, 0, 0}}).contains({0, 1, 0}));
}
