#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ldaroc/errors.hpp"
#include "ldaroc/symmat.hpp"
#include "support/oracles.hpp"

using namespace ldaroc;

namespace {

double max_reconstruction_error(const SymMatrix& m, const SpectralDecomposition& s) {
    const std::size_t n = m.dim();
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < n; ++k) v += s.q_at(i, k) * s.lambda[k] * s.q_at(j, k);
            err = std::max(err, std::fabs(v - m(i, j)));
        }
    }
    return err;
}

double max_orthogonality_error(const SpectralDecomposition& s) {
    double err = 0.0;
    for (std::size_t a = 0; a < s.dim; ++a) {
        for (std::size_t b = 0; b < s.dim; ++b) {
            double v = 0.0;
            for (std::size_t i = 0; i < s.dim; ++i) v += s.q_at(i, a) * s.q_at(i, b);
            err = std::max(err, std::fabs(v - (a == b ? 1.0 : 0.0)));
        }
    }
    return err;
}

double max_cholesky_error(const SymMatrix& m, const CholeskyFactor& l) {
    const std::size_t n = m.dim();
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = 0.0;
            for (std::size_t k = 0; k < n; ++k) v += l(i, k) * l(j, k);
            err = std::max(err, std::fabs(v - m(i, j)));
        }
    }
    return err;
}

SymMatrix to_sym(const oracle::RandomSpd& r) { return SymMatrix::from_row_major(r.n, r.sigma); }

}  // namespace

TEST(SymMatrix, SymmetrizesOnIngestion) {
    const SymMatrix m = SymMatrix::from_rows({{2.0, 1.0}, {1.5, 3.0}});
    EXPECT_EQ(m(0, 1), 1.25);
    EXPECT_EQ(m(1, 0), 1.25);
    EXPECT_EQ(m.ingested_asymmetry(), 0.5);
    EXPECT_TRUE(m.asymmetry_warning());
    EXPECT_FALSE(SymMatrix::from_rows({{1.0, 1e-9}, {0.0, 1.0}}).asymmetry_warning());
    EXPECT_THROW(SymMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionMismatch);
}

TEST(Spectral, Identity) {
    const auto s = spectral(SymMatrix::identity(3));
    for (double l : s.lambda) EXPECT_EQ(l, 1.0);
    EXPECT_LT(max_orthogonality_error(s), 1e-15);
}

TEST(Spectral, Diagonal) {
    const std::vector<double> d = {4.0, 9.0};
    const auto s = spectral(SymMatrix::diagonal(d));
    EXPECT_EQ(s.lambda[0], 9.0);
    EXPECT_EQ(s.lambda[1], 4.0);
    EXPECT_EQ(std::fabs(s.q_at(1, 0)), 1.0);
}

TEST(Spectral, TwoByTwo) {
    // Characteristic polynomial (2 - l)^2 - 1 = 0 gives l = 3, 1.
    const SymMatrix m = SymMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
    const auto s = spectral(m);
    EXPECT_NEAR(s.lambda[0], 3.0, 1e-14);
    EXPECT_NEAR(s.lambda[1], 1.0, 1e-14);
    EXPECT_LT(max_reconstruction_error(m, s), 1e-10);
    EXPECT_LT(max_orthogonality_error(s), 1e-10);
}

TEST(Spectral, TiesKeepInputOrder) {
    const std::vector<double> d = {2.0, 5.0, 2.0};
    const auto s = spectral(SymMatrix::diagonal(d));
    EXPECT_EQ(s.lambda[0], 5.0);
    EXPECT_EQ(s.q_at(0, 1), 1.0);  // first 2.0 came from row 0
    EXPECT_EQ(s.q_at(2, 2), 1.0);
}

TEST(Spectral, RejectsNonPositiveDefinite) {
    EXPECT_THROW(spectral(SymMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}})), NotPositiveDefinite);
    EXPECT_THROW(spectral(SymMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}})), NotPositiveDefinite);
}

TEST(Cholesky, Basics) {
    const auto id = cholesky(SymMatrix::identity(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(id(i, j), i == j ? 1.0 : 0.0);

    const std::vector<double> d = {4.0, 9.0};
    const auto l = cholesky(SymMatrix::diagonal(d));
    EXPECT_EQ(l(0, 0), 2.0);
    EXPECT_EQ(l(1, 1), 3.0);
    EXPECT_EQ(l(1, 0), 0.0);

    const SymMatrix m = SymMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
    EXPECT_LT(max_cholesky_error(m, cholesky(m)), 1e-12);
}

TEST(Cholesky, RejectsNonPositiveDefinite) {
    EXPECT_THROW(cholesky(SymMatrix::from_rows({{1.0, 2.0}, {2.0, 1.0}})), NotPositiveDefinite);
    // Pivot of 1e-13 relative to a unit diagonal falls under the tolerance.
    EXPECT_THROW(cholesky(SymMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0 + 1e-13}})),
                 NotPositiveDefinite);
}

TEST(SolveSpd, Basics) {
    const std::vector<double> v = {1.5, -2.0, 0.25};
    EXPECT_EQ(solve_spd(SymMatrix::identity(3), v), v);
    const std::vector<double> d = {2.0, 4.0};
    const std::vector<double> rhs = {2.0, 4.0};
    const auto u = solve_spd(SymMatrix::diagonal(d), rhs);
    EXPECT_DOUBLE_EQ(u[0], 1.0);
    EXPECT_DOUBLE_EQ(u[1], 1.0);
    EXPECT_THROW(solve_spd(SymMatrix::identity(2), v), DimensionMismatch);
}

TEST(SolveSpd, RandomResidual) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const SymMatrix m = to_sym(oracle::random_spd(5, 1e4, rng));
        const auto v = oracle::random_vector(5, rng, 10.0);
        const auto u = solve_spd(m, v);
        const auto mu = m.multiply(u);
        double resid = 0.0;
        double vmax = 0.0;
        for (std::size_t i = 0; i < 5; ++i) {
            resid = std::max(resid, std::fabs(mu[i] - v[i]));
            vmax = std::max(vmax, std::fabs(v[i]));
        }
        EXPECT_LT(resid / std::max(1.0, vmax), 1e-10);
    }
}

TEST(QuadForm, Basics) {
    const std::vector<double> v = {1.0, -2.0, 3.0};
    EXPECT_NEAR(quad_form(SymMatrix::identity(3), v), 14.0, 1e-14);
    const std::vector<double> four = {4.0};
    const std::vector<double> two = {2.0};
    EXPECT_EQ(quad_form(SymMatrix::diagonal(four), two), 1.0);
    EXPECT_EQ(quad_form(SymMatrix::identity(3), std::vector<double>(3, 0.0)), 0.0);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const SymMatrix m = to_sym(oracle::random_spd(4, 1e3, rng));
        const auto x = oracle::random_vector(4, rng);
        const double q = quad_form(m, x);
        EXPECT_GT(q, 0.0);
        EXPECT_NEAR(q, dot(x, solve_spd(m, x)), 1e-12 * std::max(1.0, q));
    }
}

TEST(SymmatProperties, RandomReconstruction) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dims(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = oracle::random_spd(dims(rng), 1e6, rng, true);
        const SymMatrix m = to_sym(r);
        const auto s = spectral(m);
        EXPECT_LT(max_reconstruction_error(m, s), 1e-9);
        EXPECT_LT(max_orthogonality_error(s), 1e-10);
        for (std::size_t k = 1; k < s.dim; ++k) EXPECT_GE(s.lambda[k - 1], s.lambda[k]);
        EXPECT_LT(max_cholesky_error(m, cholesky(m)), 1e-11);
    }
}

TEST(SymmatProperties, ScaledNormIsQuadraticForm) {
    // ||sqrt(Lambda) Q^T a||^2 = a^T Sigma a
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> dims(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = oracle::random_spd(dims(rng), 1e6, rng);
        const SymMatrix m = to_sym(r);
        const auto a = oracle::random_vector(r.n, rng);
        const double lhs = std::pow(spectral(m).scaled_norm(a), 2);
        const double rhs = dot(a, m.multiply(a));
        EXPECT_NEAR(lhs, rhs, 1e-10 * rhs);
    }
}
