#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ldaroc {

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);

// Dense symmetric matrix, stored row-major. Every constructor symmetrizes its
// input by averaging (M + M^T) / 2 and remembers how asymmetric the input was.
class SymMatrix {
public:
    // Inputs whose largest |m_ij - m_ji| exceeds this are worth a warning.
    static constexpr double kAsymmetryWarning = 1e-8;
    // Relative threshold, scaled by the largest diagonal entry, at or below
    // which a pivot or eigenvalue counts as not positive definite.
    static constexpr double kPdRelativeTolerance = 1e-12;

    SymMatrix() = default;

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(std::span<const double> diag);
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix from_row_major(std::size_t n, std::span<const double> entries);

    std::size_t dim() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::span<const double> row_major() const noexcept { return a_; }
    std::vector<std::vector<double>> rows() const;

    double max_diagonal() const;
    double pd_tolerance() const { return kPdRelativeTolerance * max_diagonal(); }

    double ingested_asymmetry() const noexcept { return asymmetry_; }
    bool asymmetry_warning() const noexcept { return asymmetry_ > kAsymmetryWarning; }

    Vector multiply(std::span<const double> v) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    SymMatrix(std::size_t n, std::vector<double> a, double asymmetry)
        : n_(n), a_(std::move(a)), asymmetry_(asymmetry) {}

    std::size_t n_ = 0;
    std::vector<double> a_;
    double asymmetry_ = 0.0;
};

// Sigma = Q diag(lambda) Q^T with orthonormal eigenvector columns in Q.
// Eigenvalues are sorted non-increasing.
struct SpectralDecomposition {
    std::size_t dim = 0;
    std::vector<double> q;  // row-major, column k is the k-th eigenvector
    Vector lambda;

    double q_at(std::size_t row, std::size_t col) const { return q[row * dim + col]; }
    // ||sqrt(Lambda) Q^T v||
    double scaled_norm(std::span<const double> v) const;
};

// Cyclic Jacobi eigendecomposition. Throws NotPositiveDefinite if any
// eigenvalue is at or below the matrix's pd_tolerance().
SpectralDecomposition spectral(const SymMatrix& m);

// Lower-triangular L with L L^T = M.
class CholeskyFactor {
public:
    CholeskyFactor() = default;
    CholeskyFactor(std::size_t n, std::vector<double> lower) : n_(n), l_(std::move(lower)) {}

    std::size_t dim() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return l_[i * n_ + j]; }

    // Solves L y = v.
    Vector forward_substitute(std::span<const double> v) const;
    // Solves L^T x = y.
    Vector back_substitute(std::span<const double> y) const;
    // Solves L L^T x = v.
    Vector solve(std::span<const double> v) const;
    // Writes L z into out.
    void lower_multiply(std::span<const double> z, std::span<double> out) const;
    // log det(L L^T)
    double log_determinant() const;

private:
    std::size_t n_ = 0;
    std::vector<double> l_;
};

// Throws NotPositiveDefinite if a pivot is at or below m.pd_tolerance().
CholeskyFactor cholesky(const SymMatrix& m);

// u with M u = v.
Vector solve_spd(const SymMatrix& m, std::span<const double> v);

// v^T M^{-1} v.
double quad_form(const SymMatrix& m, std::span<const double> v);

}  // namespace ldaroc
