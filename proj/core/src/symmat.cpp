#include "ldaroc/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ldaroc/errors.hpp"

namespace ldaroc {
namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw DimensionMismatch(std::string(what) + ": expected dimension " +
                                std::to_string(expected) + ", got " + std::to_string(got));
    }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    require_dim(a.size(), b.size(), "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

SymMatrix SymMatrix::identity(std::size_t n) {
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
    return SymMatrix(n, std::move(a), 0.0);
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
    const std::size_t n = diag.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diag[i];
    return SymMatrix(n, std::move(a), 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        require_dim(n, row.size(), "SymMatrix::from_rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_row_major(n, flat);
}

SymMatrix SymMatrix::from_row_major(std::size_t n, std::span<const double> entries) {
    require_dim(n * n, entries.size(), "SymMatrix::from_row_major");
    if (n == 0) throw DimensionMismatch("SymMatrix: dimension must be positive");
    std::vector<double> a(entries.begin(), entries.end());
    double asymmetry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double upper = a[i * n + j];
            const double lower = a[j * n + i];
            asymmetry = std::max(asymmetry, std::fabs(upper - lower));
            const double mean = 0.5 * (upper + lower);
            a[i * n + j] = mean;
            a[j * n + i] = mean;
        }
    }
    return SymMatrix(n, std::move(a), asymmetry);
}

std::vector<std::vector<double>> SymMatrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

double SymMatrix::max_diagonal() const {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) m = std::max(m, a_[i * n_ + i]);
    return m;
}

Vector SymMatrix::multiply(std::span<const double> v) const {
    require_dim(n_, v.size(), "SymMatrix::multiply");
    Vector out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * v[j];
        out[i] = s;
    }
    return out;
}

double SpectralDecomposition::scaled_norm(std::span<const double> v) const {
    require_dim(dim, v.size(), "SpectralDecomposition::scaled_norm");
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        double proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += q_at(i, k) * v[i];
        s += lambda[k] * proj * proj;
    }
    return std::sqrt(s);
}

SpectralDecomposition spectral(const SymMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<double> a(m.row_major().begin(), m.row_major().end());
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    auto off_diagonal = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
        return s;
    };
    double frob = 0.0;
    for (double x : a) frob += x * x;

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal() <= 1e-32 * frob) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const double apr = a[p * n + r];
                if (apr == 0.0) continue;
                const double app = a[p * n + p];
                const double arr = a[r * n + r];
                // Rotation angle zeroing a[p][r], in the stable small-angle form.
                const double theta = (arr - app) / (2.0 * apr);
                const double t = std::copysign(1.0, theta) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akr = a[k * n + r];
                    a[k * n + p] = c * akp - s * akr;
                    a[k * n + r] = s * akp + c * akr;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double ark = a[r * n + k];
                    a[p * n + k] = c * apk - s * ark;
                    a[r * n + k] = s * apk + c * ark;
                }
                a[p * n + r] = 0.0;
                a[r * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkr = v[k * n + r];
                    v[k * n + p] = c * vkp - s * vkr;
                    v[k * n + r] = s * vkp + c * vkr;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * n + i] > a[j * n + j];
    });

    SpectralDecomposition out;
    out.dim = n;
    out.lambda.resize(n);
    out.q.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.lambda[k] = a[src * n + src];
        for (std::size_t i = 0; i < n; ++i) out.q[i * n + k] = v[i * n + src];
    }

    const double tol = m.pd_tolerance();
    if (n > 0 && !(out.lambda.back() > tol)) {
        throw NotPositiveDefinite("spectral: smallest eigenvalue " +
                                  std::to_string(out.lambda.back()) +
                                  " is not above the positive-definiteness tolerance");
    }
    return out;
}

Vector CholeskyFactor::forward_substitute(std::span<const double> v) const {
    require_dim(n_, v.size(), "CholeskyFactor::forward_substitute");
    Vector y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = v[i];
        for (std::size_t k = 0; k < i; ++k) s -= l_[i * n_ + k] * y[k];
        y[i] = s / l_[i * n_ + i];
    }
    return y;
}

Vector CholeskyFactor::back_substitute(std::span<const double> y) const {
    require_dim(n_, y.size(), "CholeskyFactor::back_substitute");
    Vector x(n_);
    for (std::size_t ii = n_; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n_; ++k) s -= l_[k * n_ + ii] * x[k];
        x[ii] = s / l_[ii * n_ + ii];
    }
    return x;
}

Vector CholeskyFactor::solve(std::span<const double> v) const {
    return back_substitute(forward_substitute(v));
}

void CholeskyFactor::lower_multiply(std::span<const double> z, std::span<double> out) const {
    require_dim(n_, z.size(), "CholeskyFactor::lower_multiply");
    require_dim(n_, out.size(), "CholeskyFactor::lower_multiply");
    for (std::size_t i = n_; i-- > 0;) {
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k) s += l_[i * n_ + k] * z[k];
        out[i] = s;
    }
}

double CholeskyFactor::log_determinant() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += std::log(l_[i * n_ + i]);
    return 2.0 * s;
}

CholeskyFactor cholesky(const SymMatrix& m) {
    const std::size_t n = m.dim();
    const double tol = m.pd_tolerance();
    std::vector<double> l(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = m(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= l[j * n + k] * l[j * n + k];
        if (!(pivot > tol)) {
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(pivot) + " at row " +
                                      std::to_string(j) +
                                      " is not above the positive-definiteness tolerance");
        }
        const double ljj = std::sqrt(pivot);
        l[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
            l[i * n + j] = s / ljj;
        }
    }
    return CholeskyFactor(n, std::move(l));
}

Vector solve_spd(const SymMatrix& m, std::span<const double> v) {
    require_dim(m.dim(), v.size(), "solve_spd");
    return cholesky(m).solve(v);
}

double quad_form(const SymMatrix& m, std::span<const double> v) {
    require_dim(m.dim(), v.size(), "quad_form");
    const Vector y = cholesky(m).forward_substitute(v);
    return dot(y, y);
}

}  // namespace ldaroc
