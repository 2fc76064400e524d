#include "ldaroc/lda.hpp"

#include <algorithm>
#include <cmath>
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

void LabeledDataset::push_back(std::span<const double> x, int label) {
    if (labels.empty() && features.empty() && cols == 0) cols = x.size();
    require_dim(cols, x.size(), "LabeledDataset::push_back");
    features.insert(features.end(), x.begin(), x.end());
    labels.push_back(label);
}

LdaModel::LdaModel(MvnDistribution c0, MvnDistribution c1, double p0)
    : class0_(std::move(c0)), class1_(std::move(c1)), p0_(p0), p1_(1.0 - p0) {
    const std::size_t n = class0_.dim();
    Vector diff(n);
    Vector sum(n);
    for (std::size_t i = 0; i < n; ++i) {
        diff[i] = mu1()[i] - mu0()[i];
        sum[i] = mu0()[i] + mu1()[i];
    }
    alpha_ = class0_.cholesky_factor().solve(diff);
    // mu0' S mu0 - mu1' S mu1 = -(mu1 - mu0)' S (mu0 + mu1) for symmetric S,
    // which avoids cancelling two large quadratic forms.
    beta_ = -0.5 * dot(alpha_, sum);
    scale_ = std::sqrt(std::max(0.0, dot(alpha_, sigma().multiply(alpha_))));
    delta_ = scale_ > 0.0 ? dot(alpha_, diff) / scale_ : 0.0;
}

LdaModel LdaModel::from_params(Vector mu0, Vector mu1, const SymMatrix& sigma, double p0) {
    require_dim(mu0.size(), mu1.size(), "model_from_params");
    require_dim(sigma.dim(), mu0.size(), "model_from_params");
    if (!(p0 > 0.0 && p0 < 1.0)) {
        throw DomainError("model_from_params: prior p0 must lie in (0, 1)");
    }
    for (double v : mu0)
        if (!std::isfinite(v)) throw DomainError("model_from_params: mu0 must be finite");
    for (double v : mu1)
        if (!std::isfinite(v)) throw DomainError("model_from_params: mu1 must be finite");
    MvnDistribution c0(std::move(mu0), sigma);
    MvnDistribution c1(std::move(mu1), sigma);
    return LdaModel(std::move(c0), std::move(c1), p0);
}

double LdaModel::class_offset(int label) const {
    return dot(alpha_, label == 0 ? mu0() : mu1()) + beta_;
}

LdaModel LdaModel::with_prior(double p0) const {
    return from_params(mu0(), mu1(), sigma(), p0);
}

LdaModel fit(const LabeledDataset& data) {
    const std::size_t m = data.rows();
    const std::size_t n = data.cols;
    if (n == 0) throw DataError("fit: dataset has no feature columns");
    require_dim(m * n, data.features.size(), "fit");
    for (double v : data.features) {
        if (!std::isfinite(v)) throw DataError("fit: features must be finite");
    }

    std::size_t counts[2] = {0, 0};
    Vector means[2] = {Vector(n, 0.0), Vector(n, 0.0)};
    for (std::size_t r = 0; r < m; ++r) {
        const int label = data.labels[r];
        if (label != 0 && label != 1) {
            throw DataError("fit: label at row " + std::to_string(r) + " is not 0 or 1");
        }
        ++counts[label];
        const auto x = data.row(r);
        for (std::size_t j = 0; j < n; ++j) means[label][j] += x[j];
    }
    for (int c = 0; c < 2; ++c) {
        if (counts[c] < 2) {
            throw DataError("fit: class " + std::to_string(c) + " has " +
                            std::to_string(counts[c]) + " rows, need at least 2");
        }
        for (double& v : means[c]) v /= static_cast<double>(counts[c]);
    }
    if (m < n + 2) {
        throw NotPositiveDefinite("fit: " + std::to_string(m) + " rows cannot give a positive "
                                  "definite pooled covariance in " + std::to_string(n) +
                                  " dimensions");
    }

    std::vector<double> scatter(n * n, 0.0);
    Vector centered(n);
    for (std::size_t r = 0; r < m; ++r) {
        const auto x = data.row(r);
        const Vector& mu = means[data.labels[r]];
        for (std::size_t j = 0; j < n; ++j) centered[j] = x[j] - mu[j];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) scatter[i * n + j] += centered[i] * centered[j];
    }
    const double denom = static_cast<double>(m - 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            scatter[i * n + j] /= denom;
            scatter[j * n + i] = scatter[i * n + j];
        }
    }

    const double p0 = static_cast<double>(counts[0]) / static_cast<double>(m);
    return LdaModel::from_params(std::move(means[0]), std::move(means[1]),
                                 SymMatrix::from_row_major(n, scatter), p0);
}

double score(const LdaModel& model, std::span<const double> x) {
    require_dim(model.dim(), x.size(), "score");
    return dot(model.alpha(), x) + model.beta();
}

double log_density_ratio(const LdaModel& model, std::span<const double> x) {
    require_dim(model.dim(), x.size(), "log_density_ratio");
    return model.class1().log_density(x) - model.class0().log_density(x);
}

ThresholdSpace::ThresholdSpace(double lo, double hi, std::size_t count)
    : lo_(lo), hi_(hi), count_(count) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw DomainError("ThresholdSpace: need finite lo < hi");
    }
    if (count < 2) throw DomainError("ThresholdSpace: need at least 2 points");
}

double ThresholdSpace::at(std::size_t k) const {
    if (k == count_ - 1) return hi_;
    return lo_ + static_cast<double>(k) * step();
}

std::vector<double> ThresholdSpace::values() const {
    std::vector<double> out(count_);
    for (std::size_t k = 0; k < count_; ++k) out[k] = at(k);
    return out;
}

}  // namespace ldaroc
