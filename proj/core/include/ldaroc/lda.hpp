#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ldaroc/mvn.hpp"
#include "ldaroc/symmat.hpp"

namespace ldaroc {

// m x n feature matrix (row-major) with one 0/1 label per row.
struct LabeledDataset {
    std::size_t cols = 0;
    std::vector<double> features;
    std::vector<int> labels;

    std::size_t rows() const noexcept { return labels.size(); }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(features).subspan(i * cols, cols);
    }
    void push_back(std::span<const double> x, int label);
};

// Binary LDA under a shared covariance. The discriminant is
// f(x) = alpha^T x + beta = log(phi_1(x) / phi_0(x)) with
//   alpha = Sigma^{-1} (mu_1 - mu_0)
//   beta  = (mu_0^T Sigma^{-1} mu_0 - mu_1^T Sigma^{-1} mu_1) / 2.
// scale = ||sqrt(Lambda) Q^T alpha|| is the standard deviation of f(X) under
// either class, and delta = alpha^T (mu_1 - mu_0) / scale is the separation
// of the two score distributions in units of that deviation. Both equal the
// Mahalanobis distance between the class means.
class LdaModel {
public:
    static LdaModel from_params(Vector mu0, Vector mu1, const SymMatrix& sigma,
                                double p0 = 0.5);

    std::size_t dim() const noexcept { return alpha_.size(); }
    const MvnDistribution& class0() const noexcept { return class0_; }
    const MvnDistribution& class1() const noexcept { return class1_; }
    const MvnDistribution& class_distribution(int label) const {
        return label == 0 ? class0_ : class1_;
    }
    const Vector& mu0() const noexcept { return class0_.mean(); }
    const Vector& mu1() const noexcept { return class1_.mean(); }
    const SymMatrix& sigma() const noexcept { return class0_.cov(); }

    double prior0() const noexcept { return p0_; }
    double prior1() const noexcept { return p1_; }
    double prior(int label) const noexcept { return label == 0 ? p0_ : p1_; }

    const Vector& alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double scale() const noexcept { return scale_; }
    double delta() const noexcept { return delta_; }

    // Coincident class means: alpha = 0 and every threshold gives a constant
    // classifier.
    bool degenerate() const noexcept { return scale_ == 0.0; }

    // alpha^T mu_label + beta, the mean score of a class.
    double class_offset(int label) const;

    // Same means and covariance, different prior.
    LdaModel with_prior(double p0) const;

private:
    LdaModel(MvnDistribution c0, MvnDistribution c1, double p0);

    MvnDistribution class0_;
    MvnDistribution class1_;
    double p0_;
    double p1_;
    Vector alpha_;
    double beta_ = 0.0;
    double scale_ = 0.0;
    double delta_ = 0.0;
};

inline LdaModel model_from_params(Vector mu0, Vector mu1, const SymMatrix& sigma,
                                  double p0 = 0.5) {
    return LdaModel::from_params(std::move(mu0), std::move(mu1), sigma, p0);
}

// Class means, pooled covariance with denominator m - 2, and class-0
// frequency as the prior.
LdaModel fit(const LabeledDataset& data);

// alpha^T x + beta
double score(const LdaModel& model, std::span<const double> x);

// log phi_1(x) - log phi_0(x), evaluated from the class densities.
double log_density_ratio(const LdaModel& model, std::span<const double> x);

// Finite grid over the threshold line: count equally spaced values on [lo, hi].
class ThresholdSpace {
public:
    ThresholdSpace(double lo, double hi, std::size_t count);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    std::size_t count() const noexcept { return count_; }
    double step() const noexcept { return (hi_ - lo_) / static_cast<double>(count_ - 1); }
    double at(std::size_t k) const;
    std::vector<double> values() const;

private:
    double lo_;
    double hi_;
    std::size_t count_;
};

}  // namespace ldaroc
