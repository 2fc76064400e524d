#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldaroc/rng.hpp"
#include "ldaroc/symmat.hpp"

namespace ldaroc {

// N(mean, cov) with a positive-definite covariance. The Cholesky factor is
// computed once on construction, which doubles as the PD check.
class MvnDistribution {
public:
    MvnDistribution(Vector mean, SymMatrix cov);

    std::size_t dim() const noexcept { return mean_.size(); }
    const Vector& mean() const noexcept { return mean_; }
    const SymMatrix& cov() const noexcept { return cov_; }
    const CholeskyFactor& cholesky_factor() const noexcept { return chol_; }

    double log_density(std::span<const double> x) const;
    double density(std::span<const double> x) const;

    // mean + L z for a fresh standard-normal z taken from rng.
    void draw(StreamRng& rng, std::span<double> out) const;

private:
    Vector mean_;
    SymMatrix cov_;
    CholeskyFactor chol_;
};

// {x : normal^T x + offset < 0}. The boundary hyperplane has probability
// zero; point-membership tests put it inside (the negative side).
class HalfSpace {
public:
    HalfSpace(Vector normal, double offset);

    const Vector& normal() const noexcept { return normal_; }
    double offset() const noexcept { return offset_; }

    // normal^T x + offset
    double evaluate(std::span<const double> x) const;
    bool contains(std::span<const double> x) const { return evaluate(x) <= 0.0; }

    HalfSpace complement() const;

private:
    Vector normal_;
    double offset_ = 0.0;
};

// How ||sqrt(Lambda) Q^T alpha|| is obtained. Both routes are equal because
// Sigma = Q Lambda Q^T; the quadratic form sqrt(alpha^T Sigma alpha) needs no
// eigendecomposition.
enum class ScaleRoute { quadratic_form, spectral };

double density(const MvnDistribution& d, std::span<const double> x);

// Probability that X ~ d falls in h: Phi(-(alpha^T mu + beta) / s) with
// s = ||sqrt(Lambda) Q^T alpha||.
double halfspace_mass(const MvnDistribution& d, const HalfSpace& h,
                      ScaleRoute route = ScaleRoute::quadratic_form);

// `count` draws; draw i uses the stream (seed, i), so every prefix of a
// longer run equals the shorter run with the same seed.
std::vector<Vector> sample(const MvnDistribution& d, std::size_t count, std::uint64_t seed);

}  // namespace ldaroc
