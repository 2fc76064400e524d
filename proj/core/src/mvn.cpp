#include "ldaroc/mvn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ldaroc/errors.hpp"
#include "ldaroc/gauss.hpp"

namespace ldaroc {
namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw DimensionMismatch(std::string(what) + ": expected dimension " +
                                std::to_string(expected) + ", got " + std::to_string(got));
    }
}

}  // namespace

MvnDistribution::MvnDistribution(Vector mean, SymMatrix cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
    require_dim(cov_.dim(), mean_.size(), "MvnDistribution");
    chol_ = cholesky(cov_);
}

double MvnDistribution::log_density(std::span<const double> x) const {
    require_dim(dim(), x.size(), "MvnDistribution::log_density");
    Vector centered(x.begin(), x.end());
    for (std::size_t i = 0; i < centered.size(); ++i) centered[i] -= mean_[i];
    const Vector y = chol_.forward_substitute(centered);
    const double n = static_cast<double>(dim());
    return -0.5 * (n * std::log(2.0 * std::numbers::pi) + chol_.log_determinant() + dot(y, y));
}

double MvnDistribution::density(std::span<const double> x) const {
    return std::exp(log_density(x));
}

void MvnDistribution::draw(StreamRng& rng, std::span<double> out) const {
    require_dim(dim(), out.size(), "MvnDistribution::draw");
    Vector z(dim());
    for (double& zi : z) zi = rng.next_normal();
    chol_.lower_multiply(z, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += mean_[i];
}

HalfSpace::HalfSpace(Vector normal, double offset) : normal_(std::move(normal)), offset_(offset) {
    bool nonzero = false;
    for (double a : normal_) {
        if (!std::isfinite(a)) throw DomainError("HalfSpace: normal must be finite");
        nonzero = nonzero || a != 0.0;
    }
    if (!nonzero) throw DegenerateHalfSpace("HalfSpace: normal vector is zero");
    if (!std::isfinite(offset_)) throw DomainError("HalfSpace: offset must be finite");
}

double HalfSpace::evaluate(std::span<const double> x) const {
    return dot(normal_, x) + offset_;
}

HalfSpace HalfSpace::complement() const {
    Vector flipped = normal_;
    for (double& a : flipped) a = -a;
    return HalfSpace(std::move(flipped), -offset_);
}

double density(const MvnDistribution& d, std::span<const double> x) { return d.density(x); }

double halfspace_mass(const MvnDistribution& d, const HalfSpace& h, ScaleRoute route) {
    require_dim(d.dim(), h.normal().size(), "halfspace_mass");
    double scale = 0.0;
    switch (route) {
        case ScaleRoute::quadratic_form:
            scale = std::sqrt(dot(h.normal(), d.cov().multiply(h.normal())));
            break;
        case ScaleRoute::spectral:
            scale = spectral(d.cov()).scaled_norm(h.normal());
            break;
    }
    return std_normal_cdf(-(dot(h.normal(), d.mean()) + h.offset()) / scale);
}

std::vector<Vector> sample(const MvnDistribution& d, std::size_t count, std::uint64_t seed) {
    if (count == 0) throw DomainError("sample: count must be at least 1");
    std::vector<Vector> out(count, Vector(d.dim()));
    for (std::size_t i = 0; i < count; ++i) {
        StreamRng rng(seed, i);
        d.draw(rng, out[i]);
    }
    return out;
}

}  // namespace ldaroc
