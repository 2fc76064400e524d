#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ldaroc {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;
inline constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

// Standard normal CDF. Absolute error below 1e-14 everywhere; throws
// DomainError for non-finite input.
double std_normal_cdf(double x);

// Standard normal density (2 pi)^{-1/2} exp(-x^2 / 2).
double std_normal_pdf(double x);

// Inverse of std_normal_cdf on the open interval (0, 1). Rational initial
// guess followed by one Halley step, so |cdf(quantile(p)) - p| stays near
// machine precision.
double std_normal_quantile(double p);

// Complementary error function (Cody's rational Chebyshev approximations).
double erfc_cody(double x);

// Nodes and weights for integrals of the form  int f(v) phi(v) dv  over the
// real line. The standard normal density is folded into the weights, and
// the line is truncated at +-truncation_radius.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double truncation_radius = 0.0;

    std::size_t size() const noexcept { return nodes.size(); }
};

// Gauss-Legendre rule on [-radius, radius] with the standard normal density
// folded in. Node count must be >= 1 and radius > 0.
QuadratureRule gauss_legendre_normal_rule(std::size_t node_count, double radius);

// 201 nodes on [-8, 8]; the normal mass outside is below 1.3e-15.
const QuadratureRule& default_quadrature_rule();

// Approximates  int_R f(v) phi(v) dv  with the given rule.
double integrate_gauss_weighted(const std::function<double(double)>& f,
                                const QuadratureRule& rule);

}  // namespace ldaroc
