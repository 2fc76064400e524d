#include "ldaroc/gauss.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ldaroc/errors.hpp"

namespace ldaroc {
namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

// exp(-y*y) with y*y split into an exactly representable leading part and
// a small remainder, so the exponential keeps full relative accuracy.
double exp_neg_square(double y) {
    const double lead = std::trunc(y * 16.0) / 16.0;
    const double rest = (y - lead) * (y + lead);
    return std::exp(-lead * lead) * std::exp(-rest);
}

}  // namespace

double erfc_cody(double x) {
    static constexpr std::array<double, 5> a = {
        3.1611237438705656, 113.864154151050156, 377.485237685302021,
        3209.37758913846947, 0.185777706184603153};
    static constexpr std::array<double, 4> b = {
        23.6012909523441209, 244.024637934444173, 1282.61652607737228,
        2844.23683343917062};
    static constexpr std::array<double, 9> c = {
        0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
        298.635138197400131, 881.95222124176909, 1712.04761263407058,
        2051.07837782607147, 1230.33935479799725, 2.15311535474403846e-8};
    static constexpr std::array<double, 8> d = {
        15.7449261107098347, 117.693950891312499, 537.181101862009858,
        1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
        3439.36767414372164, 1230.33935480374942};
    static constexpr std::array<double, 6> p = {
        0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
        0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
    static constexpr std::array<double, 5> q = {
        2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
        0.0605183413124413191, 0.00233520497626869185};
    constexpr double inv_sqrt_pi = 0.56418958354775628695;
    constexpr double small = 1.11e-16;
    constexpr double big = 26.543;

    if (std::isnan(x)) return x;
    const double y = std::fabs(x);
    double result = 0.0;

    if (y <= 0.46875) {
        // erf by a rational approximation in y^2; erfc = 1 - erf.
        const double ysq = y > small ? y * y : 0.0;
        double num = a[4] * ysq;
        double den = ysq;
        for (int i = 0; i < 3; ++i) {
            num = (num + a[i]) * ysq;
            den = (den + b[i]) * ysq;
        }
        return 1.0 - x * (num + a[3]) / (den + b[3]);
    }

    if (y <= 4.0) {
        double num = c[8] * y;
        double den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + c[i]) * y;
            den = (den + d[i]) * y;
        }
        result = exp_neg_square(y) * (num + c[7]) / (den + d[7]);
    } else if (y < big) {
        const double ysq = 1.0 / (y * y);
        double num = p[5] * ysq;
        double den = ysq;
        for (int i = 0; i < 4; ++i) {
            num = (num + p[i]) * ysq;
            den = (den + q[i]) * ysq;
        }
        result = ysq * (num + p[4]) / (den + q[4]);
        result = exp_neg_square(y) * (inv_sqrt_pi - result) / y;
    }

    return x < 0.0 ? 2.0 - result : result;
}

double std_normal_cdf(double x) {
    require_finite(x, "std_normal_cdf");
    return 0.5 * erfc_cody(-x * std::numbers::sqrt2 * 0.5);
}

double std_normal_pdf(double x) {
    require_finite(x, "std_normal_pdf");
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("std_normal_quantile: probability must lie in (0, 1)");
    }

    // Acklam's rational approximation, relative error about 1.15e-9.
    static constexpr std::array<double, 6> a = {
        -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
        1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr std::array<double, 5> b = {
        -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
        6.680131188771972e+01, -1.328068155288572e+01};
    static constexpr std::array<double, 6> c = {
        -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
        -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr std::array<double, 4> d = {
        7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
        3.754408661907416e+00};
    constexpr double low = 0.02425;

    // Work in the lower half so the tail probability is never formed as 1 - p.
    const bool upper = p > 0.5;
    const double tail = upper ? 1.0 - p : p;

    double x;
    if (tail < low) {
        const double r = std::sqrt(-2.0 * std::log(tail));
        x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    } else {
        const double r = tail - 0.5;
        const double s = r * r;
        x = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r /
            (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
    }

    // Halley refinement on the lower-tail problem Phi(x) = tail.
    const double e = std_normal_cdf(x) - tail;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);

    return upper ? -x : x;
}

QuadratureRule gauss_legendre_normal_rule(std::size_t node_count, double radius) {
    if (node_count == 0) {
        throw DomainError("gauss_legendre_normal_rule: need at least one node");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("gauss_legendre_normal_rule: radius must be positive");
    }

    const std::size_t n = node_count;
    std::vector<double> t(n);
    std::vector<double> w(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Newton iteration for the i-th root of P_n, counted from the right.
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = z;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * z * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if (std::fabs(step) < 1e-16) break;
        }
        const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
        t[n - 1 - i] = z;
        t[i] = -z;
        w[n - 1 - i] = weight;
        w[i] = weight;
    }

    if (n % 2 == 1) t[n / 2] = 0.0;

    QuadratureRule rule;
    rule.truncation_radius = radius;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = radius * t[i];
        rule.nodes[i] = v;
        rule.weights[i] = radius * w[i] * std_normal_pdf(v);
    }
    return rule;
}

const QuadratureRule& default_quadrature_rule() {
    static const QuadratureRule rule = gauss_legendre_normal_rule(201, 8.0);
    return rule;
}

double integrate_gauss_weighted(const std::function<double(double)>& f,
                                const QuadratureRule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

}  // namespace ldaroc
