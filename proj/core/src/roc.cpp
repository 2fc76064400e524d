#include "ldaroc/roc.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ldaroc/errors.hpp"
#include "ldaroc/mvn.hpp"

namespace ldaroc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuantileRadius = 8.0;

void require_finite_theta(double theta, const char* what) {
    if (!std::isfinite(theta)) {
        throw DomainError(std::string(what) + ": theta must be finite");
    }
}

void require_open_unit(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(what) + ": rate must lie in (0, 1)");
    }
}

void require_separated(const LdaModel& model, const char* what) {
    if (model.degenerate()) {
        throw DegenerateModel(std::string(what) +
                              ": class means coincide, so the rates are undefined");
    }
}

// Rate of predicting positive for one class: Phi((c - theta) / scale).
double positive_rate(const LdaModel& model, int label, double theta) {
    return std_normal_cdf((model.class_offset(label) - theta) / model.scale());
}

}  // namespace

bool RocCurve::is_monotone() const {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].fpr < points[i - 1].fpr || points[i].tpr < points[i - 1].tpr) return false;
    }
    return true;
}

bool RocCurve::has_strict_interior_fpr() const {
    for (std::size_t i = 2; i + 1 < points.size(); ++i) {
        if (!(points[i].fpr > points[i - 1].fpr)) return false;
    }
    return true;
}

ConfusionDistribution confusion_at(const LdaModel& model, double theta) {
    require_finite_theta(theta, "confusion_at");
    ConfusionDistribution out;
    out.theta = theta;
    const double p0 = model.prior0();
    const double p1 = model.prior1();

    if (model.degenerate()) {
        const bool negative = model.beta() - theta <= 0.0;
        out.p_tn = negative ? p0 : 0.0;
        out.p_fp = negative ? 0.0 : p0;
        out.p_fn = negative ? p1 : 0.0;
        out.p_tp = negative ? 0.0 : p1;
        return out;
    }

    // H0(theta) = {alpha^T x + beta - theta < 0}, H1(theta) its complement.
    const HalfSpace negative(model.alpha(), model.beta() - theta);
    const HalfSpace positive = negative.complement();
    out.p_tn = p0 * halfspace_mass(model.class0(), negative);
    out.p_fp = p0 * halfspace_mass(model.class0(), positive);
    out.p_fn = p1 * halfspace_mass(model.class1(), negative);
    out.p_tp = p1 * halfspace_mass(model.class1(), positive);
    return out;
}

double fpr_at(const LdaModel& model, double theta) {
    require_finite_theta(theta, "fpr_at");
    require_separated(model, "fpr_at");
    return positive_rate(model, 0, theta);
}

double tpr_at(const LdaModel& model, double theta) {
    require_finite_theta(theta, "tpr_at");
    require_separated(model, "tpr_at");
    return positive_rate(model, 1, theta);
}

double roc_tpr_from_fpr(double delta, double fpr) {
    require_open_unit(fpr, "roc_tpr_from_fpr");
    // 1 - Phi(Phi^{-1}(1 - fpr) - delta) = Phi(delta + Phi^{-1}(fpr)); the
    // right side never forms 1 - fpr, which loses digits for small fpr.
    return std_normal_cdf(delta + std_normal_quantile(fpr));
}

double roc_tpr_from_fpr(const LdaModel& model, double fpr) {
    require_separated(model, "roc_tpr_from_fpr");
    return roc_tpr_from_fpr(model.delta(), fpr);
}

RocCurve sample_roc(const LdaModel& model, std::size_t count) {
    require_separated(model, "sample_roc");
    if (count < 2) throw DomainError("sample_roc: need at least 2 points");

    const double c0 = model.class_offset(0);
    const double s = model.scale();
    const double step = 2.0 * kQuantileRadius / static_cast<double>(count - 1);

    RocCurve curve;
    curve.points.reserve(count + 2);
    curve.points.push_back({kInf, 0.0, 0.0});
    double last_fpr = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double u = k + 1 == count ? kQuantileRadius
                                        : -kQuantileRadius + static_cast<double>(k) * step;
        const double fpr = std_normal_cdf(u);
        if (!(fpr > last_fpr) || !(fpr < 1.0)) continue;
        last_fpr = fpr;
        // FPR(theta) = Phi((c0 - theta) / s) = Phi(u)
        curve.points.push_back({c0 - s * u, fpr, roc_tpr_from_fpr(model.delta(), fpr)});
    }
    curve.points.push_back({-kInf, 1.0, 1.0});
    return curve;
}

double auc_for_delta(double delta, const QuadratureRule& rule) {
    if (!std::isfinite(delta)) throw DomainError("auc: delta must be finite");
    if (delta == 0.0) return 0.5;
    return 1.0 - integrate_gauss_weighted(
                     [delta](double v) { return std_normal_cdf(v - delta); }, rule);
}

double auc(const LdaModel& model, const QuadratureRule& rule) {
    return auc_for_delta(model.delta(), rule);
}

RocDerivatives roc_derivatives(double delta, double fpr) {
    require_open_unit(fpr, "roc_derivatives");
    const double q = -std_normal_quantile(fpr);  // Phi^{-1}(1 - fpr)
    // phi(q - delta) / phi(q) = exp(q delta - delta^2 / 2), evaluated in
    // log space so extreme quantiles do not underflow.
    const double slope = std::exp(q * delta - 0.5 * delta * delta);
    const double curvature = -slope / std_normal_pdf(q) * delta;
    return {slope, curvature};
}

RocDerivatives roc_derivatives(const LdaModel& model, double fpr) {
    return roc_derivatives(model.delta(), fpr);
}

YoudenResult youden(const LdaModel& model) {
    YoudenResult out;
    out.theta_star = 0.0;
    if (model.degenerate()) {
        out.degenerate = true;
        const ConfusionDistribution at_zero = confusion_at(model, 0.0);
        out.fpr_at_star = at_zero.fpr();
        out.tpr_at_star = at_zero.tpr();
        out.j_max = 0.0;
        return out;
    }
    out.fpr_at_star = fpr_at(model, 0.0);
    out.tpr_at_star = tpr_at(model, 0.0);
    out.j_max = out.tpr_at_star - out.fpr_at_star;
    return out;
}

}  // namespace ldaroc
