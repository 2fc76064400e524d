#pragma once

#include <cstddef>
#include <vector>

#include "ldaroc/gauss.hpp"
#include "ldaroc/lda.hpp"

namespace ldaroc {

// Joint law of the outcome {TN, FP, FN, TP} when classifying by score > theta.
struct ConfusionDistribution {
    double theta = 0.0;
    double p_tn = 0.0;
    double p_fp = 0.0;
    double p_fn = 0.0;
    double p_tp = 0.0;

    double total() const noexcept { return p_tn + p_fp + p_fn + p_tp; }
    // FP / (FP + TN)
    double fpr() const noexcept { return p_fp / (p_fp + p_tn); }
    // TP / (TP + FN)
    double tpr() const noexcept { return p_tp / (p_tp + p_fn); }
};

struct RocPoint {
    double theta = 0.0;  // +inf / -inf for the limit endpoints
    double fpr = 0.0;
    double tpr = 0.0;
};

// Points ordered by increasing fpr, starting with (0, 0) at theta = +inf and
// ending with (1, 1) at theta = -inf.
struct RocCurve {
    std::vector<RocPoint> points;

    std::size_t size() const noexcept { return points.size(); }
    // fpr and tpr both non-decreasing along the curve.
    bool is_monotone() const;
    // fpr strictly increasing across the points between the two endpoints.
    bool has_strict_interior_fpr() const;
};

struct YoudenResult {
    double theta_star = 0.0;
    double fpr_at_star = 0.0;
    double tpr_at_star = 0.0;
    double j_max = 0.0;
    bool degenerate = false;
};

struct RocDerivatives {
    double slope = 0.0;      // d TPR / d FPR
    double curvature = 0.0;  // d^2 TPR / d FPR^2
};

// Four outcome probabilities at theta, each from the Gaussian mass of the
// shifted decision half-space under one class. A degenerate model has a
// constant score beta; ties with theta count as negative.
ConfusionDistribution confusion_at(const LdaModel& model, double theta);

// 1 - Phi(-(alpha^T mu_0 + beta - theta) / scale). Needs scale > 0.
double fpr_at(const LdaModel& model, double theta);
// 1 - Phi(-(alpha^T mu_1 + beta - theta) / scale). Needs scale > 0.
double tpr_at(const LdaModel& model, double theta);

// The ROC curve as a function: TPR = 1 - Phi(Phi^{-1}(1 - FPR) - delta).
double roc_tpr_from_fpr(const LdaModel& model, double fpr);
double roc_tpr_from_fpr(double delta, double fpr);

// `count` points with fpr = Phi(u), u equally spaced on [-8, 8], plus the
// two limit endpoints. Points whose fpr does not strictly exceed the
// previous one in floating point are dropped.
RocCurve sample_roc(const LdaModel& model, std::size_t count);

// 1 - int Phi(v - delta) phi(v) dv. Returns 0.5 exactly when delta == 0.
double auc(const LdaModel& model, const QuadratureRule& rule = default_quadrature_rule());
double auc_for_delta(double delta, const QuadratureRule& rule = default_quadrature_rule());

// Closed-form slope and curvature of the ROC curve at fpr, with
// q = Phi^{-1}(1 - fpr):
//   slope     =  phi(q - delta) / phi(q)
//   curvature = -phi(q - delta) / phi(q)^2 * delta
RocDerivatives roc_derivatives(const LdaModel& model, double fpr);
RocDerivatives roc_derivatives(double delta, double fpr);

// The J = TPR - FPR maximizer, which sits at theta = 0 for every
// non-degenerate model. Degenerate models report theta_star = 0, j_max = 0
// and set the flag.
YoudenResult youden(const LdaModel& model);

}  // namespace ldaroc
