#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldaroc/lda.hpp"
#include "ldaroc/roc.hpp"

namespace ldaroc {

// Discriminant values with their true labels.
struct ScoredSample {
    std::vector<double> scores;
    std::vector<int> labels;
};

// Analytic confusion distribution next to a Monte Carlo estimate of it.
struct VerificationReport {
    double theta = 0.0;
    ConfusionDistribution analytic;
    ConfusionDistribution estimated;  // cell frequencies
    double max_abs_gap = 0.0;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
};

// Sort-based ROC estimate. One point per distinct score threshold theta,
// taken in decreasing order, with rates counted by score > theta; tied
// scores share a point. Throws DataError unless both labels are present.
RocCurve empirical_roc(const ScoredSample& sample);

// Trapezoid rule over the curve's points in order.
double trapezoid_auc(const RocCurve& curve);

// Labeled point number `index` of the model's generative process: class 0
// with probability p0 (one uniform draw), then features from that class.
// Draws are addressed by (seed, index), so any chunking of the index range
// reproduces the same points.
int draw_labeled_point(const LdaModel& model, std::uint64_t seed, std::uint64_t index,
                       std::span<double> out);

LabeledDataset simulate_dataset(const LdaModel& model, std::size_t count, std::uint64_t seed);

// Monte Carlo tally of {TN, FP, FN, TP} for classification by score > theta,
// compared against confusion_at. `threads` splits the draw range into
// contiguous chunks; the result does not depend on it.
VerificationReport mc_confusion(const LdaModel& model, double theta, std::size_t count,
                                std::uint64_t seed, unsigned threads = 1);

ScoredSample score_dataset(const LdaModel& model, const LabeledDataset& data);

}  // namespace ldaroc
