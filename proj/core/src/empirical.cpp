#include "ldaroc/empirical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "ldaroc/errors.hpp"

namespace ldaroc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Indexed as [label][predicted positive].
using Tally = std::array<std::array<std::size_t, 2>, 2>;

Tally tally_range(const LdaModel& model, double theta, std::uint64_t seed, std::size_t begin,
                  std::size_t end) {
    Tally t{};
    Vector x(model.dim());
    for (std::size_t i = begin; i < end; ++i) {
        const int label = draw_labeled_point(model, seed, i, x);
        const bool positive = score(model, x) > theta;
        ++t[label][positive ? 1 : 0];
    }
    return t;
}

}  // namespace

RocCurve empirical_roc(const ScoredSample& sample) {
    const std::size_t m = sample.scores.size();
    if (sample.labels.size() != m) {
        throw DimensionMismatch("empirical_roc: scores and labels differ in length");
    }
    std::size_t negatives = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (std::isnan(sample.scores[i])) throw DomainError("empirical_roc: NaN score");
        const int label = sample.labels[i];
        if (label != 0 && label != 1) throw DataError("empirical_roc: labels must be 0 or 1");
        negatives += label == 0 ? 1 : 0;
    }
    const std::size_t positives = m - negatives;
    if (negatives == 0 || positives == 0) {
        throw DataError("empirical_roc: both classes must be present");
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sample.scores[a] > sample.scores[b];
    });

    RocCurve curve;
    curve.points.push_back({kInf, 0.0, 0.0});
    std::size_t fp = 0;
    std::size_t tp = 0;
    std::size_t i = 0;
    while (i < m) {
        // Consume one tie group; the next distinct score is the threshold at
        // which this whole group counts as positive.
        const double group_score = sample.scores[order[i]];
        while (i < m && sample.scores[order[i]] == group_score) {
            (sample.labels[order[i]] == 0 ? fp : tp) += 1;
            ++i;
        }
        if (i == m) break;
        curve.points.push_back({sample.scores[order[i]],
                                static_cast<double>(fp) / static_cast<double>(negatives),
                                static_cast<double>(tp) / static_cast<double>(positives)});
    }
    curve.points.push_back({-kInf, 1.0, 1.0});
    return curve;
}

double trapezoid_auc(const RocCurve& curve) {
    if (curve.points.size() < 2) throw DomainError("trapezoid_auc: need at least 2 points");
    double area = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const RocPoint& a = curve.points[i - 1];
        const RocPoint& b = curve.points[i];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return area;
}

int draw_labeled_point(const LdaModel& model, std::uint64_t seed, std::uint64_t index,
                       std::span<double> out) {
    StreamRng rng(seed, index);
    const int label = rng.next_uniform() < model.prior0() ? 0 : 1;
    model.class_distribution(label).draw(rng, out);
    return label;
}

LabeledDataset simulate_dataset(const LdaModel& model, std::size_t count, std::uint64_t seed) {
    LabeledDataset data;
    data.cols = model.dim();
    data.features.resize(count * data.cols);
    data.labels.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::span<double> row(data.features.data() + i * data.cols, data.cols);
        data.labels[i] = draw_labeled_point(model, seed, i, row);
    }
    return data;
}

VerificationReport mc_confusion(const LdaModel& model, double theta, std::size_t count,
                                std::uint64_t seed, unsigned threads) {
    if (count == 0) throw DomainError("mc_confusion: count must be at least 1");
    if (!std::isfinite(theta)) throw DomainError("mc_confusion: theta must be finite");

    const std::size_t chunks = std::clamp<std::size_t>(threads, 1, count);
    std::vector<Tally> partial(chunks);
    if (chunks == 1) {
        partial[0] = tally_range(model, theta, seed, 0, count);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t begin = count * c / chunks;
            const std::size_t end = count * (c + 1) / chunks;
            workers.emplace_back([&, c, begin, end] {
                partial[c] = tally_range(model, theta, seed, begin, end);
            });
        }
        for (auto& w : workers) w.join();
    }

    Tally total{};
    for (const Tally& t : partial)
        for (int l = 0; l < 2; ++l)
            for (int p = 0; p < 2; ++p) total[l][p] += t[l][p];

    VerificationReport report;
    report.theta = theta;
    report.sample_count = count;
    report.seed = seed;
    report.analytic = confusion_at(model, theta);
    const double n = static_cast<double>(count);
    report.estimated.theta = theta;
    report.estimated.p_tn = static_cast<double>(total[0][0]) / n;
    report.estimated.p_fp = static_cast<double>(total[0][1]) / n;
    report.estimated.p_fn = static_cast<double>(total[1][0]) / n;
    report.estimated.p_tp = static_cast<double>(total[1][1]) / n;
    report.max_abs_gap = std::max({std::fabs(report.analytic.p_tn - report.estimated.p_tn),
                                   std::fabs(report.analytic.p_fp - report.estimated.p_fp),
                                   std::fabs(report.analytic.p_fn - report.estimated.p_fn),
                                   std::fabs(report.analytic.p_tp - report.estimated.p_tp)});
    return report;
}

ScoredSample score_dataset(const LdaModel& model, const LabeledDataset& data) {
    if (data.cols != model.dim()) {
        throw DimensionMismatch("score_dataset: dataset has " + std::to_string(data.cols) +
                                " columns, model expects " + std::to_string(model.dim()));
    }
    ScoredSample out;
    out.scores.resize(data.rows());
    out.labels = data.labels;
    for (std::size_t i = 0; i < data.rows(); ++i) out.scores[i] = score(model, data.row(i));
    return out;
}

}  // namespace ldaroc
