#pragma once

#include <iosfwd>
#include <optional>
#include <utility>

#include "ldaroc/roc.hpp"

namespace ldaroc::cli {

struct PlotOptions {
    double size = 480.0;    // side of the unit square in px
    double margin = 48.0;
    std::optional<std::pair<double, double>> youden;  // (fpr, tpr)
};

// Self-contained SVG. Curve and diagonal share one unit-coordinate group, so
// their coordinates are the raw rates and compare directly.
void write_svg(std::ostream& out, const RocCurve& curve, const PlotOptions& opts);

}  // namespace ldaroc::cli
