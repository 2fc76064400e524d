#include "svg_plot.hpp"

#include <ostream>

#include "csv_io.hpp"
#include "ldaroc/version.hpp"

namespace ldaroc::cli {

void write_svg(std::ostream& out, const RocCurve& curve, const PlotOptions& opts) {
    const double s = opts.size;
    const double m = opts.margin;
    const double full = s + 2.0 * m;
    const auto n = [](double x) { return format_number(x); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- ldaroc " << kVersionString << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n(full) << "\" height=\"" << n(full)
        << "\" viewBox=\"0 0 " << n(full) << ' ' << n(full) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << n(full) << "\" height=\"" << n(full) << "\" fill=\"white\"/>\n";

    // y flipped so tpr grows upward
    out << "  <g id=\"plot\" transform=\"translate(" << n(m) << ',' << n(m + s) << ") scale(" << n(s) << ','
        << n(-s) << ")\">\n";
    out << "    <rect id=\"axes\" x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
    out << "    <line id=\"chance\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\" stroke=\"gray\" stroke-dasharray=\"4 4\" "
           "stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    out << "    <polyline id=\"roc\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" "
           "vector-effect=\"non-scaling-stroke\" points=\"";
    bool first = true;
    for (const RocPoint& p : curve.points) {
        if (!first) out << ' ';
        first = false;
        out << n(p.fpr) << ',' << n(p.tpr);
    }
    out << "\"/>\n";
    if (opts.youden) {
        out << "    <circle id=\"youden\" cx=\"" << n(opts.youden->first) << "\" cy=\"" << n(opts.youden->second)
            << "\" r=\"" << n(5.0 / s) << "\" fill=\"#c0392b\"/>\n";
    }
    out << "  </g>\n";

    // tick labels live outside the flipped group so text stays upright
    out << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double t = k / 4.0;
        out << "    <text x=\"" << n(m + t * s) << "\" y=\"" << n(m + s + 16) << "\" text-anchor=\"middle\">"
            << n(t) << "</text>\n";
        out << "    <text x=\"" << n(m - 6) << "\" y=\"" << n(m + s - t * s + 4) << "\" text-anchor=\"end\">" << n(t)
            << "</text>\n";
    }
    out << "    <text x=\"" << n(m + s / 2) << "\" y=\"" << n(full - 8) << "\" text-anchor=\"middle\">FPR</text>\n";
    out << "    <text x=\"14\" y=\"" << n(m + s / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << n(m + s / 2) << ")\">TPR</text>\n";
    out << "  </g>\n";
    out << "</svg>\n";
}

}  // namespace ldaroc::cli
