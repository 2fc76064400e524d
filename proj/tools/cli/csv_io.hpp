#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ldaroc/lda.hpp"
#include "ldaroc/roc.hpp"

namespace ldaroc::cli {

// Shortest text that still parses back to the same double: 17 significant
// digits, "inf" / "-inf" for infinities.
std::string format_number(double x);

// Strict parse of one CSV cell; the whole cell must be consumed.
bool parse_number(std::string_view cell, double& out);

struct LabeledTable {
    std::vector<std::string> feature_names;
    LabeledDataset data;
};

// Comma-separated, header row required. `label_column` names the 0/1 column;
// every other column is a numeric feature. Throws CliError(parse) naming the
// offending row and column.
LabeledTable read_labeled_csv(std::istream& in, const std::string& label_column);
void write_labeled_csv(std::ostream& out, const LabeledDataset& data);

// theta,fpr,tpr with one row per curve point.
void write_curve_csv(std::ostream& out, const RocCurve& curve);
RocCurve read_curve_csv(std::istream& in);

}  // namespace ldaroc::cli
