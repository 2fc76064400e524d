#include "csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "cli_error.hpp"

namespace ldaroc::cli {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            return cells;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

bool blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

bool parse_number(std::string_view cell, double& out) {
    cell = trim(cell);
    if (cell.empty()) return false;
    if (cell.front() == '+') cell.remove_prefix(1);
    const char* end = cell.data() + cell.size();
    const auto res = std::from_chars(cell.data(), end, out);
    return res.ec == std::errc() && res.ptr == end;
}

LabeledTable read_labeled_csv(std::istream& in, const std::string& label_column) {
    std::string line;
    if (!std::getline(in, line) || blank(line)) throw parse_error("CSV input is empty: header row required");
    const auto header = split(line);
    std::size_t label_index = header.size();
    LabeledTable table;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == label_column) {
            if (label_index != header.size()) throw parse_error("label column '" + label_column + "' appears twice");
            label_index = j;
        } else {
            table.feature_names.emplace_back(header[j]);
        }
    }
    if (label_index == header.size()) throw parse_error("no column named '" + label_column + "' in header");
    if (table.feature_names.empty()) throw parse_error("CSV has no feature columns");
    table.data.cols = table.feature_names.size();

    std::vector<double> row(table.data.cols);
    std::size_t line_no = 1;
    std::size_t data_row = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        ++data_row;
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw parse_error("row " + std::to_string(data_row) + " (line " + std::to_string(line_no) +
                              "): expected " + std::to_string(header.size()) + " columns, found " +
                              std::to_string(cells.size()));
        }
        int label = -1;
        std::size_t k = 0;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double v = 0.0;
            if (!parse_number(cells[j], v) || !std::isfinite(v)) {
                throw parse_error("row " + std::to_string(data_row) + " (line " + std::to_string(line_no) +
                                  "), column " + std::to_string(j + 1) + " '" + std::string(header[j]) +
                                  "': cannot parse '" + std::string(cells[j]) + "' as a finite number");
            }
            if (j == label_index) {
                if (v != 0.0 && v != 1.0) {
                    throw parse_error("row " + std::to_string(data_row) + " (line " +
                                      std::to_string(line_no) + "): label '" + std::string(cells[j]) +
                                      "' is outside {0, 1}");
                }
                label = static_cast<int>(v);
            } else {
                row[k++] = v;
            }
        }
        table.data.push_back(row, label);
    }
    return table;
}

void write_labeled_csv(std::ostream& out, const LabeledDataset& data) {
    for (std::size_t j = 0; j < data.cols; ++j) out << 'x' << (j + 1) << ',';
    out << "label\n";
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (double v : data.row(i)) out << format_number(v) << ',';
        out << data.labels[i] << '\n';
    }
}

void write_curve_csv(std::ostream& out, const RocCurve& curve) {
    out << "theta,fpr,tpr\n";
    for (const RocPoint& p : curve.points) {
        out << format_number(p.theta) << ',' << format_number(p.fpr) << ',' << format_number(p.tpr) << '\n';
    }
}

RocCurve read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || blank(line)) throw parse_error("curve file is empty");
    const auto header = split(line);
    if (header.size() != 3 || header[0] != "theta" || header[1] != "fpr" || header[2] != "tpr") {
        throw parse_error("curve file header must be 'theta,fpr,tpr'");
    }
    RocCurve curve;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const auto cells = split(line);
        RocPoint p;
        if (cells.size() != 3 || !parse_number(cells[0], p.theta) || !parse_number(cells[1], p.fpr) ||
            !parse_number(cells[2], p.tpr)) {
            throw parse_error("curve file line " + std::to_string(line_no) + ": malformed row");
        }
        if (!(p.fpr >= 0.0 && p.fpr <= 1.0 && p.tpr >= 0.0 && p.tpr <= 1.0)) {
            throw parse_error("curve file line " + std::to_string(line_no) + ": rates must lie in [0, 1]");
        }
        if (!curve.points.empty() && p.fpr < curve.points.back().fpr) {
            throw parse_error("curve file line " + std::to_string(line_no) + ": rows not sorted by fpr");
        }
        curve.points.push_back(p);
    }
    if (curve.points.size() < 2) throw parse_error("curve file needs at least 2 rows");
    return curve;
}

}  // namespace ldaroc::cli
