#include "commands.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_error.hpp"
#include "csv_io.hpp"
#include "documents.hpp"
#include "ldaroc/empirical.hpp"
#include "ldaroc/errors.hpp"
#include "ldaroc/version.hpp"
#include "svg_plot.hpp"

namespace ldaroc::cli {
namespace {

struct Globals {
    std::uint64_t seed = 0;
    bool json = false;
    std::string output;
};

// Writes to --output when given, otherwise to `out`.
void emit(const Globals& g, std::ostream& out, const std::string& text) {
    if (g.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw io_error("cannot open '" + g.output + "' for writing");
    f << text;
    if (!f) throw io_error("failed writing '" + g.output + "'");
}

std::ifstream open_input(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error(std::string("cannot open ") + what + " '" + path + "'");
    return in;
}

void warn_asymmetry(const LoadedModel& m, std::ostream& err) {
    if (m.asymmetry_warning) {
        err << "warning: sigma was not symmetric (max |s_ij - s_ji| = "
            << format_number(m.model.sigma().ingested_asymmetry()) << "); averaged with its transpose\n";
    }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int fit_cmd(const Globals& g, const std::string& input, const std::string& label, std::ostream& out,
            std::ostream& err) {
    std::ifstream in = open_input(input, "input CSV");
    const LabeledTable table = read_labeled_csv(in, label);
    const LabeledDataset& data = table.data;

    std::size_t n1 = 0;
    for (int l : data.labels) n1 += l == 1;
    const std::size_t n0 = data.rows() - n1;
    if (n0 == 0 || n1 == 0) {
        throw CliError(ExitCode::data, "input has no rows of class " + std::string(n0 == 0 ? "0" : "1"));
    }

    const LdaModel model = fit(data);
    const nlohmann::json doc = model_to_json(model);

    // The model goes to --output when given; then stdout carries the summary.
    std::ostream& summary = g.output.empty() ? err : out;
    if (g.output.empty()) {
        out << dump(doc);
    } else {
        save_model(model, g.output);
    }
    if (g.json) {
        summary << dump({{"n", model.dim()},
                         {"m", data.rows()},
                         {"class0", n0},
                         {"class1", n1},
                         {"delta", model.delta()}});
    } else {
        summary << "n=" << model.dim() << " m=" << data.rows() << " class0=" << n0 << " class1=" << n1
                << " delta=" << format_number(model.delta()) << '\n';
    }
    return 0;
}

int roc_cmd(const Globals& g, const std::string& model_path, std::size_t points, std::ostream& out,
            std::ostream& err) {
    const LoadedModel m = load_model(model_path);
    warn_asymmetry(m, err);
    const RocCurve curve = sample_roc(m.model, points);
    std::ostringstream s;
    write_curve_csv(s, curve);
    emit(g, out, s.str());
    return 0;
}

int auc_cmd(const Globals& g, const std::string& model_path, std::ostream& out, std::ostream& err) {
    const LoadedModel m = load_model(model_path);
    warn_asymmetry(m, err);
    const double a = auc(m.model);
    emit(g, out, g.json ? dump({{"auc", a}, {"delta", m.model.delta()}}) : format_number(a) + "\n");
    return 0;
}

int youden_cmd(const Globals& g, const std::string& model_path, std::ostream& out, std::ostream& err) {
    const LoadedModel m = load_model(model_path);
    warn_asymmetry(m, err);
    const YoudenResult y = youden(m.model);
    if (g.json) {
        emit(g, out, dump(youden_to_json(y)));
    } else {
        emit(g, out,
             "theta_star=" + format_number(y.theta_star) + " fpr=" + format_number(y.fpr_at_star) +
                 " tpr=" + format_number(y.tpr_at_star) + " j_max=" + format_number(y.j_max) +
                 (y.degenerate ? " degenerate" : "") + "\n");
    }
    return 0;
}

int confusion_cmd(const Globals& g, const std::string& model_path, double theta, std::ostream& out,
                  std::ostream& err) {
    const LoadedModel m = load_model(model_path);
    warn_asymmetry(m, err);
    const ConfusionDistribution c = confusion_at(m.model, theta);
    if (g.json) {
        emit(g, out, dump(confusion_to_json(c)));
    } else {
        emit(g, out,
             "theta=" + format_number(c.theta) + "\nTN " + format_number(c.p_tn) + "\nFP " + format_number(c.p_fp) +
                 "\nFN " + format_number(c.p_fn) + "\nTP " + format_number(c.p_tp) + "\n");
    }
    return 0;
}

int report_cmd(const Globals& g, const std::string& model_path, double theta, std::size_t samples,
               unsigned threads, std::ostream& out, std::ostream& err) {
    const LoadedModel m = load_model(model_path);
    warn_asymmetry(m, err);
    const Report r = build_report(m.model, theta, samples, g.seed, threads);
    std::ostringstream s;
    if (g.json) {
        s << dump(report_to_json(r));
    } else {
        write_report_text(s, r);
    }
    emit(g, out, s.str());
    return 0;
}

int simulate_cmd(const Globals& g, const std::string& model_path, std::size_t count, std::ostream& out,
                 std::ostream& err) {
    const LoadedModel m = load_model(model_path);
    warn_asymmetry(m, err);
    const LabeledDataset data = simulate_dataset(m.model, count, g.seed);
    std::ostringstream s;
    write_labeled_csv(s, data);
    emit(g, out, s.str());
    return 0;
}

int plot_cmd(const Globals& g, const std::string& curve_path, const std::vector<double>& marker,
             std::ostream& out) {
    std::ifstream in = open_input(curve_path, "curve CSV");
    const RocCurve curve = read_curve_csv(in);
    PlotOptions opts;
    if (!marker.empty()) {
        for (double v : marker) {
            if (!(v >= 0.0 && v <= 1.0)) throw CliError(ExitCode::usage, "--youden values must lie in [0, 1]");
        }
        opts.youden = std::pair{marker[0], marker[1]};
    }
    std::ostringstream s;
    write_svg(s, curve, opts);
    emit(g, out, s.str());
    return 0;
}

ExitCode code_for(const Error& e) {
    if (dynamic_cast<const DomainError*>(&e)) return ExitCode::usage;
    if (dynamic_cast<const DimensionMismatch*>(&e)) return ExitCode::parse;
    if (dynamic_cast<const DataError*>(&e)) return ExitCode::data;
    return ExitCode::numerical;  // not PD, degenerate model or half-space
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form ROC analysis for Gaussian linear discriminant classifiers", "ldaroc"};
    app.set_version_flag("--version", kVersionString);
    app.require_subcommand(1);

    Globals g;
    app.add_option("--seed", g.seed, "Seed for simulate and the Monte Carlo check in report")->capture_default_str();
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("-o,--output", g.output, "Write the result to this file instead of stdout");

    std::string input, model_path, curve_path, label = "label";
    std::size_t points = 256, samples = 0, count = 1000;
    unsigned threads = 1;
    double theta = 0.0;
    std::vector<double> marker;

    auto* fit_sc = app.add_subcommand("fit", "Fit a model from a labeled CSV");
    fit_sc->add_option("input", input, "Labeled CSV with a header row")->required();
    fit_sc->add_option("--label", label, "Name of the 0/1 label column")->capture_default_str();

    auto model_arg = [&](CLI::App* sc) {
        sc->add_option("model", model_path, "Model JSON file")->required();
    };

    auto* roc_sc = app.add_subcommand("roc", "Write the analytic ROC curve as CSV");
    model_arg(roc_sc);
    roc_sc->add_option("--points", points, "Interior curve points")->capture_default_str()->check(
        CLI::Range(std::size_t{2}, std::size_t{100000000}));

    auto* auc_sc = app.add_subcommand("auc", "Area under the analytic ROC curve");
    model_arg(auc_sc);

    auto* youden_sc = app.add_subcommand("youden", "Youden-optimal threshold");
    model_arg(youden_sc);

    auto* conf_sc = app.add_subcommand("confusion", "Confusion probabilities at a threshold");
    model_arg(conf_sc);
    conf_sc->add_option("--theta", theta, "Decision threshold")->capture_default_str();

    auto* report_sc = app.add_subcommand("report", "Analytic summary with an optional Monte Carlo check");
    model_arg(report_sc);
    report_sc->add_option("--theta", theta, "Decision threshold")->capture_default_str();
    report_sc->add_option("--samples", samples, "Monte Carlo draws (0 skips the check)")->capture_default_str();
    report_sc->add_option("--threads", threads, "Worker threads for the Monte Carlo check")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));

    auto* sim_sc = app.add_subcommand("simulate", "Draw a labeled CSV from a model");
    model_arg(sim_sc);
    sim_sc->add_option("--count", count, "Rows to draw")->capture_default_str()->check(
        CLI::Range(std::size_t{1}, std::size_t{1000000000}));

    auto* plot_sc = app.add_subcommand("plot", "Render a curve CSV as SVG");
    plot_sc->add_option("curve", curve_path, "Curve CSV (theta,fpr,tpr)")->required();
    plot_sc->add_option("--youden", marker, "Marker at FPR,TPR")->delimiter(',')->expected(2);

    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // --help and --version land here with a zero exit code
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    try {
        if (*fit_sc) return fit_cmd(g, input, label, out, err);
        if (*roc_sc) return roc_cmd(g, model_path, points, out, err);
        if (*auc_sc) return auc_cmd(g, model_path, out, err);
        if (*youden_sc) return youden_cmd(g, model_path, out, err);
        if (*conf_sc) return confusion_cmd(g, model_path, theta, out, err);
        if (*report_sc) return report_cmd(g, model_path, theta, samples, threads, out, err);
        if (*sim_sc) return simulate_cmd(g, model_path, count, out, err);
        if (*plot_sc) return plot_cmd(g, curve_path, marker, out);
    } catch (const CliError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.code());
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(code_for(e));
    }
    return static_cast<int>(ExitCode::usage);
}

}  // namespace ldaroc::cli
