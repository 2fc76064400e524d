#include "documents.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "cli_error.hpp"
#include "csv_io.hpp"
#include "ldaroc/errors.hpp"

namespace ldaroc::cli {

using nlohmann::json;

namespace {

Vector read_vector(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw parse_error(std::string("model document: '") + key + "' must be an array of numbers");
    }
    Vector v;
    for (const json& x : doc[key]) {
        if (!x.is_number()) throw parse_error(std::string("model document: '") + key + "' holds a non-number");
        v.push_back(x.get<double>());
    }
    return v;
}

double read_number(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number()) {
        throw parse_error(std::string("model document: '") + key + "' must be a number");
    }
    return doc[key].get<double>();
}

void check_derived(const char* name, double stored, double recomputed) {
    if (std::fabs(stored - recomputed) > kDerivedTolerance * std::max(1.0, std::fabs(recomputed))) {
        throw parse_error(std::string("model document: stored derived '") + name + "' = " +
                          format_number(stored) + " disagrees with recomputed " + format_number(recomputed));
    }
}

}  // namespace

json model_to_json(const LdaModel& model) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["dimension"] = model.dim();
    doc["mu0"] = model.mu0();
    doc["mu1"] = model.mu1();
    doc["sigma"] = model.sigma().rows();
    doc["p0"] = model.prior0();
    doc["derived"] = {
        {"alpha", model.alpha()},
        {"beta", model.beta()},
        {"scale", model.scale()},
        {"delta", model.delta()},
    };
    return doc;
}

LoadedModel model_from_json(const json& doc) {
    if (!doc.is_object()) throw parse_error("model document must be a JSON object");
    if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
        throw parse_error(std::string("model document: schema_version must be \"") + kSchemaVersion + "\"");
    }
    Vector mu0 = read_vector(doc, "mu0");
    Vector mu1 = read_vector(doc, "mu1");
    if (!doc.contains("sigma") || !doc["sigma"].is_array()) {
        throw parse_error("model document: 'sigma' must be an array of rows");
    }
    std::vector<std::vector<double>> rows;
    for (const json& r : doc["sigma"]) {
        if (!r.is_array()) throw parse_error("model document: 'sigma' rows must be arrays");
        std::vector<double> row;
        for (const json& x : r) {
            if (!x.is_number()) throw parse_error("model document: 'sigma' holds a non-number");
            row.push_back(x.get<double>());
        }
        rows.push_back(std::move(row));
    }
    const double p0 = doc.contains("p0") ? read_number(doc, "p0") : 0.5;
    if (mu0.empty() || mu0.size() != mu1.size() || rows.size() != mu0.size()) {
        throw parse_error("model document: mu0, mu1 and sigma dimensions disagree");
    }
    if (doc.contains("dimension") &&
        (!doc["dimension"].is_number_unsigned() || doc["dimension"].get<std::size_t>() != mu0.size())) {
        throw parse_error("model document: 'dimension' does not match the vectors");
    }

    SymMatrix sigma;
    try {
        sigma = SymMatrix::from_rows(rows);
    } catch (const DimensionMismatch&) {
        throw parse_error("model document: 'sigma' is not square");
    }
    if (!(p0 > 0.0 && p0 < 1.0)) throw parse_error("model document: p0 must lie in (0, 1)");

    LoadedModel loaded{LdaModel::from_params(std::move(mu0), std::move(mu1), sigma, p0),
                       sigma.asymmetry_warning()};

    if (doc.contains("derived")) {
        const json& d = doc["derived"];
        if (!d.is_object()) throw parse_error("model document: 'derived' must be an object");
        const LdaModel& m = loaded.model;
        const Vector alpha = read_vector(d, "alpha");
        if (alpha.size() != m.dim()) throw parse_error("model document: derived 'alpha' has wrong length");
        for (std::size_t i = 0; i < alpha.size(); ++i) check_derived("alpha", alpha[i], m.alpha()[i]);
        check_derived("beta", read_number(d, "beta"), m.beta());
        check_derived("scale", read_number(d, "scale"), m.scale());
        check_derived("delta", read_number(d, "delta"), m.delta());
    }
    return loaded;
}

void save_model(const LdaModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << model_to_json(model).dump(2) << '\n';
    if (!out) throw io_error("failed writing '" + path + "'");
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open model file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw parse_error("model file '" + path + "' is not valid JSON: " + e.what());
    }
    return model_from_json(doc);
}

json confusion_to_json(const ConfusionDistribution& c) {
    return {{"theta", c.theta}, {"tn", c.p_tn}, {"fp", c.p_fp}, {"fn", c.p_fn}, {"tp", c.p_tp}};
}

json youden_to_json(const YoudenResult& y) {
    return {{"theta_star", y.theta_star},
            {"fpr", y.fpr_at_star},
            {"tpr", y.tpr_at_star},
            {"j_max", y.j_max},
            {"degenerate", y.degenerate}};
}

Report build_report(const LdaModel& model, double theta, std::size_t samples, std::uint64_t seed,
                    unsigned threads) {
    Report r;
    r.model = &model;
    r.confusion = confusion_at(model, theta);
    r.youden = youden(model);
    r.auc = auc(model);
    if (samples > 0) r.monte_carlo = mc_confusion(model, theta, samples, seed, threads);
    return r;
}

json report_to_json(const Report& r) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["model"] = {{"dimension", r.model->dim()},
                    {"p0", r.model->prior0()},
                    {"scale", r.model->scale()},
                    {"delta", r.model->delta()},
                    {"degenerate", r.model->degenerate()}};
    doc["confusion"] = confusion_to_json(r.confusion);
    doc["youden"] = youden_to_json(r.youden);
    doc["auc"] = r.auc;
    if (r.monte_carlo) {
        const VerificationReport& mc = *r.monte_carlo;
        json estimated = confusion_to_json(mc.estimated);
        estimated.erase("theta");
        doc["monte_carlo"] = {{"samples", mc.sample_count},
                              {"seed", mc.seed},
                              {"estimated", estimated},
                              {"max_abs_gap", mc.max_abs_gap}};
    } else {
        doc["monte_carlo"] = nullptr;
    }
    return doc;
}

void write_report_text(std::ostream& out, const Report& r) {
    const auto& m = *r.model;
    out << "model: n=" << m.dim() << " p0=" << format_number(m.prior0())
        << " scale=" << format_number(m.scale()) << " delta=" << format_number(m.delta())
        << (m.degenerate() ? " (degenerate: class means coincide)" : "") << '\n';
    out << "confusion at theta=" << format_number(r.confusion.theta) << '\n'
        << "  TN " << format_number(r.confusion.p_tn) << '\n'
        << "  FP " << format_number(r.confusion.p_fp) << '\n'
        << "  FN " << format_number(r.confusion.p_fn) << '\n'
        << "  TP " << format_number(r.confusion.p_tp) << '\n';
    out << "youden: theta*=" << format_number(r.youden.theta_star)
        << " fpr=" << format_number(r.youden.fpr_at_star) << " tpr=" << format_number(r.youden.tpr_at_star)
        << " J=" << format_number(r.youden.j_max) << (r.youden.degenerate ? " (degenerate)" : "") << '\n';
    out << "auc: " << format_number(r.auc) << '\n';
    if (r.monte_carlo) {
        const VerificationReport& mc = *r.monte_carlo;
        out << "monte carlo: samples=" << mc.sample_count << " seed=" << mc.seed << '\n'
            << "  TN " << format_number(mc.estimated.p_tn) << '\n'
            << "  FP " << format_number(mc.estimated.p_fp) << '\n'
            << "  FN " << format_number(mc.estimated.p_fn) << '\n'
            << "  TP " << format_number(mc.estimated.p_tp) << '\n'
            << "  max_abs_gap " << format_number(mc.max_abs_gap) << '\n';
    }
}

}  // namespace ldaroc::cli
