#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ldaroc/empirical.hpp"
#include "ldaroc/lda.hpp"
#include "ldaroc/roc.hpp"

namespace ldaroc::cli {

inline constexpr const char* kSchemaVersion = "1";

// Stored derived values must agree with the recomputed ones to this
// relative tolerance (scaled by max(1, |value|)).
inline constexpr double kDerivedTolerance = 1e-9;

nlohmann::json model_to_json(const LdaModel& model);

struct LoadedModel {
    LdaModel model;
    bool asymmetry_warning = false;
};

// Validates shape and types, rebuilds the model from (mu0, mu1, sigma, p0)
// and checks the optional "derived" block against it. Throws CliError(parse)
// on any mismatch.
LoadedModel model_from_json(const nlohmann::json& doc);

void save_model(const LdaModel& model, const std::string& path);
LoadedModel load_model(const std::string& path);

nlohmann::json confusion_to_json(const ConfusionDistribution& c);
nlohmann::json youden_to_json(const YoudenResult& y);

// Analytic summary at theta, plus the Monte Carlo comparison when present.
struct Report {
    const LdaModel* model = nullptr;
    ConfusionDistribution confusion;
    YoudenResult youden;
    double auc = 0.0;
    std::optional<VerificationReport> monte_carlo;
};

Report build_report(const LdaModel& model, double theta, std::size_t samples, std::uint64_t seed,
                    unsigned threads);
nlohmann::json report_to_json(const Report& r);
void write_report_text(std::ostream& out, const Report& r);

}  // namespace ldaroc::cli
