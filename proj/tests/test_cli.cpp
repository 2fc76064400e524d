#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "cli/csv_io.hpp"
#include "cli/documents.hpp"
#include "ldaroc/empirical.hpp"
#include "ldaroc/gauss.hpp"
#include "support/cli_harness.hpp"
#include "support/oracles.hpp"

using namespace ldaroc;
using namespace ldaroc::oracle;

namespace {

// 1D, unit variance, class means 0 and delta, balanced classes.
std::string gaussian_csv(std::size_t rows, double delta, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    std::ostringstream s;
    s.precision(17);
    s << "score,label\n";
    for (std::size_t i = 0; i < rows; ++i) {
        const int label = static_cast<int>(i % 2);
        s << z(rng) + label * delta << ',' << label << '\n';
    }
    return s.str();
}

nlohmann::json read_json(const std::string& path) { return nlohmann::json::parse(slurp(path)); }

RocCurve read_curve(const std::string& path) {
    std::istringstream in(slurp(path));
    return cli::read_curve_csv(in);
}

}  // namespace

TEST(CliFit, RecoversDeltaFromGeneratedData) {
    ScratchDir dir;
    spit(dir.file("d.csv"), gaussian_csv(100000, 2.0, 11));
    const CliRun r = run_cli({"fit", dir.file("d.csv"), "--label", "label", "-o", dir.file("m.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const double delta = read_json(dir.file("m.json"))["derived"]["delta"];
    EXPECT_NEAR(delta, 2.0, 0.04);
    EXPECT_NE(r.out.find("n=1 m=100000 class0=50000 class1=50000 delta="), std::string::npos) << r.out;
}

TEST(CliFit, NonNumericCellIsParseErrorNamingRow) {
    ScratchDir dir;
    spit(dir.file("d.csv"), "a,label\n1.0,0\nabc,1\n2.0,1\n");
    const CliRun r = run_cli({"fit", dir.file("d.csv"), "-o", dir.file("m.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("row 2"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("'a'"), std::string::npos) << r.err;
}

TEST(CliFit, LabelOutsideDomain) {
    ScratchDir dir;
    spit(dir.file("d.csv"), "a,label\n1.0,0\n2.0,2\n3.0,1\n");
    const CliRun r = run_cli({"fit", dir.file("d.csv"), "-o", dir.file("m.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("outside {0, 1}"), std::string::npos) << r.err;
}

TEST(CliFit, DistinctCodesForMissingClassAndNonPd) {
    ScratchDir dir;
    spit(dir.file("one.csv"), "a,label\n1,1\n2,1\n3,1\n");
    const CliRun missing = run_cli({"fit", dir.file("one.csv"), "-o", dir.file("m.json")});
    EXPECT_EQ(missing.code, 6);

    // second feature is a copy of the first: pooled covariance is singular
    spit(dir.file("col.csv"), "a,b,label\n1,1,0\n2,2,0\n4,4,0\n1,1,1\n3,3,1\n7,7,1\n");
    const CliRun singular = run_cli({"fit", dir.file("col.csv"), "-o", dir.file("m.json")});
    EXPECT_EQ(singular.code, 4);

    EXPECT_EQ(run_cli({"fit", dir.file("absent.csv")}).code, 5);
    EXPECT_EQ(run_cli({"fit", dir.file("one.csv"), "--label", "nolabel"}).code, 3);
    EXPECT_EQ(run_cli({"fit"}).code, 2);
}

TEST(CliRoc, GoldenCurveRowsAndMedian) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    ASSERT_EQ(run_cli({"roc", dir.file("m.json"), "--points", "256", "-o", dir.file("c.csv")}).code, 0);
    const std::string text = slurp(dir.file("c.csv"));
    EXPECT_EQ(text.rfind("theta,fpr,tpr\ninf,0,0\n", 0), 0u);
    EXPECT_NE(text.find("\n-inf,1,1\n"), std::string::npos);
    const RocCurve c = read_curve(dir.file("c.csv"));
    EXPECT_EQ(c.size(), 258u);
    EXPECT_TRUE(c.is_monotone());

    ASSERT_EQ(run_cli({"roc", dir.file("m.json"), "--points", "257", "-o", dir.file("odd.csv")}).code, 0);
    const RocCurve odd = read_curve(dir.file("odd.csv"));
    bool found = false;
    for (const RocPoint& p : odd.points) {
        if (p.fpr == 0.5) {
            found = true;
            EXPECT_NEAR(p.tpr, 0.97724986805182079280, 1e-15);
        }
    }
    EXPECT_TRUE(found);
}

TEST(CliRoc, ErrorCodes) {
    ScratchDir dir;
    EXPECT_EQ(run_cli({"roc", dir.file("missing.json")}).code, 5);
    spit(dir.file("deg.json"), R"({"schema_version":"1","mu0":[1,2],"mu1":[1,2],"sigma":[[1,0],[0,1]],"p0":0.5})");
    EXPECT_EQ(run_cli({"roc", dir.file("deg.json")}).code, 4);
    spit(dir.file("bad.json"), "{not json");
    EXPECT_EQ(run_cli({"roc", dir.file("bad.json")}).code, 3);
    spit(dir.file("npd.json"), R"({"schema_version":"1","mu0":[0,0],"mu1":[1,0],"sigma":[[1,2],[2,1]]})");
    EXPECT_EQ(run_cli({"roc", dir.file("npd.json")}).code, 4);
    spit(dir.file("m.json"), kGoldenModelJson);
    EXPECT_EQ(run_cli({"roc", dir.file("m.json"), "--points", "1"}).code, 2);
}

TEST(CliModel, TamperedDerivedBlockRejected) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    spit(dir.file("d.csv"), gaussian_csv(2000, 1.0, 3));
    ASSERT_EQ(run_cli({"fit", dir.file("d.csv"), "-o", dir.file("fit.json")}).code, 0);
    nlohmann::json doc = read_json(dir.file("fit.json"));
    doc["derived"]["delta"] = doc["derived"]["delta"].get<double>() + 1e-6;
    spit(dir.file("tampered.json"), doc.dump());
    const CliRun r = run_cli({"auc", dir.file("tampered.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("delta"), std::string::npos);
}

TEST(CliModel, RoundTripReproducesOutputs) {
    ScratchDir dir;
    spit(dir.file("d.csv"), gaussian_csv(5000, 1.3, 5));
    ASSERT_EQ(run_cli({"fit", dir.file("d.csv"), "-o", dir.file("a.json")}).code, 0);
    const std::string a = slurp(dir.file("a.json"));
    // reload through the CLI path and save again: documents and outputs agree
    const LdaModel m = cli::load_model(dir.file("a.json")).model;
    cli::save_model(m, dir.file("b.json"));
    EXPECT_EQ(slurp(dir.file("b.json")), a);
    for (const char* verb : {"auc", "youden"}) {
        EXPECT_EQ(run_cli({"--json", verb, dir.file("a.json")}).out, run_cli({"--json", verb, dir.file("b.json")}).out);
    }
    const LdaModel again = cli::load_model(dir.file("b.json")).model;
    for (double theta : {-2.0, 0.0, 0.7}) {
        EXPECT_NEAR(fpr_at(again, theta), fpr_at(m, theta), 1e-12);
        EXPECT_NEAR(tpr_at(again, theta), tpr_at(m, theta), 1e-12);
    }
    EXPECT_NEAR(auc(again), auc(m), 1e-12);
}

TEST(CliReport, GoldenWithMonteCarlo) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    const CliRun r = run_cli({"--json", "--seed", "42", "report", dir.file("m.json"), "--theta", "0", "--samples",
                              "1000000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["youden"]["j_max"].get<double>(), 0.68268949213708589717, 1e-12);
    EXPECT_NEAR(doc["auc"].get<double>(), 0.92135039647485743467, 1e-12);
    ASSERT_TRUE(doc["monte_carlo"].is_object());
    EXPECT_EQ(doc["monte_carlo"]["seed"], 42);
    EXPECT_LT(doc["monte_carlo"]["max_abs_gap"].get<double>(), 2e-3);
}

TEST(CliReport, AnalyticOnlyIgnoresSeed) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    const CliRun a = run_cli({"--json", "--seed", "1", "report", dir.file("m.json")});
    const CliRun b = run_cli({"--json", "--seed", "2", "report", dir.file("m.json")});
    ASSERT_EQ(a.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(a.out)["monte_carlo"].is_null());
    EXPECT_EQ(a.out, b.out);
    const CliRun text = run_cli({"report", dir.file("m.json")});
    EXPECT_EQ(text.out.find("monte carlo"), std::string::npos);
    EXPECT_NE(text.out.find("auc: 0.9213503964748"), std::string::npos) << text.out;
}

TEST(CliReport, JsonMatchesSchema) {
    ScratchDir dir;
    const nlohmann::json schema = nlohmann::json::parse(slurp(LDAROC_SOURCE_DIR "/docs/report.schema.json"));
    spit(dir.file("m.json"), kGoldenModelJson);
    spit(dir.file("deg.json"), R"({"schema_version":"1","mu0":[0],"mu1":[0],"sigma":[[1]],"p0":0.3})");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "report", dir.file("m.json")},
             {"--json", "report", dir.file("m.json"), "--samples", "1000", "--theta", "0.5"},
             {"--json", "report", dir.file("deg.json")},
         }) {
        const CliRun r = run_cli(args);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(validate_schema(nlohmann::json::parse(r.out), schema), "") << r.out;
    }
    // the validator does reject things
    nlohmann::json broken = nlohmann::json::parse(run_cli({"--json", "report", dir.file("m.json")}).out);
    broken["youden"].erase("j_max");
    EXPECT_NE(validate_schema(broken, schema), "");
}

TEST(CliReport, ThreadCountDoesNotChangeOutput) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    const auto one = run_cli({"--json", "report", dir.file("m.json"), "--samples", "20000", "--threads", "1"});
    const auto four = run_cli({"--json", "report", dir.file("m.json"), "--samples", "20000", "--threads", "4"});
    EXPECT_EQ(one.out, four.out);
}

TEST(CliVerbs, ScalarOutputs) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    EXPECT_EQ(run_cli({"auc", dir.file("m.json")}).out.substr(0, 14), "0.921350396474");
    const nlohmann::json y = nlohmann::json::parse(run_cli({"youden", dir.file("m.json"), "--json"}).out);
    EXPECT_EQ(y["theta_star"], 0.0);
    EXPECT_NEAR(y["fpr"].get<double>(), 0.15865525393145705141, 1e-15);
    const nlohmann::json c =
        nlohmann::json::parse(run_cli({"--json", "confusion", dir.file("m.json"), "--theta", "0"}).out);
    EXPECT_NEAR(c["tp"].get<double>(), 0.5 * 0.84134474606854294858, 1e-15);
    EXPECT_NEAR(c["fp"].get<double>(), 0.5 * 0.15865525393145705141, 1e-15);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliPlot, DiagonalCurveCoincidesWithChanceLine) {
    ScratchDir dir;
    spit(dir.file("diag.csv"), "theta,fpr,tpr\ninf,0,0\n1,0.25,0.25\n0,0.5,0.5\n-1,0.75,0.75\n-inf,1,1\n");
    const CliRun r = run_cli({"plot", dir.file("diag.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(well_formed_xml(r.out));
    for (auto [x, y] : polyline_points(r.out)) EXPECT_EQ(x, y);
    EXPECT_NE(r.out.find("<line id=\"chance\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\""), std::string::npos);
    EXPECT_EQ(r.out.find("id=\"youden\""), std::string::npos);
}

TEST(CliPlot, GoldenCurveAboveDiagonalWithMarker) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    ASSERT_EQ(run_cli({"roc", dir.file("m.json"), "--points", "101", "-o", dir.file("c.csv")}).code, 0);
    const CliRun r = run_cli({"plot", dir.file("c.csv"), "--youden", "0.15865525393145705,0.84134474606854293", "-o",
                              dir.file("c.svg")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string svg = slurp(dir.file("c.svg"));
    std::string why;
    EXPECT_TRUE(well_formed_xml(svg, &why)) << why;
    const auto pts = polyline_points(svg);
    ASSERT_EQ(pts.size(), 103u);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        if (pts[i].first > 0.0 && pts[i].first < 1.0) EXPECT_GT(pts[i].second, pts[i].first);
    }
    EXPECT_NE(svg.find("<circle id=\"youden\" cx=\"0.15865525393145705\""), std::string::npos);
}

TEST(CliPlot, MalformedCurveRejected) {
    ScratchDir dir;
    spit(dir.file("bad.csv"), "theta,fpr,tpr\ninf,0,0\n0,0.7,0.5\n1,0.2,0.3\n-inf,1,1\n");
    EXPECT_EQ(run_cli({"plot", dir.file("bad.csv")}).code, 3);
    spit(dir.file("hdr.csv"), "x,y\n0,0\n1,1\n");
    EXPECT_EQ(run_cli({"plot", dir.file("hdr.csv")}).code, 3);
    EXPECT_EQ(run_cli({"plot", dir.file("none.csv")}).code, 5);
    EXPECT_EQ(well_formed_xml("<a><b></a></b>"), false);
}

TEST(CliPipeline, ByteIdenticalReruns) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    auto pipeline = [&](const std::string& tag) {
        const std::string data = dir.file(tag + ".csv"), model = dir.file(tag + ".json"),
                          curve = dir.file(tag + "-roc.csv"), report = dir.file(tag + "-report.json");
        EXPECT_EQ(run_cli({"--seed", "99", "simulate", dir.file("m.json"), "--count", "3000", "-o", data}).code, 0);
        EXPECT_EQ(run_cli({"fit", data, "-o", model}).code, 0);
        EXPECT_EQ(run_cli({"roc", model, "--points", "64", "-o", curve}).code, 0);
        EXPECT_EQ(run_cli({"--json", "--seed", "5", "report", model, "--samples", "5000", "-o", report}).code, 0);
        return slurp(data) + slurp(model) + slurp(curve) + slurp(report);
    };
    const std::string a = pipeline("a");
    EXPECT_EQ(a, pipeline("b"));
    EXPECT_GT(a.size(), 1000u);
}

TEST(CliPipeline, TrapezoidOverEmittedCurveMatchesReportAuc) {
    ScratchDir dir;
    spit(dir.file("d.csv"), gaussian_csv(20000, 1.5, 21));
    ASSERT_EQ(run_cli({"fit", dir.file("d.csv"), "-o", dir.file("m.json")}).code, 0);
    ASSERT_EQ(run_cli({"roc", dir.file("m.json"), "--points", "10000", "-o", dir.file("c.csv")}).code, 0);
    const double reported = nlohmann::json::parse(run_cli({"--json", "report", dir.file("m.json")}).out)["auc"];
    EXPECT_NEAR(trapezoid_auc(read_curve(dir.file("c.csv"))), reported, 1e-3);
}

TEST(CliSimulate, PrefixStableAcrossCounts) {
    ScratchDir dir;
    spit(dir.file("m.json"), kGoldenModelJson);
    const std::string small = run_cli({"--seed", "4", "simulate", dir.file("m.json"), "--count", "10"}).out;
    const std::string large = run_cli({"--seed", "4", "simulate", dir.file("m.json"), "--count", "50"}).out;
    EXPECT_EQ(large.rfind(small, 0), 0u);
    EXPECT_NE(small, run_cli({"--seed", "5", "simulate", dir.file("m.json"), "--count", "10"}).out);
}

TEST(CliFormat, SeventeenDigitsAndInfinities) {
    EXPECT_EQ(cli::format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(cli::format_number(-INFINITY), "-inf");
    double x = 0.0;
    EXPECT_TRUE(cli::parse_number("+1.5e3", x));
    EXPECT_EQ(x, 1500.0);
    EXPECT_FALSE(cli::parse_number("1.5x", x));
    EXPECT_FALSE(cli::parse_number("", x));
}
