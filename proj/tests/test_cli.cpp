#include <gtest/gtest.h>

#include "commands.hpp"

using namespace cccodes;
using namespace cccodes::cli;

namespace {

Json parse(const CommandResult& r) { return Json::parse(r.output); }

}  // namespace

TEST(Build, FirstConstruction) {
    BuildOptions o;
    o.p = 3;
    o.m = 3;
    o.alpha = 0;
    o.timestamp = false;
    const CommandResult r = run_build(o);
    EXPECT_EQ(r.exit_code, kExitOk);
    const Json j = parse(r);
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["M"], 8);
    EXPECT_EQ(j["d"], 6);
    EXPECT_EQ(j["lfvc"]["verdict"], "optimal");
    EXPECT_EQ(j["ambient"]["weight_distribution"], Json::parse("[[0,1],[6,8]]"));
    EXPECT_FALSE(j.contains("timestamp"));
    EXPECT_NE(r.summary.find("optimal"), std::string::npos);
}

TEST(Build, SecondS) {
    BuildOptions o;
    o.p = 3;
    o.m = 2;
    o.construction = Construction::SecondS;
    o.timestamp = false;
    const Json j = parse(run_build(o));
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["M"], 4);
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(j["lfvc"]["verdict"], "bound-inapplicable");
}

TEST(Build, CsvAndCodewords) {
    BuildOptions o;
    o.p = 3;
    o.m = 3;
    o.alpha = 1;
    o.format = Format::Csv;
    EXPECT_EQ(run_build(o).output, "weight,frequency\n0,1\n6,24\n9,2\n");
    o.format = Format::Json;
    o.emit_codewords = true;
    o.timestamp = false;
    const Json j = parse(run_build(o));
    EXPECT_EQ(j["codewords"].size(), 24u);
    EXPECT_EQ(j["ambient"]["codewords"].size(), 27u);
}

TEST(Build, Errors) {
    BuildOptions o;
    o.p = 2;
    o.m = 3;
    try {
        run_build(o);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EvenCharacteristic);
        EXPECT_EQ(exit_code_for(e), kExitInvalid);
        const Json j = error_json(e);
        EXPECT_EQ(j["error"]["kind"], "EvenCharacteristic");
        EXPECT_EQ(j["error"]["message"], "characteristic 2 is not supported");
    }
    o.p = 5;
    o.m = 2;
    o.construction = Construction::SecondS;
    EXPECT_THROW(run_build(o), Error);
    EXPECT_EQ(exit_code_for(Error(ErrorKind::PredictionMismatch, "x")), kExitMismatch);
}

TEST(Build, DeterministicWithoutTimestamp) {
    BuildOptions o;
    o.p = 5;
    o.m = 3;
    o.alpha = 2;
    o.timestamp = false;
    o.emit_codewords = true;
    EXPECT_EQ(run_build(o).output, run_build(o).output);
    o.timestamp = true;
    EXPECT_TRUE(parse(run_build(o)).contains("timestamp"));
}

TEST(Sweep, EmptySpecSucceeds) {
    SweepSpec s;
    const VerificationReport r = verify_sweep(s);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.summary.pass + r.summary.fail + r.summary.skip, 0u);
    EXPECT_TRUE(r.document["instances"].empty());
    EXPECT_EQ(run_verify_sweep(s).exit_code, kExitOk);
}

TEST(Sweep, DegenerateSecondConstructionIsSkipped) {
    SweepSpec s;
    s.p_list = {5};
    s.m_min = s.m_max = 2;
    s.constructions = {Construction::SecondS};
    s.timestamp = false;
    const VerificationReport r = verify_sweep(s);
    ASSERT_EQ(r.document["instances"].size(), 1u);
    EXPECT_EQ(r.document["instances"][0]["status"], "skipped");
    EXPECT_TRUE(r.ok());
}

TEST(Sweep, CapSkipsLargeFieldsVisibly) {
    SweepSpec s;
    s.p_list = {3};
    s.m_min = 2;
    s.m_max = 4;
    s.q_cap = 30;
    s.timestamp = false;
    const VerificationReport r = verify_sweep(s);
    const Json& fields = r.document["fields"];
    ASSERT_EQ(fields.size(), 3u);
    EXPECT_EQ(fields[2]["status"], "skipped");
    EXPECT_EQ(fields[2]["m"], 4);
    EXPECT_TRUE(r.ok());
}

TEST(Sweep, SmallGridPassesAndIsDeterministic) {
    SweepSpec s;
    s.p_list = {5, 3, 3};
    s.m_min = 2;
    s.m_max = 3;
    s.timestamp = false;
    const VerificationReport a = verify_sweep(s);
    EXPECT_TRUE(a.ok()) << a.document.dump(2);
    EXPECT_EQ(a.document["sweep"]["p_list"], Json::parse("[3,5]"));
    EXPECT_EQ(a.document.dump(), verify_sweep(s).document.dump());
    for (const auto& rec : a.document["instances"]) {
        EXPECT_FALSE(rec.contains("seconds"));
        if (rec["construction"] == "first") {
            EXPECT_EQ(rec["status"], "pass");
        }
    }
}

TEST(Sweep, ExplicitAlphasAndInvalidPrimes) {
    SweepSpec s;
    s.p_list = {3};
    s.m_min = s.m_max = 3;
    s.constructions = {Construction::First};
    s.alphas = std::vector<Residue>{2, 0};
    s.timestamp = false;
    const Json doc = verify_sweep(s).document;
    ASSERT_EQ(doc["instances"].size(), 2u);
    EXPECT_EQ(doc["instances"][0]["alpha"], 0);
    EXPECT_EQ(doc["instances"][1]["alpha"], 2);
    s.p_list = {9};
    EXPECT_THROW(verify_sweep(s), Error);
}

TEST(GaussCheck, Examples) {
    GaussCheckOptions o;
    o.p = 3;
    o.m = 2;
    o.timestamp = false;
    const Json j = gauss_check(o);
    EXPECT_NEAR(j["gauss_fq"]["evaluated"][0].get<double>(), 3.0, 1e-9);
    EXPECT_LT(j["max_deviation"].get<double>(), 1e-9);
    EXPECT_EQ(j["quadratic_sums"]["mode"], "exhaustive");
    o.p = 3;
    o.m = 4;
    const CommandResult r = run_gauss_check(o);
    EXPECT_EQ(r.exit_code, kExitOk);
    EXPECT_NEAR(parse(r)["gauss_fq"]["closed_form"][0].get<double>(), -9.0, 1e-9);
    EXPECT_EQ(parse(r)["quadratic_sums"]["count"], 100);
    o.p = 7;
    o.m = 1;
    EXPECT_EQ(run_gauss_check(o).exit_code, kExitOk);
}

TEST(Fibers, Examples) {
    FibersOptions o;
    o.p = 3;
    o.m = 2;
    o.timestamp = false;
    const CommandResult r = run_fibers(o);
    EXPECT_EQ(r.exit_code, kExitOk);
    const Json j = parse(r);
    EXPECT_EQ(j["quadratic"][0]["enumerated"], 5);
    EXPECT_EQ(j["quadratic"][1]["enumerated"], 2);
    EXPECT_EQ(j["quadratic"][2]["enumerated"], 2);
    EXPECT_EQ(j["row_sums"]["quadratic"], 9);
    o.m = 3;
    o.format = Format::Csv;
    const std::string csv = run_fibers(o).output;
    EXPECT_NE(csv.find("linear,0,9,9\nlinear,1,9,9\nlinear,2,9,9\n"), std::string::npos);
}
