#include <gtest/gtest.h>

#include "cccodes/report.hpp"

using namespace cccodes;

TEST(Report, CodewordDigits) {
    const std::vector<Symbol> w{0, 1, 2, 10, 35};
    EXPECT_EQ(codeword_digits(w, 36), "012az");
    const std::vector<Symbol> big{0, 40, 36};
    EXPECT_EQ(codeword_digits(big, 41), "0.40.36");
}

TEST(Report, WeightDistributionJsonAndCsv) {
    const WeightDistribution wd{{{0, 1}, {6, 24}, {9, 2}}};
    EXPECT_EQ(to_json(wd).dump(), "[[0,1],[6,24],[9,2]]");
    EXPECT_EQ(to_csv(wd), "weight,frequency\n0,1\n6,24\n9,2\n");
}

TEST(Report, TraceCodeJson) {
    const TraceCode code = build_trace_code(build_defining_set_D(make_field(3, 3), 1));
    const Json j = to_json(code);
    EXPECT_EQ(j["p"], 3);
    EXPECT_EQ(j["m"], 3);
    EXPECT_EQ(j["modulus"], Json::parse("[1,0,2,1]"));
    EXPECT_EQ(j["kind"], "D-alpha");
    EXPECT_EQ(j["alpha"], 1);
    EXPECT_EQ(j["length"], 9);
    EXPECT_EQ(j["dimension"], 3);
    EXPECT_FALSE(j.contains("codewords"));
    const Json with = to_json(code, true);
    ASSERT_EQ(with["codewords"].size(), 27u);
    EXPECT_EQ(with["codewords"][0], "000000000");

    const Json e = to_json(build_trace_code(build_defining_set_E(make_field(3, 2))));
    EXPECT_EQ(e["kind"], "E");
    EXPECT_FALSE(e.contains("alpha"));
}

TEST(Report, CccJson) {
    const CccCode c =
        extract_subcode_first(build_trace_code(build_defining_set_D(make_field(3, 3), 0)));
    const Json j = to_json(c);
    EXPECT_EQ(j["construction"], "first");
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["M"], 8);
    EXPECT_EQ(j["d"], 6);
    EXPECT_EQ(j["omega"], Json::parse("[2,3,3]"));
    EXPECT_EQ(j["lfvc"]["denominator"], 6);
    EXPECT_EQ(j["lfvc"]["verdict"], "optimal");
    EXPECT_EQ(j["checks"]["composition_ok"], true);
    EXPECT_EQ(j["checks"]["distance_matches_ambient"], true);
    EXPECT_EQ(j["checks"]["prediction_matches"], true);
    EXPECT_EQ(j["distance"]["method"], "pairwise");

    const CccCode capped =
        extract_subcode_first(build_trace_code(build_defining_set_D(make_field(3, 3), 1)), {5});
    const Json k = to_json(capped);
    EXPECT_TRUE(k["checks"]["distance_matches_ambient"].is_null());
    EXPECT_EQ(k["distance"]["method"], "ambient-shortcut");
    EXPECT_EQ(k["lfvc"]["verdict"], "bound-inapplicable");
    EXPECT_FALSE(k["lfvc"].contains("bound"));

    const CccCode s = extract_subcode_second(build_trace_code(build_defining_set_E(make_field(3, 2))),
                                             Construction::SecondS);
    EXPECT_EQ(to_json(s)["tau"], -1);
}
