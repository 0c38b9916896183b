#include "cccodes/report.hpp"

namespace cccodes {

std::string codeword_digits(std::span<const Symbol> word, Residue p) {
    static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string out;
    if (p <= 36) {
        out.reserve(word.size());
        for (Symbol s : word) out.push_back(kDigits[s]);
        return out;
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out.push_back('.');
        out += std::to_string(word[i]);
    }
    return out;
}

Json to_json(const WeightDistribution& wd) {
    Json rows = Json::array();
    for (const auto& [w, a] : wd.pairs) rows.push_back(Json::array({w, a}));
    return rows;
}

std::string to_csv(const WeightDistribution& wd) {
    std::string out = "weight,frequency\n";
    for (const auto& [w, a] : wd.pairs) out += std::to_string(w) + "," + std::to_string(a) + "\n";
    return out;
}

Json to_json(const TraceCode& code, bool emit_codewords) {
    const FieldParams& f = code.field();
    const DefiningSet& ds = code.defining_set();
    Json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["modulus"] = std::vector<Residue>(f.modulus().begin(), f.modulus().end());
    j["kind"] = to_string(ds.kind);
    if (ds.alpha) j["alpha"] = *ds.alpha;
    j["length"] = code.length();
    j["dimension"] = code.dimension();
    j["weight_distribution"] = to_json(weight_distribution(code));
    if (emit_codewords) {
        Json words = Json::array();
        for (std::size_t id = 0; id < code.distinct_count(); ++id) {
            words.push_back(codeword_digits(code.distinct_word(id), f.p()));
        }
        j["codewords"] = std::move(words);
    }
    return j;
}

Json to_json(const LfvcReport& report) {
    Json j;
    j["denominator"] = report.denominator;
    if (report.bound) {
        j["bound"] = {{"numerator", report.bound->numerator}, {"denominator", report.bound->denominator}};
    }
    j["verdict"] = to_string(report.verdict);
    return j;
}

Json to_json(const CccCode& code, bool emit_codewords) {
    const CccParameters predicted = code.construction == Construction::First
                                        ? predicted_ccc_first(code.p, code.m, code.alpha.value_or(0))
                                        : predicted_ccc_second(code.p, code.m, code.construction);
    const LfvcReport lfvc = lfvc_evaluate(code.n, code.M, code.d, code.composition);

    Json j;
    j["construction"] = to_string(code.construction);
    j["p"] = code.p;
    j["m"] = code.m;
    if (code.alpha) j["alpha"] = *code.alpha;
    if (code.tau) j["tau"] = *code.tau;
    j["n"] = code.n;
    j["M"] = code.M;
    j["d"] = code.d;
    j["omega"] = code.composition.omega;
    j["lfvc"] = to_json(lfvc);

    Json checks;
    checks["composition_ok"] = true;
    if (code.pairwise_distance) {
        checks["distance_matches_ambient"] = code.distance_matches_ambient();
    } else {
        checks["distance_matches_ambient"] = nullptr;
    }
    checks["prediction_matches"] = code.parameters() == predicted;
    j["checks"] = std::move(checks);

    j["distance"] = {{"ambient_min_weight", code.ambient_min_distance},
                     {"pairwise", code.pairwise_distance ? Json(*code.pairwise_distance) : Json(nullptr)},
                     {"method", code.pairwise_distance ? "pairwise" : "ambient-shortcut"}};
    j["index_count"] = code.index_count;
    j["predicted"] = {{"n", predicted.n}, {"M", predicted.M}, {"d", predicted.d}, {"omega", predicted.omega.omega}};
    if (emit_codewords) {
        Json words = Json::array();
        for (std::size_t i = 0; i < code.words.size(); ++i) words.push_back(codeword_digits(code.words[i], code.p));
        j["codewords"] = std::move(words);
    }
    return j;
}

}  // namespace cccodes
