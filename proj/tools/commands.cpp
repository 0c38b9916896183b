#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <random>
#include <sstream>

#include "cccodes/charsums.hpp"

namespace cccodes::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Json complex_json(ComplexValue z) { return Json::array({z.real(), z.imag()}); }

Json sum_check_json(const SumCheck& c) {
    return {{"evaluated", complex_json(c.evaluated)},
            {"closed_form", complex_json(c.closed_form)},
            {"deviation", c.deviation()}};
}

Json parameters_json(const CccParameters& p) {
    return {{"n", p.n}, {"M", p.M}, {"d", p.d}, {"omega", p.omega.omega}};
}

std::string omega_text(const CompositionVector& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.omega.size(); ++i) os << (i ? "," : "") << c.omega[i];
    os << ')';
    return os.str();
}

std::string modulus_text(const FieldParams& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
    os << ']';
    return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Records one named check and folds it into the instance verdict.
struct CheckSet {
    Json checks = Json::object();
    bool ok = true;

    void add(const std::string& name, bool pass, Json detail = Json::object()) {
        detail["pass"] = pass;
        checks[name] = std::move(detail);
        ok = ok && pass;
    }
};

std::vector<FieldElement> quadratic_triples(const FieldParams& f, std::size_t samples, bool& exhaustive) {
    std::vector<FieldElement> out;
    exhaustive = f.q() <= 27;
    if (exhaustive) {
        for (std::uint64_t a2 = 1; a2 < f.q(); ++a2) {
            for (std::uint64_t a1 = 0; a1 < f.q(); ++a1) {
                for (std::uint64_t a0 = 0; a0 < f.q(); ++a0) {
                    out.push_back(f.element_at(a2));
                    out.push_back(f.element_at(a1));
                    out.push_back(f.element_at(a0));
                }
            }
        }
        return out;
    }
    std::mt19937_64 rng(0x5eed0000ULL ^ (std::uint64_t{f.p()} << 8) ^ f.m());
    std::uniform_int_distribution<std::uint64_t> any(0, f.q() - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, f.q() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        out.push_back(f.element_at(nonzero(rng)));
        out.push_back(f.element_at(any(rng)));
        out.push_back(f.element_at(any(rng)));
    }
    return out;
}

Json gauss_check_for(const FieldParams& f, std::size_t samples) {
    const SumCheck fq = gauss_sum_fq_unchecked(f);
    const SumCheck fp = gauss_sum_fp_unchecked(f.p());
    bool exhaustive = false;
    const auto triples = quadratic_triples(f, samples, exhaustive);
    double quad_max = 0.0;
    for (std::size_t i = 0; i + 2 < triples.size(); i += 3) {
        const SumCheck c = quadratic_sum_unchecked(triples[i], triples[i + 1], triples[i + 2], fq.closed_form);
        quad_max = std::max(quad_max, c.deviation());
    }
    const double overall = std::max({fq.deviation(), fp.deviation(), quad_max});
    Json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["q"] = f.q();
    j["modulus"] = std::vector<Residue>(f.modulus().begin(), f.modulus().end());
    j["tolerance"] = kCharSumTolerance;
    j["gauss_fq"] = sum_check_json(fq);
    j["gauss_fp"] = sum_check_json(fp);
    j["quadratic_sums"] = {{"mode", exhaustive ? "exhaustive" : "sampled"},
                           {"count", triples.size() / 3},
                           {"max_deviation", quad_max}};
    j["max_deviation"] = overall;
    j["pass"] = overall <= kCharSumTolerance;
    return j;
}

Json fibers_for(const FieldParams& f, bool& ok) {
    ok = true;
    Json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["q"] = f.q();
    for (FiberKind kind : {FiberKind::LinearTrace, FiberKind::QuadraticTrace}) {
        Json rows = Json::array();
        std::uint64_t row_sum = 0;
        for (Residue alpha = 0; alpha < f.p(); ++alpha) {
            const std::uint64_t counted = enumerate_fiber(f, alpha, kind);
            const std::uint64_t predicted = kind == FiberKind::LinearTrace
                                                ? predicted_trace_fiber(f.p(), f.m())
                                                : predicted_trace_square_fiber(f.p(), f.m(), alpha);
            row_sum += counted;
            ok = ok && counted == predicted;
            rows.push_back({{"alpha", alpha}, {"enumerated", counted}, {"predicted", predicted}});
        }
        ok = ok && row_sum == f.q();
        const char* key = kind == FiberKind::LinearTrace ? "linear" : "quadratic";
        j[key] = std::move(rows);
        j["row_sums"][key] = row_sum;
    }
    j["pass"] = ok;
    return j;
}

std::string fibers_csv(const Json& j) {
    std::string out = "kind,alpha,enumerated,predicted\n";
    for (const char* key : {"linear", "quadratic"}) {
        for (const auto& row : j[key]) {
            out += std::string(key) + "," + std::to_string(row["alpha"].get<std::uint64_t>()) + "," +
                   std::to_string(row["enumerated"].get<std::uint64_t>()) + "," +
                   std::to_string(row["predicted"].get<std::uint64_t>()) + "\n";
        }
    }
    return out;
}

// Checks shared by every subcode instance.
void add_subcode_checks(CheckSet& cs, const CccCode& code, const CccParameters& predicted) {
    cs.add("parameters", code.parameters() == predicted,
           {{"enumerated", parameters_json(code.parameters())}, {"predicted", parameters_json(predicted)}});
    cs.add("composition", true, {{"omega", code.composition.omega}, {"words", code.M}});
    if (code.pairwise_distance) {
        cs.add("distance_matches_ambient", code.distance_matches_ambient(),
               {{"pairwise", *code.pairwise_distance}, {"ambient", code.ambient_min_distance}});
    } else {
        cs.checks["distance_matches_ambient"] = {
            {"pass", nullptr}, {"ambient", code.ambient_min_distance}, {"reason", "M exceeds pairwise cap"}};
    }
}

Json instance_header(Residue p, unsigned m, std::optional<Residue> alpha, Construction c) {
    Json j;
    j["p"] = p;
    j["m"] = m;
    if (alpha) j["alpha"] = *alpha;
    j["construction"] = to_string(c);
    return j;
}

Json skipped(Json header, std::string reason) {
    header["status"] = "skipped";
    header["reason"] = std::move(reason);
    return header;
}

void tally(SweepSummary& s, const Json& record) {
    const std::string status = record["status"];
    if (status == "pass") ++s.pass;
    else if (status == "fail") ++s.fail;
    else ++s.skip;
}

Json first_instance(const FieldPtr& field, Residue alpha, const SweepSpec& spec) {
    const Residue p = field->p();
    const unsigned m = field->m();
    Json rec = instance_header(p, m, alpha, Construction::First);
    const auto start = Clock::now();
    CheckSet cs;
    try {
        const TraceCode code = build_trace_code(build_defining_set_D(field, alpha));
        const WeightDistribution census = weight_distribution(code);
        const WeightDistribution table = predicted_weight_distribution_d_alpha(p, m, alpha);
        cs.add("weight_distribution", census == table, {{"enumerated", to_json(census)}, {"predicted", to_json(table)}});
        const unsigned dim = alpha == 0 ? m - 1 : m;
        cs.add("dimension", code.dimension() == dim, {{"enumerated", code.dimension()}, {"predicted", dim}});
        cs.add("length", code.length() == predicted_ccc_first(p, m, alpha).n, {{"enumerated", code.length()}});
        if (alpha == 0) {
            // The index kernel of D(0) is exactly F_p.
            const auto kernel = index_kernel(code);
            bool fp_kernel = kernel.size() == p;
            for (std::uint64_t idx : kernel) fp_kernel = fp_kernel && field->element_at(idx).in_prime_field();
            cs.add("kernel_is_prime_field", fp_kernel, {{"kernel_size", kernel.size()}});
        }

        const CccCode ccc = extract_subcode_first(code, {spec.pairwise_cap});
        add_subcode_checks(cs, ccc, predicted_ccc_first(p, m, alpha));
        const LfvcReport lfvc = lfvc_evaluate(ccc.n, ccc.M, ccc.d, ccc.composition);
        const bool lfvc_ok =
            alpha == 0
                ? lfvc.verdict == LfvcVerdict::Optimal &&
                      static_cast<std::int64_t>(ccc.M) * lfvc.denominator == static_cast<std::int64_t>(ccc.n * ccc.d)
                : lfvc.denominator == 0;
        Json detail = to_json(lfvc);
        detail["expected"] = alpha == 0 ? "optimal" : "denominator == 0";
        cs.add("lfvc", lfvc_ok, std::move(detail));
        rec["status"] = cs.ok ? "pass" : "fail";
    } catch (const Error& e) {
        rec["status"] = "fail";
        rec["error"] = error_json(e)["error"];
    }
    rec["checks"] = std::move(cs.checks);
    if (spec.timestamp) rec["seconds"] = seconds_since(start);
    return rec;
}

std::vector<Json> second_instances(const FieldPtr& field, const SweepSpec& spec, bool want_s, bool want_c) {
    const Residue p = field->p();
    const unsigned m = field->m();
    std::vector<Json> out;
    auto headers = [&] {
        std::vector<std::pair<Construction, Json>> h;
        if (want_s) h.emplace_back(Construction::SecondS, instance_header(p, m, std::nullopt, Construction::SecondS));
        if (want_c) {
            h.emplace_back(Construction::SecondComplement,
                           instance_header(p, m, std::nullopt, Construction::SecondComplement));
        }
        return h;
    }();

    if (m % 2 != 0) {
        for (auto& [c, h] : headers) out.push_back(skipped(h, "odd m"));
        return out;
    }
    if (e_set_size(p, m) <= 0) {
        for (auto& [c, h] : headers) out.push_back(skipped(h, "degenerate E (closed-form length 0)"));
        return out;
    }

    const auto start = Clock::now();
    try {
        DefiningSet ds = build_defining_set_E(field);
        const std::uint64_t zero_fiber = enumerate_fiber(*field, 0, FiberKind::QuadraticTrace);
        const TraceCode code = build_trace_code(std::move(ds));
        const WeightDistribution census = weight_distribution(code);
        const WeightDistribution table = predicted_weight_distribution_e(p, m);
        const CccCode s_code = extract_subcode_second(code, Construction::SecondS, {spec.pairwise_cap});
        const CccCode c_code = extract_subcode_second(code, Construction::SecondComplement, {spec.pairwise_cap});
        const double elapsed = seconds_since(start);

        for (auto& [which, rec] : headers) {
            const CccCode& ccc = which == Construction::SecondS ? s_code : c_code;
            CheckSet cs;
            cs.add("weight_distribution", census == table,
                   {{"enumerated", to_json(census)}, {"predicted", to_json(table)}});
            cs.add("dimension", code.dimension() == m, {{"enumerated", code.dimension()}, {"predicted", m}});
            cs.add("length", static_cast<std::int64_t>(code.length()) == e_set_size(p, m) &&
                                 code.length() + 1 == zero_fiber,
                   {{"enumerated", code.length()}, {"predicted", e_set_size(p, m)}, {"zero_fiber", zero_fiber}});
            add_subcode_checks(cs, ccc, predicted_ccc_second(p, m, which));
            const LfvcReport lfvc = lfvc_evaluate(ccc.n, ccc.M, ccc.d, ccc.composition);
            Json detail = to_json(lfvc);
            detail["expected"] = "denominator <= 0";
            cs.add("lfvc", lfvc.denominator <= 0 && lfvc.verdict == LfvcVerdict::BoundInapplicable, std::move(detail));
            cs.add("index_partition", s_code.index_count + c_code.index_count + 1 == field->q(),
                   {{"S", s_code.index_count}, {"complement", c_code.index_count}, {"q", field->q()}});
            rec["tau"] = tau(p, m);
            rec["status"] = cs.ok ? "pass" : "fail";
            rec["checks"] = std::move(cs.checks);
            if (spec.timestamp) rec["seconds"] = elapsed;
            out.push_back(std::move(rec));
        }
    } catch (const Error& e) {
        for (auto& [c, h] : headers) {
            h["status"] = "fail";
            h["error"] = error_json(e)["error"];
            out.push_back(std::move(h));
        }
    }
    return out;
}

}  // namespace

Json error_json(std::string_view kind, std::string_view message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

Json error_json(const Error& e) { return error_json(to_string(e.kind()), e.detail()); }

int exit_code_for(const Error& e) noexcept {
    return is_verification_failure(e.kind()) ? kExitMismatch : kExitInvalid;
}

CommandResult run_build(const BuildOptions& opts) {
    const FieldPtr field = make_field(opts.p, opts.m, opts.modulus);
    const ExtractOptions extract{opts.pairwise_cap};
    std::optional<TraceCode> code;
    std::optional<CccCode> ccc;
    if (opts.construction == Construction::First) {
        code = build_trace_code(build_defining_set_D(field, opts.alpha.value_or(0)));
        ccc = extract_subcode_first(*code, extract);
    } else {
        if (opts.alpha) throw Error(ErrorKind::InvalidArgument, "--alpha only applies to the first construction");
        code = build_trace_code(build_defining_set_E(field));
        ccc = extract_subcode_second(*code, opts.construction, extract);
    }

    Json j = to_json(*ccc, opts.emit_codewords);
    j["ambient"] = to_json(*code, opts.emit_codewords);
    if (opts.timestamp) j["timestamp"] = utc_timestamp();

    const bool ok = j["checks"]["prediction_matches"].get<bool>() &&
                    (j["checks"]["distance_matches_ambient"].is_null() ||
                     j["checks"]["distance_matches_ambient"].get<bool>());

    CommandResult r;
    r.exit_code = ok ? kExitOk : kExitMismatch;
    r.output = opts.format == Format::Csv ? to_csv(weight_distribution(*code)) : dump(j);

    const LfvcReport lfvc = lfvc_evaluate(ccc->n, ccc->M, ccc->d, ccc->composition);
    std::ostringstream os;
    os << "construction  " << to_string(ccc->construction);
    if (ccc->alpha) os << " (alpha=" << *ccc->alpha << ")";
    if (ccc->tau) os << " (tau=" << *ccc->tau << ")";
    os << "\nfield         F_" << field->q() << " = F_" << field->p() << "^" << field->m() << ", modulus "
       << modulus_text(*field) << "\nambient       [" << code->length() << ", " << code->dimension() << ", "
       << minimum_distance(*code) << "] over F_" << field->p() << "\nn M d         " << ccc->n << " " << ccc->M << " "
       << ccc->d << "\nomega         " << omega_text(ccc->composition) << "\nLFVC          denominator "
       << lfvc.denominator;
    if (lfvc.bound) {
        os << ", bound " << lfvc.bound->numerator;
        if (lfvc.bound->denominator != 1) os << "/" << lfvc.bound->denominator;
    }
    os << ", " << to_string(lfvc.verdict) << "\nchecks        " << (ok ? "all pass" : "MISMATCH") << "\n";
    r.summary = os.str();
    return r;
}

VerificationReport verify_sweep(const SweepSpec& spec) {
    std::vector<Residue> primes = spec.p_list;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (Residue p : primes) {
        if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
        if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (spec.m_min == 0 || spec.m_min > spec.m_max) throw Error(ErrorKind::InvalidArgument, "empty or invalid m range");
    const bool want_first = std::count(spec.constructions.begin(), spec.constructions.end(), Construction::First) > 0;
    const bool want_s = std::count(spec.constructions.begin(), spec.constructions.end(), Construction::SecondS) > 0;
    const bool want_c =
        std::count(spec.constructions.begin(), spec.constructions.end(), Construction::SecondComplement) > 0;

    VerificationReport report;
    Json fields = Json::array();
    Json instances = Json::array();

    for (Residue p : primes) {
        for (unsigned m = spec.m_min; m <= spec.m_max; ++m) {
            std::uint64_t q = 0;
            try {
                q = checked_pow(p, m);
            } catch (const Error&) {
                q = spec.q_cap + 1;
            }
            if (q > spec.q_cap) {
                Json rec{{"p", p}, {"m", m}, {"status", "skipped"}, {"reason", "p^m exceeds q_cap"}};
                tally(report.summary, rec);
                fields.push_back(std::move(rec));
                continue;
            }
            const FieldPtr field = make_field(p, m, primes.size() == 1 && spec.m_min == spec.m_max
                                                        ? spec.modulus
                                                        : std::nullopt);

            {
                const auto start = Clock::now();
                Json rec{{"p", p}, {"m", m}};
                CheckSet cs;
                const Json gauss = gauss_check_for(*field, spec.quadratic_samples);
                cs.add("gauss_sums", gauss["pass"].get<bool>(), gauss);
                bool fibers_ok = false;
                Json fibers = fibers_for(*field, fibers_ok);
                cs.add("fibers", fibers_ok, std::move(fibers));
                rec["status"] = cs.ok ? "pass" : "fail";
                rec["checks"] = std::move(cs.checks);
                if (spec.timestamp) rec["seconds"] = seconds_since(start);
                tally(report.summary, rec);
                fields.push_back(std::move(rec));
            }

            if (want_first) {
                std::vector<Residue> alphas;
                if (spec.alphas) {
                    alphas = *spec.alphas;
                    std::sort(alphas.begin(), alphas.end());
                    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
                } else {
                    for (Residue a = 0; a < p; ++a) alphas.push_back(a);
                }
                for (Residue alpha : alphas) {
                    Json rec;
                    if (alpha >= p) {
                        rec = skipped(instance_header(p, m, alpha, Construction::First), "alpha not in F_p");
                    } else if (m < 2) {
                        rec = skipped(instance_header(p, m, alpha, Construction::First), "m < 2");
                    } else {
                        rec = first_instance(field, alpha, spec);
                    }
                    tally(report.summary, rec);
                    instances.push_back(std::move(rec));
                }
            }
            if (want_s || want_c) {
                for (Json& rec : second_instances(field, spec, want_s, want_c)) {
                    tally(report.summary, rec);
                    instances.push_back(std::move(rec));
                }
            }
        }
    }

    Json& doc = report.document;
    Json constructions = Json::array();
    for (Construction c : {Construction::First, Construction::SecondS, Construction::SecondComplement}) {
        if (std::count(spec.constructions.begin(), spec.constructions.end(), c) > 0) constructions.push_back(to_string(c));
    }
    doc["sweep"] = {{"p_list", primes},
                    {"m_range", {spec.m_min, spec.m_max}},
                    {"q_cap", spec.q_cap},
                    {"constructions", constructions},
                    {"alphas", spec.alphas ? Json(*spec.alphas) : Json("all")},
                    {"pairwise_cap", spec.pairwise_cap}};
    doc["fields"] = std::move(fields);
    doc["instances"] = std::move(instances);
    doc["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skip", report.summary.skip}};
    if (spec.timestamp) doc["timestamp"] = utc_timestamp();
    return report;
}

CommandResult run_verify_sweep(const SweepSpec& spec) {
    const VerificationReport report = verify_sweep(spec);
    CommandResult r;
    r.exit_code = report.ok() ? kExitOk : kExitMismatch;
    r.output = dump(report.document);
    std::ostringstream os;
    for (const auto& rec : report.document["instances"]) {
        os << "p=" << rec["p"] << " m=" << rec["m"] << " " << rec["construction"].get<std::string>();
        if (rec.contains("alpha")) os << " alpha=" << rec["alpha"];
        os << "  " << rec["status"].get<std::string>();
        if (rec.contains("reason")) os << " (" << rec["reason"].get<std::string>() << ")";
        os << "\n";
    }
    os << "pass " << report.summary.pass << ", fail " << report.summary.fail << ", skip " << report.summary.skip
       << "\n";
    r.summary = os.str();
    return r;
}

Json gauss_check(const GaussCheckOptions& opts) {
    const FieldPtr field = make_field(opts.p, opts.m, opts.modulus);
    Json j = gauss_check_for(*field, opts.quadratic_samples);
    if (opts.timestamp) j["timestamp"] = utc_timestamp();
    return j;
}

CommandResult run_gauss_check(const GaussCheckOptions& opts) {
    const Json j = gauss_check(opts);
    CommandResult r;
    r.exit_code = j["pass"].get<bool>() ? kExitOk : kExitMismatch;
    r.output = dump(j);
    std::ostringstream os;
    const auto g = j["gauss_fq"]["evaluated"];
    os << "G(eta, chi_1) over F_" << j["q"] << " = " << g[0].get<double>() << " + " << g[1].get<double>() << "i\n"
       << "max deviation " << j["max_deviation"].get<double>() << " (tolerance " << kCharSumTolerance << ")\n";
    r.summary = os.str();
    return r;
}

CommandResult run_fibers(const FibersOptions& opts) {
    const FieldPtr field = make_field(opts.p, opts.m, opts.modulus);
    bool ok = false;
    Json j = fibers_for(*field, ok);
    if (opts.timestamp) j["timestamp"] = utc_timestamp();
    CommandResult r;
    r.exit_code = ok ? kExitOk : kExitMismatch;
    r.output = opts.format == Format::Csv ? fibers_csv(j) : dump(j);
    std::ostringstream os;
    for (const char* key : {"linear", "quadratic"}) {
        os << key << ":";
        for (const auto& row : j[key]) os << " " << row["enumerated"];
        os << "  (sum " << j["row_sums"][key] << ")\n";
    }
    r.summary = os.str();
    return r;
}

}  // namespace cccodes::cli
