#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace cccodes;
using namespace cccodes::cli;

namespace {

struct Common {
    std::string out;
    std::string format = "json";
    bool no_timestamp = false;
};

Residue parse_residue(std::string_view text, const char* what) {
    Residue value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorKind::InvalidArgument, std::string("cannot parse ") + what + " value '" + std::string(text) + "'");
    }
    return value;
}

std::vector<Residue> parse_list(const std::string& text, const char* what) {
    std::vector<Residue> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_residue(std::string_view(text).substr(start, end - start), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// "3" or "2:5".
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        const Residue m = parse_residue(text, "--m");
        return {m, m};
    }
    return {parse_residue(std::string_view(text).substr(0, colon), "--m"),
            parse_residue(std::string_view(text).substr(colon + 1), "--m")};
}

unsigned single_m(const std::string& text) {
    const auto [lo, hi] = parse_range(text);
    if (lo != hi) throw Error(ErrorKind::InvalidArgument, "--m must be a single degree for this command");
    return lo;
}

Residue single_p(const std::string& text) {
    const auto list = parse_list(text, "--p");
    if (list.size() != 1) throw Error(ErrorKind::InvalidArgument, "--p must be a single prime for this command");
    return list.front();
}

std::optional<std::vector<Residue>> parse_modulus(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_list(text, "--modulus");
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw Error(ErrorKind::InvalidArgument, "--format must be json or csv");
}

Construction construction_or_throw(const std::string& text) {
    if (const auto c = parse_construction(text)) return *c;
    throw Error(ErrorKind::InvalidArgument, "unknown construction '" + text + "'");
}

int emit(const CommandResult& r, const Common& common) {
    if (common.out.empty()) {
        std::cout << r.output;
        std::cerr << r.summary;
    } else {
        std::ofstream file(common.out, std::ios::binary);
        if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + common.out + "' for writing");
        file << r.output;
        std::cout << r.summary;
    }
    return r.exit_code;
}

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--out", common.out, "Write the report to this path");
    cmd->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--no-timestamp", common.no_timestamp, "Omit timestamps and timings");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant composition codes from trace codes over odd-characteristic fields"};
    app.require_subcommand(1);

    Common common;
    std::string p_text = "3";
    std::string m_text;
    std::string alpha_text;
    std::string construction_text;
    std::string modulus_text;
    std::uint64_t q_cap = 100000;
    std::size_t pairwise_cap = 5000;
    std::size_t samples = 100;
    bool emit_codewords = false;

    auto* build = app.add_subcommand("build", "Build one construction and report its parameters");
    build->add_option("--p", p_text, "Odd prime characteristic")->required();
    build->add_option("--m", m_text, "Extension degree")->required();
    build->add_option("--alpha", alpha_text, "Trace value for the first construction (default 0)");
    build->add_option("--construction", construction_text, "first, second-S or second-complement")
        ->check(CLI::IsMember({"first", "second-S", "second-complement"}));
    build->add_option("--modulus", modulus_text, "Monic modulus, constant term first, comma separated");
    build->add_option("--pairwise-cap", pairwise_cap, "Largest M checked pairwise");
    build->add_flag("--emit-codewords", emit_codewords, "Include the codewords");
    add_common(build, common);

    auto* sweep = app.add_subcommand("verify-sweep", "Check every prediction over a parameter grid");
    sweep->add_option("--p", p_text, "Comma-separated odd primes");
    sweep->add_option("--m", m_text, "Degree or inclusive range a:b");
    sweep->add_option("--alpha", alpha_text, "'all' or comma-separated residues");
    sweep->add_option("--construction", construction_text, "'all' or comma-separated constructions");
    sweep->add_option("--q-cap", q_cap, "Skip fields larger than this");
    sweep->add_option("--modulus", modulus_text, "Modulus for a single (p, m) sweep");
    sweep->add_option("--pairwise-cap", pairwise_cap, "Largest M checked pairwise");
    sweep->add_option("--samples", samples, "Random quadratic triples per large field");
    add_common(sweep, common);

    auto* gauss = app.add_subcommand("gauss-check", "Compare Gauss and quadratic sums with their closed forms");
    gauss->add_option("--p", p_text, "Odd prime characteristic")->required();
    gauss->add_option("--m", m_text, "Extension degree");
    gauss->add_option("--modulus", modulus_text, "Monic modulus, constant term first");
    gauss->add_option("--samples", samples, "Random quadratic triples when q > 27");
    add_common(gauss, common);

    auto* fibers = app.add_subcommand("fibers", "Tabulate trace and square-trace fiber sizes");
    fibers->add_option("--p", p_text, "Odd prime characteristic")->required();
    fibers->add_option("--m", m_text, "Extension degree");
    fibers->add_option("--modulus", modulus_text, "Monic modulus, constant term first");
    add_common(fibers, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        const Format format = parse_format(common.format);
        const bool timestamp = !common.no_timestamp;
        if (build->parsed()) {
            BuildOptions o;
            o.p = single_p(p_text);
            o.m = single_m(m_text);
            if (!construction_text.empty()) o.construction = construction_or_throw(construction_text);
            if (!alpha_text.empty()) o.alpha = parse_residue(alpha_text, "--alpha");
            o.modulus = parse_modulus(modulus_text);
            o.format = format;
            o.emit_codewords = emit_codewords;
            o.timestamp = timestamp;
            o.pairwise_cap = pairwise_cap;
            return emit(run_build(o), common);
        }
        if (sweep->parsed()) {
            if (format == Format::Csv) throw Error(ErrorKind::InvalidArgument, "verify-sweep only writes JSON");
            SweepSpec s;
            if (sweep->count("--p") > 0) s.p_list = parse_list(p_text, "--p");
            if (!m_text.empty()) std::tie(s.m_min, s.m_max) = parse_range(m_text);
            if (!alpha_text.empty() && alpha_text != "all") s.alphas = parse_list(alpha_text, "--alpha");
            if (!construction_text.empty() && construction_text != "all") {
                s.constructions.clear();
                std::size_t start = 0;
                while (true) {
                    const std::size_t comma = construction_text.find(',', start);
                    s.constructions.push_back(construction_or_throw(construction_text.substr(start, comma - start)));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            s.q_cap = q_cap;
            s.modulus = parse_modulus(modulus_text);
            s.pairwise_cap = pairwise_cap;
            s.quadratic_samples = samples;
            s.timestamp = timestamp;
            return emit(run_verify_sweep(s), common);
        }
        if (gauss->parsed()) {
            if (format == Format::Csv) throw Error(ErrorKind::InvalidArgument, "gauss-check only writes JSON");
            GaussCheckOptions o;
            o.p = single_p(p_text);
            if (!m_text.empty()) o.m = single_m(m_text);
            o.modulus = parse_modulus(modulus_text);
            o.quadratic_samples = samples;
            o.timestamp = timestamp;
            return emit(run_gauss_check(o), common);
        }
        FibersOptions o;
        o.p = single_p(p_text);
        if (!m_text.empty()) o.m = single_m(m_text);
        o.modulus = parse_modulus(modulus_text);
        o.format = format;
        o.timestamp = timestamp;
        return emit(run_fibers(o), common);
    } catch (const Error& e) {
        if (common.format == "json") std::cout << error_json(e).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
