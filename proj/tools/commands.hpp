#pragma once

// Command implementations behind the `cccodes` executable. Each command
// returns its primary output (JSON or CSV text), a short human-readable
// summary and the process exit code, so they can be driven from tests
// without spawning a process.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cccodes/ccc.hpp"
#include "cccodes/report.hpp"

namespace cccodes::cli {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInvalid = 2 };

enum class Format { Json, Csv };

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;
    std::string summary;
};

struct BuildOptions {
    Residue p = 3;
    unsigned m = 2;
    Construction construction = Construction::First;
    std::optional<Residue> alpha;
    std::optional<std::vector<Residue>> modulus;
    Format format = Format::Json;
    bool emit_codewords = false;
    bool timestamp = true;
    std::size_t pairwise_cap = 5000;
};

CommandResult run_build(const BuildOptions& opts);

struct SweepSpec {
    std::vector<Residue> p_list;
    unsigned m_min = 2;
    unsigned m_max = 2;
    std::uint64_t q_cap = 100000;
    std::vector<Construction> constructions{Construction::First, Construction::SecondS,
                                            Construction::SecondComplement};
    std::optional<std::vector<Residue>> alphas;  // nullopt means every alpha in F_p
    std::optional<std::vector<Residue>> modulus;  // only meaningful for a single (p, m)
    std::size_t pairwise_cap = 5000;
    std::size_t quadratic_samples = 100;
    bool timestamp = true;
};

struct SweepSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
};

struct VerificationReport {
    Json document;
    SweepSummary summary;
    bool ok() const noexcept { return summary.fail == 0; }
};

VerificationReport verify_sweep(const SweepSpec& spec);
CommandResult run_verify_sweep(const SweepSpec& spec);

struct GaussCheckOptions {
    Residue p = 3;
    unsigned m = 1;
    std::optional<std::vector<Residue>> modulus;
    std::size_t quadratic_samples = 100;
    bool timestamp = true;
};

Json gauss_check(const GaussCheckOptions& opts);
CommandResult run_gauss_check(const GaussCheckOptions& opts);

struct FibersOptions {
    Residue p = 3;
    unsigned m = 1;
    std::optional<std::vector<Residue>> modulus;
    Format format = Format::Json;
    bool timestamp = true;
};

CommandResult run_fibers(const FibersOptions& opts);

// {"error": {"kind": ..., "message": ...}}
Json error_json(const Error& e);
Json error_json(std::string_view kind, std::string_view message);

// Maps an error to the documented exit code.
int exit_code_for(const Error& e) noexcept;

}  // namespace cccodes::cli
