#pragma once

// JSON and CSV renderings of trace codes and constant composition codes.
// All integers are emitted exactly; the only floats in any report are
// character-sum values and their deviations.

#include <string>

#include <nlohmann/json.hpp>

#include "cccodes/ccc.hpp"
#include "cccodes/codes.hpp"

namespace cccodes {

using Json = nlohmann::ordered_json;

// One character per symbol (0-9, a-z) for p <= 36, dot-separated decimals
// otherwise.
std::string codeword_digits(std::span<const Symbol> word, Residue p);

Json to_json(const WeightDistribution& wd);
std::string to_csv(const WeightDistribution& wd);

// {p, m, modulus, kind, alpha?, length, dimension, weight_distribution,
//  codewords?}; codewords are the distinct words in first-index order.
Json to_json(const TraceCode& code, bool emit_codewords = false);

Json to_json(const LfvcReport& report);

// {construction, p, m, alpha?, tau?, n, M, d, omega, lfvc, checks, ...}.
// The prediction check compares against predicted_ccc_first/second.
Json to_json(const CccCode& code, bool emit_codewords = false);

}  // namespace cccodes
