#pragma once

// Constant composition subcodes of the trace codes:
//
//   first construction   C'_alpha = { c(a) : a in F_{p^m} \ F_p }      over D(alpha)
//   second construction  C'_E     = { c(a) : Tr(a^2) != 0 }            over E
//                        and its complement { c(a) : a != 0, Tr(a^2) = 0 }
//
// Parameters are measured by brute force and compared with their closed forms;
// optimality is judged against the LFVC bound
//   M <= n d / (n d - n^2 + sum_beta omega_beta^2)   when the denominator is > 0.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cccodes/codes.hpp"

namespace cccodes {

enum class Construction { First, SecondS, SecondComplement };

std::string_view to_string(Construction c) noexcept;
std::optional<Construction> parse_construction(std::string_view name) noexcept;

// omega[beta] counts occurrences of symbol beta, beta = 0..p-1.
struct CompositionVector {
    std::vector<std::uint64_t> omega;

    std::uint64_t total() const noexcept;
    friend bool operator==(const CompositionVector&, const CompositionVector&) = default;
};

CompositionVector composition_vector(std::span<const Symbol> word, Residue p);

// Equal-length words in one contiguous buffer.
class WordList {
public:
    explicit WordList(std::size_t length) : n_(length) {}

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ == 0 ? 0 : data_.size() / n_; }
    std::span<const Symbol> operator[](std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

    void push_back(std::span<const Symbol> word);

private:
    std::size_t n_;
    std::vector<Symbol> data_;
};

std::uint64_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) noexcept;

// Exact minimum over all unordered pairs. Needs at least two words; throws
// DuplicateWords if two words coincide.
std::uint64_t pairwise_min_distance(const WordList& words);

struct CccParameters {
    std::uint64_t n = 0;
    std::uint64_t M = 0;
    std::uint64_t d = 0;
    CompositionVector omega;

    friend bool operator==(const CccParameters&, const CccParameters&) = default;
};

struct ExtractOptions {
    // Pairwise O(M^2 n) distances are only computed up to this many words.
    std::size_t pairwise_cap = 5000;
};

struct CccCode {
    Construction construction;
    Residue p;
    unsigned m;
    std::optional<Residue> alpha;
    std::optional<int> tau;

    WordList words;
    std::size_t n;
    std::uint64_t M;
    CompositionVector composition;

    // Size of the index set before deduplication; index_count / M is the
    // fan-in of the index map.
    std::uint64_t index_count;
    std::uint64_t ambient_min_distance;
    std::optional<std::uint64_t> pairwise_distance;
    // pairwise_distance when computed, otherwise the ambient minimum weight.
    std::uint64_t d;

    CccParameters parameters() const { return {n, M, d, composition}; }
    bool distance_matches_ambient() const noexcept {
        return pairwise_distance.has_value() && *pairwise_distance == ambient_min_distance;
    }
};

// First construction from a D(alpha) trace code. Throws CompositionViolation
// if some word has a different composition from the rest.
CccCode extract_subcode_first(const TraceCode& code, const ExtractOptions& opts = {});

// Second construction from the E trace code; which is SecondS or
// SecondComplement.
CccCode extract_subcode_second(const TraceCode& code, Construction which, const ExtractOptions& opts = {});

CccParameters predicted_ccc_first(Residue p, unsigned m, Residue alpha);
CccParameters predicted_ccc_second(Residue p, unsigned m, Construction which);

struct Rational {
    std::int64_t numerator;
    std::int64_t denominator;

    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class LfvcVerdict { Optimal, NotOptimal, BoundInapplicable };

std::string_view to_string(LfvcVerdict v) noexcept;

struct LfvcReport {
    std::uint64_t n;
    std::uint64_t M;
    std::uint64_t d;
    CompositionVector omega;
    std::int64_t denominator;
    std::optional<Rational> bound;  // reduced n d / denominator when applicable
    LfvcVerdict verdict;
};

LfvcReport lfvc_evaluate(std::uint64_t n, std::uint64_t M, std::uint64_t d, const CompositionVector& omega);

}  // namespace cccodes
