#pragma once

// Trace codes C_D = { c(a) = (Tr(a d_1), ..., Tr(a d_n)) : a in F_{p^m} } for
// the defining sets D(alpha) = { d != 0 : Tr(d) = alpha } and
// E = { d != 0 : Tr(d^2) = 0 }, their exact weight census, and the closed-form
// weight tables they are checked against.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cccodes/gfpm.hpp"

namespace cccodes {

using Symbol = std::uint8_t;

enum class DefiningSetKind { DAlpha, E };

std::string_view to_string(DefiningSetKind kind) noexcept;

struct DefiningSet {
    FieldPtr field;
    DefiningSetKind kind;
    std::optional<Residue> alpha;  // only for DAlpha
    std::vector<FieldElement> elements;  // canonical order, nonzero, distinct
};

// Sorted (weight, frequency) pairs with nonzero frequencies; includes (0, 1).
struct WeightDistribution {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

    std::uint64_t total() const noexcept;
    std::uint64_t frequency(std::uint64_t weight) const noexcept;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// tau = (-1)^{((p-1)/2)^2 * m/2}, for even m.
int tau(Residue p, unsigned m);

// p^{m-1} - tau (p-1) p^{m/2-1} - 1, the size of E. May be zero.
std::int64_t e_set_size(Residue p, unsigned m);

DefiningSet build_defining_set_D(FieldPtr field, Residue alpha);
DefiningSet build_defining_set_E(FieldPtr field);

class TraceCode {
public:
    const DefiningSet& defining_set() const noexcept { return ds_; }
    const FieldParams& field() const noexcept { return *ds_.field; }

    std::size_t length() const noexcept { return n_; }
    std::uint64_t index_count() const noexcept { return field().q(); }

    // Codeword indexed by the element with the given canonical index.
    std::span<const Symbol> codeword(std::uint64_t index) const noexcept {
        return {words_.data() + index * n_, n_};
    }
    std::span<const Symbol> codeword(const FieldElement& a) const noexcept { return codeword(a.index()); }

    // Deduplicated view: distinct words are numbered in order of their first
    // index.
    std::size_t distinct_count() const noexcept { return representatives_.size(); }
    std::uint32_t distinct_id(std::uint64_t index) const noexcept { return distinct_id_[index]; }
    std::uint64_t representative(std::size_t id) const noexcept { return representatives_[id]; }
    std::span<const Symbol> distinct_word(std::size_t id) const noexcept { return codeword(representatives_[id]); }

    // log_p of the number of distinct codewords.
    unsigned dimension() const noexcept { return dimension_; }

private:
    friend TraceCode build_trace_code(DefiningSet ds);

    DefiningSet ds_;
    std::size_t n_ = 0;
    std::vector<Symbol> words_;
    std::vector<std::uint32_t> distinct_id_;
    std::vector<std::uint64_t> representatives_;
    unsigned dimension_ = 0;
};

// Materializes c(a) for every a in canonical order. Requires p < 256.
TraceCode build_trace_code(DefiningSet ds);

std::uint64_t hamming_weight(std::span<const Symbol> word) noexcept;

// Census over the distinct codewords.
WeightDistribution weight_distribution(const TraceCode& code);

// Smallest nonzero weight; throws ZeroCode when every codeword is zero.
std::uint64_t minimum_distance(const TraceCode& code);

// Indices a with c(a) = 0.
std::vector<std::uint64_t> index_kernel(const TraceCode& code);

WeightDistribution predicted_weight_distribution_d_alpha(Residue p, unsigned m, Residue alpha);
WeightDistribution predicted_weight_distribution_e(Residue p, unsigned m);

}  // namespace cccodes
