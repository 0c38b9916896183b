#include "cccodes/codes.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

namespace cccodes {

namespace {

void require_odd_prime(Residue p) {
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

void require_even_degree(unsigned m) {
    if (m == 0 || m % 2 != 0) {
        throw Error(ErrorKind::OddDegree, "construction needs even m, got " + std::to_string(m));
    }
}

WeightDistribution from_map(const std::map<std::uint64_t, std::uint64_t>& counts) {
    WeightDistribution wd;
    for (const auto& [w, a] : counts) {
        if (a > 0) wd.pairs.emplace_back(w, a);
    }
    return wd;
}

}  // namespace

std::string_view to_string(DefiningSetKind kind) noexcept {
    return kind == DefiningSetKind::DAlpha ? "D-alpha" : "E";
}

std::uint64_t WeightDistribution::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [w, a] : pairs) t += a;
    return t;
}

std::uint64_t WeightDistribution::frequency(std::uint64_t weight) const noexcept {
    for (const auto& [w, a] : pairs) {
        if (w == weight) return a;
    }
    return 0;
}

int tau(Residue p, unsigned m) {
    require_even_degree(m);
    const std::uint64_t h = (p - 1) / 2;
    return ((h * h) * (m / 2)) % 2 == 0 ? 1 : -1;
}

std::int64_t e_set_size(Residue p, unsigned m) {
    const std::int64_t t = tau(p, m);
    return static_cast<std::int64_t>(checked_pow(p, m - 1)) -
           t * (static_cast<std::int64_t>(p) - 1) * static_cast<std::int64_t>(checked_pow(p, m / 2 - 1)) - 1;
}

DefiningSet build_defining_set_D(FieldPtr field, Residue alpha) {
    if (!field) throw Error(ErrorKind::InvalidArgument, "null field");
    if (alpha >= field->p()) throw Error(ErrorKind::InvalidArgument, "alpha must be a residue mod p");
    DefiningSet ds{field, DefiningSetKind::DAlpha, alpha, {}};
    for (std::uint64_t i = 1; i < field->q(); ++i) {
        FieldElement d = field->element_at(i);
        if (trace(d) == alpha) ds.elements.push_back(d);
    }
    if (ds.elements.empty()) {
        throw Error(ErrorKind::DegenerateSet, "D(" + std::to_string(alpha) + ") is empty");
    }
    if (field->m() < 2) {
        throw Error(ErrorKind::UnsupportedDegree, "D(alpha) codes need m >= 2");
    }
    return ds;
}

DefiningSet build_defining_set_E(FieldPtr field) {
    if (!field) throw Error(ErrorKind::InvalidArgument, "null field");
    require_even_degree(field->m());
    DefiningSet ds{field, DefiningSetKind::E, std::nullopt, {}};
    for (std::uint64_t i = 1; i < field->q(); ++i) {
        FieldElement d = field->element_at(i);
        if (trace(d * d) == 0) ds.elements.push_back(d);
    }
    if (ds.elements.empty()) {
        throw Error(ErrorKind::DegenerateSet, "E is empty for p=" + std::to_string(field->p()) +
                                                  ", m=" + std::to_string(field->m()));
    }
    return ds;
}

TraceCode build_trace_code(DefiningSet ds) {
    if (!ds.field) throw Error(ErrorKind::InvalidArgument, "null field");
    if (ds.elements.empty()) throw Error(ErrorKind::DegenerateSet, "empty defining set");
    const FieldParams& f = *ds.field;
    if (f.p() > 255) throw Error(ErrorKind::InvalidArgument, "trace codes are limited to p < 256");
    if (f.q() > std::uint64_t{1} << 31) throw Error(ErrorKind::InvalidArgument, "field too large to enumerate");

    const unsigned m = f.m();
    const Residue p = f.p();
    const std::size_t n = ds.elements.size();
    const auto form = f.trace_form();

    // Tr(a d) = sum_i a_i * u_d[i] with u_d = form * d; store u as m rows of
    // length n so each codeword is a linear combination of rows.
    std::vector<std::uint32_t> rows(std::size_t{m} * n);
    for (std::size_t j = 0; j < n; ++j) {
        const FieldElement& d = ds.elements[j];
        for (unsigned i = 0; i < m; ++i) {
            std::uint64_t acc = 0;
            for (unsigned k = 0; k < m; ++k) acc += std::uint64_t{form[std::size_t{i} * m + k]} * d.coeff(k);
            rows[std::size_t{i} * n + j] = static_cast<std::uint32_t>(acc % p);
        }
    }

    TraceCode code;
    code.n_ = n;
    const std::uint64_t q = f.q();
    code.words_.resize(q * n);
    code.distinct_id_.resize(q);

    std::vector<std::uint32_t> acc(n);
    std::unordered_map<std::string_view, std::uint32_t> seen;
    seen.reserve(q);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        const FieldElement a = f.element_at(idx);
        std::fill(acc.begin(), acc.end(), 0);
        for (unsigned i = 0; i < m; ++i) {
            const std::uint32_t ai = a.coeff(i);
            if (ai == 0) continue;
            const std::uint32_t* row = rows.data() + std::size_t{i} * n;
            for (std::size_t j = 0; j < n; ++j) acc[j] += ai * row[j];
        }
        Symbol* out = code.words_.data() + idx * n;
        for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<Symbol>(acc[j] % p);

        const std::string_view key(reinterpret_cast<const char*>(out), n);
        const auto [it, inserted] = seen.try_emplace(key, static_cast<std::uint32_t>(code.representatives_.size()));
        if (inserted) code.representatives_.push_back(idx);
        code.distinct_id_[idx] = it->second;
    }

    std::uint64_t count = code.representatives_.size();
    unsigned k = 0;
    while (count > 1 && count % p == 0) {
        count /= p;
        ++k;
    }
    if (count != 1) {
        throw Error(ErrorKind::InvalidArgument, "distinct codeword count is not a power of p");
    }
    code.dimension_ = k;
    code.ds_ = std::move(ds);
    return code;
}

std::uint64_t hamming_weight(std::span<const Symbol> word) noexcept {
    return static_cast<std::uint64_t>(std::count_if(word.begin(), word.end(), [](Symbol s) { return s != 0; }));
}

WeightDistribution weight_distribution(const TraceCode& code) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::size_t id = 0; id < code.distinct_count(); ++id) ++counts[hamming_weight(code.distinct_word(id))];
    return from_map(counts);
}

std::uint64_t minimum_distance(const TraceCode& code) {
    std::uint64_t best = 0;
    for (std::size_t id = 0; id < code.distinct_count(); ++id) {
        const std::uint64_t w = hamming_weight(code.distinct_word(id));
        if (w > 0 && (best == 0 || w < best)) best = w;
    }
    if (best == 0) throw Error(ErrorKind::ZeroCode, "code has no nonzero codeword");
    return best;
}

std::vector<std::uint64_t> index_kernel(const TraceCode& code) {
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t idx = 0; idx < code.index_count(); ++idx) {
        if (hamming_weight(code.codeword(idx)) == 0) kernel.push_back(idx);
    }
    return kernel;
}

WeightDistribution predicted_weight_distribution_d_alpha(Residue p, unsigned m, Residue alpha) {
    require_odd_prime(p);
    if (m < 2) throw Error(ErrorKind::UnsupportedDegree, "weight table needs m >= 2");
    if (alpha >= p) throw Error(ErrorKind::InvalidArgument, "alpha must be a residue mod p");
    const std::uint64_t pm2 = checked_pow(p, m - 2);
    const std::uint64_t pm1 = pm2 * p;
    std::map<std::uint64_t, std::uint64_t> t{{0, 1}};
    if (alpha == 0) {
        t[pm2 * (p - 1)] += pm1 - 1;
    } else {
        t[pm1] += p - 1;
        t[pm2 * (p - 1)] += pm1 * p - p;
    }
    return from_map(t);
}

WeightDistribution predicted_weight_distribution_e(Residue p, unsigned m) {
    require_odd_prime(p);
    require_even_degree(m);
    if (e_set_size(p, m) <= 0) {
        throw Error(ErrorKind::DegenerateSet, "E is empty for p=" + std::to_string(p) + ", m=" + std::to_string(m));
    }
    const std::int64_t t = tau(p, m);
    const auto ip = static_cast<std::int64_t>(p);
    const auto pm1 = static_cast<std::int64_t>(checked_pow(p, m - 1));
    const auto pm2 = static_cast<std::int64_t>(checked_pow(p, m - 2));
    const auto ph = static_cast<std::int64_t>(checked_pow(p, m / 2 - 1));
    std::map<std::uint64_t, std::uint64_t> table{{0, 1}};
    table[static_cast<std::uint64_t>((ip - 1) * pm2)] += static_cast<std::uint64_t>(pm1 - t * (ip - 1) * ph - 1);
    table[static_cast<std::uint64_t>((ip - 1) * (pm2 - t * ph))] += static_cast<std::uint64_t>((ip - 1) * (pm1 + t * ph));
    return from_map(table);
}

}  // namespace cccodes
