#include "cccodes/ccc.hpp"

#include <numeric>
#include <string>

namespace cccodes {

namespace {

// Collects the distinct words reached from an index set, in order of first
// appearance, checks that they share one composition, and measures distance.
template <typename Pred>
CccCode collect(const TraceCode& code, Construction kind, Pred in_index_set, const ExtractOptions& opts) {
    const FieldParams& f = code.field();
    CccCode out{kind,
                f.p(),
                f.m(),
                code.defining_set().alpha,
                std::nullopt,
                WordList(code.length()),
                code.length(),
                0,
                {},
                0,
                minimum_distance(code),
                std::nullopt,
                0};
    std::vector<bool> taken(code.distinct_count(), false);
    for (std::uint64_t idx = 0; idx < code.index_count(); ++idx) {
        if (!in_index_set(f.element_at(idx))) continue;
        ++out.index_count;
        const std::uint32_t id = code.distinct_id(idx);
        if (taken[id]) continue;
        taken[id] = true;
        out.words.push_back(code.distinct_word(id));
    }
    out.M = out.words.size();
    if (out.M == 0) throw Error(ErrorKind::DegenerateSet, "index set yields no codewords");

    out.composition = composition_vector(out.words[0], f.p());
    for (std::size_t i = 1; i < out.M; ++i) {
        if (composition_vector(out.words[i], f.p()) != out.composition) {
            throw Error(ErrorKind::CompositionViolation, "word " + std::to_string(i) + " of " +
                                                             std::string(to_string(kind)) +
                                                             " has a different composition");
        }
    }

    if (out.M >= 2 && out.M <= opts.pairwise_cap) out.pairwise_distance = pairwise_min_distance(out.words);
    out.d = out.pairwise_distance.value_or(out.ambient_min_distance);
    return out;
}

void require_odd_prime(Residue p) {
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

std::string_view to_string(Construction c) noexcept {
    switch (c) {
        case Construction::First: return "first";
        case Construction::SecondS: return "second-S";
        case Construction::SecondComplement: return "second-complement";
    }
    return "unknown";
}

std::optional<Construction> parse_construction(std::string_view name) noexcept {
    if (name == "first") return Construction::First;
    if (name == "second-S") return Construction::SecondS;
    if (name == "second-complement") return Construction::SecondComplement;
    return std::nullopt;
}

std::string_view to_string(LfvcVerdict v) noexcept {
    switch (v) {
        case LfvcVerdict::Optimal: return "optimal";
        case LfvcVerdict::NotOptimal: return "not-optimal";
        case LfvcVerdict::BoundInapplicable: return "bound-inapplicable";
    }
    return "unknown";
}

std::uint64_t CompositionVector::total() const noexcept {
    return std::accumulate(omega.begin(), omega.end(), std::uint64_t{0});
}

CompositionVector composition_vector(std::span<const Symbol> word, Residue p) {
    CompositionVector c{std::vector<std::uint64_t>(p, 0)};
    for (Symbol s : word) {
        if (s >= p) throw Error(ErrorKind::InvalidArgument, "symbol out of range");
        ++c.omega[s];
    }
    return c;
}

void WordList::push_back(std::span<const Symbol> word) {
    if (word.size() != n_) throw Error(ErrorKind::InvalidArgument, "word length mismatch");
    data_.insert(data_.end(), word.begin(), word.end());
}

std::uint64_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) noexcept {
    // Byte-wide counters over blocks of 255 keep the inner loop vectorizable.
    std::uint64_t total = 0;
    const std::size_t n = a.size();
    const Symbol* pa = a.data();
    const Symbol* pb = b.data();
    for (std::size_t start = 0; start < n; start += 255) {
        const std::size_t end = std::min(n, start + 255);
        std::uint8_t block = 0;
        for (std::size_t i = start; i < end; ++i) block += static_cast<std::uint8_t>(pa[i] != pb[i]);
        total += block;
    }
    return total;
}

std::uint64_t pairwise_min_distance(const WordList& words) {
    const std::size_t count = words.size();
    if (count < 2) throw Error(ErrorKind::InvalidArgument, "need at least two words");
    std::uint64_t best = words.length() + 1;
    for (std::size_t i = 0; i < count; ++i) {
        const auto wi = words[i];
        for (std::size_t j = i + 1; j < count; ++j) {
            const std::uint64_t dist = hamming_distance(wi, words[j]);
            if (dist == 0) {
                throw Error(ErrorKind::DuplicateWords,
                            "words " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
            best = std::min(best, dist);
        }
    }
    return best;
}

CccCode extract_subcode_first(const TraceCode& code, const ExtractOptions& opts) {
    if (code.defining_set().kind != DefiningSetKind::DAlpha) {
        throw Error(ErrorKind::InvalidArgument, "first construction needs a D(alpha) code");
    }
    if (code.field().m() < 2) throw Error(ErrorKind::UnsupportedDegree, "first construction needs m >= 2");
    return collect(code, Construction::First, [](const FieldElement& a) { return !a.in_prime_field(); }, opts);
}

CccCode extract_subcode_second(const TraceCode& code, Construction which, const ExtractOptions& opts) {
    if (which == Construction::First) throw Error(ErrorKind::InvalidArgument, "not a second-construction subcode");
    if (code.defining_set().kind != DefiningSetKind::E) {
        throw Error(ErrorKind::InvalidArgument, "second construction needs the E code");
    }
    const unsigned m = code.field().m();
    if (m % 2 != 0) throw Error(ErrorKind::OddDegree, "second construction needs even m");
    CccCode out = which == Construction::SecondS
                      ? collect(code, which, [](const FieldElement& a) { return trace(a * a) != 0; }, opts)
                      : collect(code, which,
                                [](const FieldElement& a) { return !a.is_zero() && trace(a * a) == 0; }, opts);
    out.tau = tau(code.field().p(), m);
    return out;
}

CccParameters predicted_ccc_first(Residue p, unsigned m, Residue alpha) {
    require_odd_prime(p);
    if (m < 2) throw Error(ErrorKind::UnsupportedDegree, "first construction needs m >= 2");
    if (alpha >= p) throw Error(ErrorKind::InvalidArgument, "alpha must be a residue mod p");
    const std::uint64_t pm2 = checked_pow(p, m - 2);
    const std::uint64_t pm1 = pm2 * p;
    CccParameters r;
    r.d = pm2 * (p - 1);
    r.omega.omega.assign(p, pm2);
    if (alpha == 0) {
        r.n = pm1 - 1;
        r.M = pm1 - 1;
        r.omega.omega[0] = pm2 - 1;
    } else {
        r.n = pm1;
        r.M = pm1 * p - p;
    }
    return r;
}

CccParameters predicted_ccc_second(Residue p, unsigned m, Construction which) {
    require_odd_prime(p);
    if (which == Construction::First) throw Error(ErrorKind::InvalidArgument, "not a second-construction subcode");
    const std::int64_t n = e_set_size(p, m);  // checks m even
    if (n <= 0) {
        throw Error(ErrorKind::DegenerateSet, "E is empty for p=" + std::to_string(p) + ", m=" + std::to_string(m));
    }
    const std::int64_t t = tau(p, m);
    const auto ip = static_cast<std::int64_t>(p);
    const auto pm = static_cast<std::int64_t>(checked_pow(p, m));
    const auto pm1 = static_cast<std::int64_t>(checked_pow(p, m - 1));
    const auto pm2 = static_cast<std::int64_t>(checked_pow(p, m - 2));
    const auto ph = static_cast<std::int64_t>(checked_pow(p, m / 2 - 1));

    CccParameters r;
    r.n = static_cast<std::uint64_t>(n);
    r.d = static_cast<std::uint64_t>(t == -1 ? (ip - 1) * pm2 : (ip - 1) * (pm2 - ph));
    if (which == Construction::SecondS) {
        r.M = static_cast<std::uint64_t>(pm - pm1 + t * (ip - 1) * ph);
        r.omega.omega.assign(p, static_cast<std::uint64_t>(pm2 - t * ph));
        r.omega.omega[0] = static_cast<std::uint64_t>(pm2 - 1);
    } else {
        r.M = static_cast<std::uint64_t>(pm1 - t * (ip - 1) * ph - 1);
        r.omega.omega.assign(p, static_cast<std::uint64_t>(pm2));
        r.omega.omega[0] = static_cast<std::uint64_t>(pm2 - t * (ip - 1) * ph - 1);
    }
    return r;
}

LfvcReport lfvc_evaluate(std::uint64_t n, std::uint64_t M, std::uint64_t d, const CompositionVector& omega) {
    if (n == 0 || M == 0 || d == 0) throw Error(ErrorKind::InvalidArgument, "n, M and d must be positive");
    if (omega.total() != n) {
        throw Error(ErrorKind::CompositionLengthMismatch,
                    "composition sums to " + std::to_string(omega.total()) + ", expected n=" + std::to_string(n));
    }
    const auto sn = static_cast<std::int64_t>(n);
    const auto sd = static_cast<std::int64_t>(d);
    std::int64_t denom = sn * sd - sn * sn;
    for (std::uint64_t w : omega.omega) denom += static_cast<std::int64_t>(w * w);

    LfvcReport r{n, M, d, omega, denom, std::nullopt, LfvcVerdict::BoundInapplicable};
    if (denom > 0) {
        const std::int64_t num = sn * sd;
        const std::int64_t g = std::gcd(num, denom);
        r.bound = Rational{num / g, denom / g};
        r.verdict = static_cast<std::int64_t>(M) * denom == num ? LfvcVerdict::Optimal : LfvcVerdict::NotOptimal;
    }
    return r;
}

}  // namespace cccodes
