// Acceptance run over p in {3, 5, 7}, 2 <= m <= 5, p^m <= 1e5.
// Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cccodes/ccc.hpp"
#include "cccodes/charsums.hpp"
#include "cccodes/codes.hpp"

using namespace cccodes;

namespace {

using Clock = std::chrono::steady_clock;

constexpr Residue kPrimes[] = {3, 5, 7};
constexpr unsigned kLowestDegree = 2;
constexpr unsigned kHighestDegree = 5;
constexpr std::uint64_t kQCap = 100000;
constexpr double kBudgetSeconds = 30.0;
constexpr std::uint64_t kExhaustiveLimit = 243;
constexpr std::size_t kSamples = 1000;
constexpr std::size_t kQuadraticSamples = 100;

struct Criterion {
    explicit Criterion(std::string t) : title(std::move(t)) {}

    std::string title;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;

    void fail(std::string msg) { failures.push_back(std::move(msg)); }
    bool ok() const { return failures.empty(); }
};

std::string tag(Residue p, unsigned m) { return "p=" + std::to_string(p) + " m=" + std::to_string(m); }

std::string tag(Residue p, unsigned m, Residue alpha) { return tag(p, m) + " alpha=" + std::to_string(alpha); }

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string word_key(std::span<const Symbol> w) { return {reinterpret_cast<const char*>(w.data()), w.size()}; }

bool duplicate_free(const CccCode& c) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < c.M; ++i) {
        if (!seen.insert(word_key(c.words[i])).second) return false;
    }
    return true;
}

std::string params_text(const CccParameters& r) {
    std::ostringstream os;
    os << "(n=" << r.n << ", M=" << r.M << ", d=" << r.d << ", omega=[";
    for (std::size_t i = 0; i < r.omega.omega.size(); ++i) os << (i ? "," : "") << r.omega.omega[i];
    os << "])";
    return os.str();
}

// Index pairs or triples: every combination for small fields, seeded samples otherwise.
template <std::size_t K>
std::vector<std::array<std::uint64_t, K>> tuples(std::uint64_t q, std::uint64_t seed) {
    std::vector<std::array<std::uint64_t, K>> out;
    if (q <= kExhaustiveLimit) {
        std::array<std::uint64_t, K> t{};
        while (true) {
            out.push_back(t);
            std::size_t k = 0;
            while (k < K && ++t[k] == q) t[k++] = 0;
            if (k == K) break;
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
    for (std::size_t i = 0; i < kSamples; ++i) {
        std::array<std::uint64_t, K> t{};
        for (auto& v : t) v = pick(rng);
        out.push_back(t);
    }
    return out;
}

void check_first(const FieldPtr& field, Residue alpha, Criterion& c1, Criterion& c2, Criterion& c6) {
    const Residue p = field->p();
    const unsigned m = field->m();
    const std::string where = tag(p, m, alpha);

    auto t = Clock::now();
    const TraceCode code = build_trace_code(build_defining_set_D(field, alpha));
    const WeightDistribution census = weight_distribution(code);
    ++c1.cases;
    if (census != predicted_weight_distribution_d_alpha(p, m, alpha)) c1.fail(where + ": weight distribution differs");
    if (code.dimension() != (alpha == 0 ? m - 1 : m)) c1.fail(where + ": dimension " + std::to_string(code.dimension()));
    c1.seconds += since(t);

    t = Clock::now();
    ++c2.cases;
    try {
        const CccCode sub = extract_subcode_first(code);
        const CccParameters predicted = predicted_ccc_first(p, m, alpha);
        if (sub.parameters() != predicted) {
            c2.fail(where + ": got " + params_text(sub.parameters()) + ", predicted " + params_text(predicted));
        }
        for (std::size_t i = 0; i < sub.M; ++i) {
            if (composition_vector(sub.words[i], p) != predicted.omega) {
                c2.fail(where + ": word " + std::to_string(i) + " has another composition");
                break;
            }
        }
        if (sub.pairwise_distance && *sub.pairwise_distance != predicted.d) c2.fail(where + ": pairwise distance");
        const LfvcReport lfvc = lfvc_evaluate(sub.n, sub.M, sub.d, sub.composition);
        if (alpha == 0) {
            if (lfvc.verdict != LfvcVerdict::Optimal ||
                static_cast<std::int64_t>(sub.M) * lfvc.denominator != static_cast<std::int64_t>(sub.n * sub.d)) {
                c2.fail(where + ": not optimal, denominator " + std::to_string(lfvc.denominator));
            }
        } else if (lfvc.denominator != 0) {
            c2.fail(where + ": denominator " + std::to_string(lfvc.denominator) + " != 0");
        }
        ++c6.cases;
        if (!duplicate_free(sub)) c6.fail(where + ": first subcode has repeated words");
    } catch (const Error& e) {
        c2.fail(where + ": " + e.what());
    }
    c2.seconds += since(t);
}

void check_second(const FieldPtr& field, Criterion& c3, Criterion& c6) {
    const Residue p = field->p();
    const unsigned m = field->m();
    const std::string where = tag(p, m);
    if (e_set_size(p, m) <= 0) return;

    const auto t = Clock::now();
    try {
        const TraceCode code = build_trace_code(build_defining_set_E(field));
        ++c3.cases;
        if (weight_distribution(code) != predicted_weight_distribution_e(p, m)) {
            c3.fail(where + ": two-weight census differs");
        }
        const ExtractOptions all_pairs{std::numeric_limits<std::size_t>::max()};
        std::uint64_t index_total = 1;
        for (Construction which : {Construction::SecondS, Construction::SecondComplement}) {
            const std::string w = where + " " + std::string(to_string(which));
            ++c3.cases;
            const CccCode sub = extract_subcode_second(code, which, all_pairs);
            index_total += sub.index_count;
            const CccParameters predicted = predicted_ccc_second(p, m, which);
            if (sub.parameters() != predicted) {
                c3.fail(w + ": got " + params_text(sub.parameters()) + ", predicted " + params_text(predicted));
            }
            if (!sub.pairwise_distance || *sub.pairwise_distance != sub.ambient_min_distance) {
                c3.fail(w + ": pairwise distance differs from ambient minimum weight");
            }
            const LfvcReport lfvc = lfvc_evaluate(sub.n, sub.M, sub.d, sub.composition);
            if (lfvc.denominator > 0) {
                c3.fail(w + ": LFVC denominator " + std::to_string(lfvc.denominator) + " > 0 (bound " +
                        std::to_string(lfvc.bound->numerator) + "/" + std::to_string(lfvc.bound->denominator) +
                        ", M=" + std::to_string(sub.M) + ", " + std::string(to_string(lfvc.verdict)) + ")");
            }
            ++c6.cases;
            if (!duplicate_free(sub)) c6.fail(w + ": repeated words");
        }
        if (index_total != field->q()) c3.fail(where + ": index sets do not partition the field");
    } catch (const Error& e) {
        c3.fail(where + ": " + e.what());
    }
    c3.seconds += since(t);
}

void check_sums(const FieldPtr& field, Criterion& c4) {
    const auto t = Clock::now();
    const Residue p = field->p();
    const unsigned m = field->m();
    const std::string where = tag(p, m);
    ++c4.cases;
    const SumCheck fq = gauss_sum_fq_unchecked(*field);
    if (!fq.agrees()) c4.fail(where + ": Gauss sum over the extension, deviation " + std::to_string(fq.deviation()));
    const SumCheck fp = gauss_sum_fp_unchecked(p);
    if (!fp.agrees()) c4.fail(where + ": Gauss sum over the prime field");

    const std::uint64_t q = field->q();
    std::vector<std::array<std::uint64_t, 3>> triples;
    if (q <= 27) {
        triples = tuples<3>(q, 0);
    } else {
        std::mt19937_64 rng(0xACCE97ULL * p + m);
        std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
        for (std::size_t i = 0; i < kQuadraticSamples; ++i) triples.push_back({pick(rng), pick(rng), pick(rng)});
    }
    double worst = 0.0;
    std::size_t used = 0;
    for (auto [a2, a1, a0] : triples) {
        if (a2 == 0) {
            if (q <= 27) continue;
            a2 = 1;
        }
        ++used;
        const SumCheck s = quadratic_sum_unchecked(field->element_at(a2), field->element_at(a1), field->element_at(a0),
                                                   fq.closed_form);
        worst = std::max(worst, s.deviation());
    }
    if (worst > kCharSumTolerance) c4.fail(where + ": quadratic sum deviation " + std::to_string(worst));
    if (q > 27 && used < kQuadraticSamples) c4.fail(where + ": too few quadratic samples");
    c4.cases += used;
    c4.seconds += since(t);
}

void check_fibers(const FieldPtr& field, Criterion& c5) {
    const auto t = Clock::now();
    const Residue p = field->p();
    const unsigned m = field->m();
    std::uint64_t lin = 0, quad = 0;
    for (Residue a = 0; a < p; ++a) {
        c5.cases += 2;
        const std::uint64_t nl = enumerate_fiber(*field, a, FiberKind::LinearTrace);
        const std::uint64_t nq = enumerate_fiber(*field, a, FiberKind::QuadraticTrace);
        if (nl != predicted_trace_fiber(p, m)) c5.fail(tag(p, m, a) + ": trace fiber " + std::to_string(nl));
        if (nq != predicted_trace_square_fiber(p, m, a)) {
            c5.fail(tag(p, m, a) + ": square-trace fiber " + std::to_string(nq));
        }
        lin += nl;
        quad += nq;
    }
    if (lin != field->q() || quad != field->q()) c5.fail(tag(p, m) + ": fibers do not sum to q");
    c5.seconds += since(t);
}

void check_properties(const FieldPtr& field, Criterion& c6) {
    const auto t = Clock::now();
    const FieldParams& f = *field;
    const Residue p = f.p();
    const std::string where = tag(p, f.m());
    const std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t{p} << 8) ^ f.m();

    std::size_t bad = 0;
    for (const auto& [i, j, k] : tuples<3>(f.q(), seed)) {
        const FieldElement a = f.element_at(i), b = f.element_at(j), c = f.element_at(k);
        ++c6.cases;
        const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                        a * b == b * a && a + b == b + a && a + (-a) == f.zero() && a * f.one() == a;
        bad += !ok;
    }
    if (bad) c6.fail(where + ": " + std::to_string(bad) + " field-axiom violations");

    bad = 0;
    for (const auto& [i, j] : tuples<2>(f.q(), seed + 1)) {
        const FieldElement a = f.element_at(i), b = f.element_at(j);
        c6.cases += 3;
        if (trace(pow(a, p)) != trace(a)) ++bad;
        if (j == 0 && !a.is_zero() && !(a * inv(a)).is_one()) ++bad;
        if (trace(a + b) != (trace(a) + trace(b)) % p) ++bad;
        const Residue c = static_cast<Residue>(j % p);
        if (trace(scale(a, c)) != (c * trace(a)) % p) ++bad;
        if (quadratic_character(a * b) != quadratic_character(a) * quadratic_character(b)) ++bad;
    }
    if (bad) c6.fail(where + ": " + std::to_string(bad) + " inverse, trace or multiplicativity violations");

    // Orthogonality of the canonical additive character over every (or a sample of) c.
    std::vector<ComplexValue> roots(p);
    for (Residue k = 0; k < p; ++k) roots[k] = root_of_unity(k, p);
    std::vector<std::uint64_t> cs;
    if (f.q() <= kExhaustiveLimit) {
        for (std::uint64_t c = 0; c < f.q(); ++c) cs.push_back(c);
    } else {
        std::mt19937_64 rng(seed + 2);
        std::uniform_int_distribution<std::uint64_t> pick(1, f.q() - 1);
        cs.push_back(0);
        for (std::size_t i = 0; i < kSamples; ++i) cs.push_back(pick(rng));
    }
    const auto elements = enumerate_field(f);
    bad = 0;
    for (std::uint64_t ci : cs) {
        const FieldElement c = f.element_at(ci);
        ComplexValue s{0, 0};
        for (const auto& x : elements) s += roots[trace_linear(c * x)];
        const ComplexValue expected = ci == 0 ? ComplexValue(static_cast<double>(f.q()), 0) : ComplexValue(0, 0);
        ++c6.cases;
        if (std::abs(s - expected) > 1e-6) ++bad;
    }
    if (bad) c6.fail(where + ": " + std::to_string(bad) + " orthogonality violations");
    c6.seconds += since(t);
}

void report(int index, const Criterion& c, const std::string& extra = "") {
    std::printf("%s criterion %d: %s [%zu cases, %.2f s%s]\n", c.ok() ? "PASS" : "FAIL", index, c.title.c_str(),
                c.cases, c.seconds, extra.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
}

}  // namespace

int main() {
    Criterion c1{"first-family weight distributions equal the closed-form tables"};
    Criterion c2{"first-family subcodes: parameters, per-word composition, LFVC classification"};
    Criterion c3{"two-weight code census, both second-family subcodes, pairwise distance, LFVC denominator <= 0"};
    Criterion c4{"Gauss sums and quadratic sums agree with closed forms within 1e-9"};
    Criterion c5{"trace and square-trace fiber counts equal predictions and partition the field"};
    Criterion c6{"field axioms, trace invariance and linearity, orthogonality, multiplicativity, distinct words"};

    for (Residue p : kPrimes) {
        for (unsigned m = kLowestDegree; m <= kHighestDegree; ++m) {
            if (checked_pow(p, m) > kQCap) continue;
            const FieldPtr field = make_field(p, m);
            for (Residue alpha = 0; alpha < p; ++alpha) check_first(field, alpha, c1, c2, c6);
            if (m % 2 == 0) check_second(field, c3, c6);
            check_sums(field, c4);
            check_fibers(field, c5);
            check_properties(field, c6);
        }
    }

    if (c1.seconds >= kBudgetSeconds) c1.fail("runtime " + std::to_string(c1.seconds) + " s exceeds the budget");
    report(1, c1, ", budget 30 s");
    report(2, c2);
    report(3, c3);
    report(4, c4);
    report(5, c5);
    report(6, c6);

    const bool all = c1.ok() && c2.ok() && c3.ok() && c4.ok() && c5.ok() && c6.ok();
    return all ? 0 : 1;
}
