#include "cccodes/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace cccodes {

namespace {

std::int64_t sign_pow(std::uint64_t e) noexcept { return (e % 2 == 0) ? 1 : -1; }

// ((p-1)/2)^2, the exponent shared by every closed form below.
std::uint64_t half_order_sq(Residue p) noexcept {
    const std::uint64_t h = (p - 1) / 2;
    return h * h;
}

std::vector<ComplexValue> roots_table(Residue p) {
    std::vector<ComplexValue> roots(p);
    for (Residue k = 0; k < p; ++k) roots[k] = root_of_unity(k, p);
    return roots;
}

void require_match(const SumCheck& check, const std::string& what) {
    if (!check.agrees()) {
        throw Error(ErrorKind::ClosedFormMismatch,
                    what + ": deviation " + std::to_string(check.deviation()) + " exceeds tolerance");
    }
}

FiberCountReport finish(FiberCountReport r) {
    if (r.count_enumerated != r.count_predicted) {
        throw Error(ErrorKind::PredictionMismatch,
                    std::string(to_string(r.kind)) + " fiber alpha=" + std::to_string(r.alpha) + ": enumerated " +
                        std::to_string(r.count_enumerated) + ", predicted " + std::to_string(r.count_predicted));
    }
    return r;
}

}  // namespace

double SumCheck::deviation() const noexcept {
    return std::max(std::abs(evaluated.real() - closed_form.real()),
                    std::abs(evaluated.imag() - closed_form.imag()));
}

std::string_view to_string(FiberKind kind) noexcept {
    return kind == FiberKind::LinearTrace ? "linear-trace" : "quadratic-trace";
}

ComplexValue quarter_turn(std::int64_t k) noexcept {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

ComplexValue root_of_unity(Residue k, Residue p) noexcept {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k % p) / static_cast<double>(p));
}

ComplexValue additive_character(const FieldElement& x) {
    return root_of_unity(trace(x), x.field().p());
}

ComplexValue prime_additive_character(Residue u, Residue p) noexcept { return root_of_unity(u, p); }

ComplexValue additive_character_sum(const FieldElement& c) {
    const FieldParams& f = c.field();
    const auto roots = roots_table(f.p());
    ComplexValue sum{0.0, 0.0};
    for (std::uint64_t i = 0; i < f.q(); ++i) sum += roots[trace(mul(c, f.element_at(i)))];
    return sum;
}

ComplexValue gauss_sum_fq_closed_form(Residue p, unsigned m) {
    const double magnitude = std::sqrt(static_cast<double>(checked_pow(p, m)));
    const auto turns = static_cast<std::int64_t>((half_order_sq(p) % 4) * (m % 4));
    return static_cast<double>(sign_pow(m - 1)) * quarter_turn(turns) * magnitude;
}

ComplexValue gauss_sum_fp_closed_form(Residue p) {
    return quarter_turn(static_cast<std::int64_t>(half_order_sq(p) % 4)) * std::sqrt(static_cast<double>(p));
}

SumCheck gauss_sum_fq(const FieldParams& field) {
    SumCheck check = gauss_sum_fq_unchecked(field);
    require_match(check, "G(eta, chi_1) over F_" + std::to_string(field.q()));
    return check;
}

SumCheck gauss_sum_fq_unchecked(const FieldParams& field) {
    const auto roots = roots_table(field.p());
    ComplexValue sum{0.0, 0.0};
    for (std::uint64_t i = 0; i < field.q(); ++i) {
        const FieldElement x = field.element_at(i);
        const int eta = quadratic_character(x);
        if (eta != 0) sum += static_cast<double>(eta) * roots[trace(x)];
    }
    return {sum, gauss_sum_fq_closed_form(field.p(), field.m())};
}

SumCheck gauss_sum_fp(Residue p) {
    SumCheck check = gauss_sum_fp_unchecked(p);
    require_match(check, "G(eta-bar, chi-bar_1) over F_" + std::to_string(p));
    return check;
}

SumCheck gauss_sum_fp_unchecked(Residue p) {
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    const auto roots = roots_table(p);
    ComplexValue sum{0.0, 0.0};
    for (Residue u = 1; u < p; ++u) sum += static_cast<double>(legendre(u, p)) * roots[u];
    return {sum, gauss_sum_fp_closed_form(p)};
}

SumCheck quadratic_sum_unchecked(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0,
                                 ComplexValue gauss) {
    if (a2.is_zero()) throw Error(ErrorKind::ZeroLeadingCoefficient, "a2 must be nonzero");
    const FieldParams& f = a2.field();
    const auto roots = roots_table(f.p());
    ComplexValue sum{0.0, 0.0};
    for (std::uint64_t i = 0; i < f.q(); ++i) {
        const FieldElement x = f.element_at(i);
        const FieldElement value = a2 * x * x + a1 * x + a0;
        sum += roots[trace_linear(value)];
    }
    const FieldElement shift = a0 - (a1 * a1) / (f.from_prime(4) * a2);
    const ComplexValue closed = additive_character(shift) * static_cast<double>(quadratic_character(a2)) * gauss;
    return {sum, closed};
}

SumCheck quadratic_sum(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0) {
    const FieldParams& f = a2.field();
    SumCheck check = quadratic_sum_unchecked(a2, a1, a0, gauss_sum_fq_closed_form(f.p(), f.m()));
    require_match(check, "quadratic sum over F_" + std::to_string(f.q()));
    return check;
}

std::uint64_t predicted_trace_fiber(Residue p, unsigned m) { return checked_pow(p, m - 1); }

std::uint64_t predicted_trace_square_fiber(Residue p, unsigned m, Residue alpha) {
    alpha %= p;
    const auto base = static_cast<std::int64_t>(checked_pow(p, m - 1));
    const std::uint64_t e = half_order_sq(p);
    const auto ip = static_cast<std::int64_t>(p);
    std::int64_t n;
    if (m % 2 == 1) {
        if (alpha == 0) {
            n = base;
        } else {
            const int eta = legendre(p - alpha, p);
            n = base + eta * sign_pow(e * ((m + 1) / 2)) * static_cast<std::int64_t>(checked_pow(p, (m - 1) / 2));
        }
    } else {
        const std::int64_t tau = sign_pow(e * (m / 2));
        const auto half = static_cast<std::int64_t>(checked_pow(p, (m - 2) / 2));
        n = alpha == 0 ? base - tau * (ip - 1) * half : base + tau * half;
    }
    return static_cast<std::uint64_t>(n);
}

std::uint64_t enumerate_fiber(const FieldParams& field, Residue alpha, FiberKind kind) {
    alpha %= field.p();
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < field.q(); ++i) {
        const FieldElement x = field.element_at(i);
        const Residue t = kind == FiberKind::LinearTrace ? trace(x) : trace(x * x);
        if (t == alpha) ++count;
    }
    return count;
}

FiberCountReport count_trace_fiber(const FieldParams& field, Residue alpha) {
    alpha %= field.p();
    return finish({alpha, enumerate_fiber(field, alpha, FiberKind::LinearTrace),
                   predicted_trace_fiber(field.p(), field.m()), FiberKind::LinearTrace});
}

FiberCountReport count_trace_square_fiber(const FieldParams& field, Residue alpha) {
    alpha %= field.p();
    return finish({alpha, enumerate_fiber(field, alpha, FiberKind::QuadraticTrace),
                   predicted_trace_square_fiber(field.p(), field.m(), alpha), FiberKind::QuadraticTrace});
}

}  // namespace cccodes
