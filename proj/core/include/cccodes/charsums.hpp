#pragma once

// Additive characters, quadratic Gauss sums, quadratic completion sums and
// trace fiber counts. Every sum is taken by direct summation in the canonical
// field order and paired with its closed form.

#include <complex>
#include <cstdint>
#include <string_view>

#include "cccodes/gfpm.hpp"

namespace cccodes {

using ComplexValue = std::complex<double>;

// Per-component absolute tolerance for evaluated-vs-closed-form comparisons.
inline constexpr double kCharSumTolerance = 1e-9;

struct SumCheck {
    ComplexValue evaluated;
    ComplexValue closed_form;

    // max(|re diff|, |im diff|)
    double deviation() const noexcept;
    bool agrees(double tol = kCharSumTolerance) const noexcept { return deviation() <= tol; }
};

enum class FiberKind { LinearTrace, QuadraticTrace };

std::string_view to_string(FiberKind kind) noexcept;

struct FiberCountReport {
    Residue alpha;
    std::uint64_t count_enumerated;
    std::uint64_t count_predicted;
    FiberKind kind;
};

// sqrt(-1)^k as an exact quarter turn.
ComplexValue quarter_turn(std::int64_t k) noexcept;

// zeta_p^k for k in [0, p).
ComplexValue root_of_unity(Residue k, Residue p) noexcept;

// chi_1(x) = zeta_p^{Tr(x)}.
ComplexValue additive_character(const FieldElement& x);

// chi-bar_1(u) = zeta_p^u on the prime field.
ComplexValue prime_additive_character(Residue u, Residue p) noexcept;

// Sum over F_q of chi_1(c x).
ComplexValue additive_character_sum(const FieldElement& c);

// G(eta, chi_1) over F_{p^m}; throws ClosedFormMismatch on disagreement.
SumCheck gauss_sum_fq(const FieldParams& field);
SumCheck gauss_sum_fq_unchecked(const FieldParams& field);
ComplexValue gauss_sum_fq_closed_form(Residue p, unsigned m);

// G(eta-bar, chi-bar_1) over F_p; throws ClosedFormMismatch on disagreement.
SumCheck gauss_sum_fp(Residue p);
SumCheck gauss_sum_fp_unchecked(Residue p);
ComplexValue gauss_sum_fp_closed_form(Residue p);

// Sum over F_q of chi_1(a2 x^2 + a1 x + a0) against
// chi_1(a0 - a1^2 / (4 a2)) eta(a2) G(eta, chi_1).
SumCheck quadratic_sum(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0);

// Same, but returns both sides without throwing on disagreement; the closed
// form uses the supplied Gauss sum value.
SumCheck quadratic_sum_unchecked(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0,
                                 ComplexValue gauss);

// Exhaustive count of the fiber over alpha, no prediction.
std::uint64_t enumerate_fiber(const FieldParams& field, Residue alpha, FiberKind kind);

// |{x : Tr(x) = alpha}| and |{x : Tr(x^2) = alpha}|, enumerated and predicted.
// Both throw PredictionMismatch when the two counts differ.
FiberCountReport count_trace_fiber(const FieldParams& field, Residue alpha);
FiberCountReport count_trace_square_fiber(const FieldParams& field, Residue alpha);

std::uint64_t predicted_trace_fiber(Residue p, unsigned m);
std::uint64_t predicted_trace_square_fiber(Residue p, unsigned m, Residue alpha);

}  // namespace cccodes
