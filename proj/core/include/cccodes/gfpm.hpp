#pragma once

// Arithmetic in F_p and F_{p^m} over a fixed polynomial basis.
//
// A field is described by an immutable FieldParams object that is only ever
// handed out through a shared pointer (see make_field). FieldElement values
// refer back to their field by address, so the FieldParams must outlive every
// element created from it. Elements are dense coefficient vectors in the basis
// 1, t, ..., t^{m-1}, where t is the residue class of x modulo the defining
// polynomial.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cccodes/error.hpp"

namespace cccodes {

using Residue = std::uint32_t;

inline constexpr std::size_t kMaxDegree = 16;
inline constexpr Residue kMaxCharacteristic = Residue{1} << 28;

class FieldParams;
using FieldPtr = std::shared_ptr<const FieldParams>;

bool is_prime(std::uint64_t n) noexcept;

// Exact p^e; throws InvalidArgument when the result exceeds 2^62.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

class FieldElement {
public:
    const FieldParams& field() const noexcept { return *field_; }
    std::span<const Residue> coeffs() const noexcept;
    Residue coeff(std::size_t i) const noexcept { return c_[i]; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool in_prime_field() const noexcept;

    // Position of this element in the canonical enumeration order.
    std::uint64_t index() const noexcept;

    // Lexicographic on the coefficient vector (constant term first). Throws
    // FieldMismatch when the operands live in different fields.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    friend class FieldParams;
    friend FieldElement add(const FieldElement&, const FieldElement&);
    friend FieldElement sub(const FieldElement&, const FieldElement&);
    friend FieldElement neg(const FieldElement&);
    friend FieldElement mul(const FieldElement&, const FieldElement&);
    friend FieldElement scale(const FieldElement&, Residue);

    explicit FieldElement(const FieldParams* field) noexcept : field_(field) {}

    const FieldParams* field_;
    std::array<Residue, kMaxDegree> c_{};
};

class FieldParams {
    struct Token {};

public:
    // Use make_field; the token keeps construction private while still
    // allowing std::make_shared.
    FieldParams(Token, Residue p, unsigned m, std::vector<Residue> modulus);

    FieldParams(const FieldParams&) = delete;
    FieldParams& operator=(const FieldParams&) = delete;

    Residue p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    std::uint64_t q() const noexcept { return q_; }

    // m + 1 coefficients, constant term first, leading coefficient 1.
    std::span<const Residue> modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept;
    FieldElement one() const noexcept;
    // The residue class t of x.
    FieldElement root() const;
    FieldElement from_prime(Residue c) const;
    FieldElement from_coeffs(std::span<const Residue> coeffs) const;
    FieldElement element_at(std::uint64_t index) const;

    // Tr(t^i * t^j) as an m*m row-major table; makes Tr(a*d) a bilinear form
    // in the coordinates of a and d.
    std::span<const Residue> trace_form() const noexcept { return trace_form_; }

    bool same_as(const FieldParams& other) const noexcept;

private:
    friend FieldPtr make_field(Residue, unsigned, std::optional<std::vector<Residue>>);
    friend FieldElement mul(const FieldElement&, const FieldElement&);
    friend bool is_irreducible(Residue, std::span<const Residue>);

    static FieldPtr build_unchecked(Residue p, unsigned m, std::vector<Residue> modulus);

    Residue p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<Residue> modulus_;
    // -modulus[i] mod p, used when folding t^m back into the basis.
    std::vector<Residue> neg_low_;
    std::vector<Residue> trace_form_;
};

// Validates p and the modulus; when the modulus is omitted, picks the
// lexicographically smallest monic irreducible of degree m (constant term
// compared first).
FieldPtr make_field(Residue p, unsigned m, std::optional<std::vector<Residue>> modulus = std::nullopt);

// Monic polynomial irreducibility over F_p, coefficients constant term first.
bool is_irreducible(Residue p, std::span<const Residue> poly);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement scale(const FieldElement& a, Residue c);
FieldElement pow(const FieldElement& a, std::uint64_t e);
FieldElement inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return mul(a, inv(b)); }

// Tr(x) = x + x^p + ... + x^{p^{m-1}}, returned as a prime-field residue.
Residue trace(const FieldElement& x);

// Tr(x) through the precomputed traces of the basis; agrees with trace().
Residue trace_linear(const FieldElement& x) noexcept;

// The quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
int quadratic_character(const FieldElement& x);

// Legendre symbol of a residue modulo an odd prime, in {-1, 0, 1}.
int legendre(std::uint64_t a, Residue p) noexcept;

std::vector<FieldElement> enumerate_field(const FieldParams& field, bool nonzero_only = false);

}  // namespace cccodes
