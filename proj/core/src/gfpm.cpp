#include "cccodes/gfpm.hpp"

#include <algorithm>
#include <string>

namespace cccodes {

namespace {

using Poly = std::vector<Residue>;

// mod < 2^32, so products fit in 64 bits.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t mod) noexcept {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (e > 0) {
        if (e & 1) r = r * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return r;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo b over F_p; b must be nonzero after trimming.
Poly poly_mod(Poly a, const Poly& b, Residue p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = c * b[i] % p;
            a[shift + i] = static_cast<Residue>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, Residue p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field() && !a.field().same_as(b.field())) {
        throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
    }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (p != 0 && r > kLimit / p) {
            throw Error(ErrorKind::InvalidArgument, "p^m exceeds 2^62");
        }
        r *= p;
    }
    return r;
}

int legendre(std::uint64_t a, Residue p) noexcept {
    a %= p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// FieldElement

std::span<const Residue> FieldElement::coeffs() const noexcept {
    return {c_.data(), field_->m()};
}

bool FieldElement::is_zero() const noexcept {
    const unsigned m = field_->m();
    return std::all_of(c_.begin(), c_.begin() + m, [](Residue v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
    return c_[0] == 1 && in_prime_field();
}

bool FieldElement::in_prime_field() const noexcept {
    const unsigned m = field_->m();
    return std::all_of(c_.begin() + 1, c_.begin() + m, [](Residue v) { return v == 0; });
}

std::uint64_t FieldElement::index() const noexcept {
    std::uint64_t idx = 0;
    const unsigned m = field_->m();
    for (unsigned i = 0; i < m; ++i) idx = idx * field_->p() + c_[i];
    return idx;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const auto m = a.field().m();
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.begin() + m, b.c_.begin(),
                                                  b.c_.begin() + m);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// FieldParams

FieldParams::FieldParams(Token, Residue p, unsigned m, std::vector<Residue> modulus)
    : p_(p), m_(m), q_(checked_pow(p, m)), modulus_(std::move(modulus)) {
    neg_low_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) neg_low_[i] = (p_ - modulus_[i]) % p_;
}

FieldElement FieldParams::zero() const noexcept { return FieldElement(this); }

FieldElement FieldParams::one() const noexcept {
    FieldElement e(this);
    e.c_[0] = 1;
    return e;
}

FieldElement FieldParams::root() const {
    if (m_ == 1) {
        // t = -f_0 when the modulus is linear.
        return from_prime(neg_low_[0]);
    }
    FieldElement e(this);
    e.c_[1] = 1;
    return e;
}

FieldElement FieldParams::from_prime(Residue c) const {
    FieldElement e(this);
    e.c_[0] = c % p_;
    return e;
}

FieldElement FieldParams::from_coeffs(std::span<const Residue> coeffs) const {
    if (coeffs.size() > m_) {
        throw Error(ErrorKind::InvalidArgument,
                    "expected at most " + std::to_string(m_) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    FieldElement e(this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient out of range [0, p-1]");
        e.c_[i] = coeffs[i];
    }
    return e;
}

FieldElement FieldParams::element_at(std::uint64_t index) const {
    if (index >= q_) throw Error(ErrorKind::InvalidArgument, "element index out of range");
    FieldElement e(this);
    for (unsigned i = m_; i-- > 0;) {
        e.c_[i] = static_cast<Residue>(index % p_);
        index /= p_;
    }
    return e;
}

bool FieldParams::same_as(const FieldParams& other) const noexcept {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

FieldPtr FieldParams::build_unchecked(Residue p, unsigned m, std::vector<Residue> modulus) {
    return std::make_shared<const FieldParams>(Token{}, p, m, std::move(modulus));
}

bool is_irreducible(Residue p, std::span<const Residue> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 1) return true;
    // Ben-Or: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= m/2.
    // Powers of x are taken in F_p[x]/(f), which is a ring for any monic f.
    auto ring = FieldParams::build_unchecked(p, m, f);
    FieldElement x = ring->root();
    FieldElement frob = x;
    for (unsigned i = 1; i <= m / 2; ++i) {
        frob = pow(frob, p);
        FieldElement h = sub(frob, x);
        Poly hp(h.coeffs().begin(), h.coeffs().end());
        Poly g = poly_gcd(f, hp, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldPtr make_field(Residue p, unsigned m, std::optional<std::vector<Residue>> modulus) {
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p >= kMaxCharacteristic) throw Error(ErrorKind::InvalidArgument, "characteristic too large");
    if (m == 0 || m > kMaxDegree) {
        throw Error(ErrorKind::InvalidArgument,
                    "extension degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
    checked_pow(p, m);

    std::vector<Residue> f;
    if (modulus) {
        f = *modulus;
        if (f.size() != m + 1 || f.back() != 1) {
            throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
        }
        for (Residue c : f) {
            if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
        }
        if (!is_irreducible(p, f)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
    } else {
        // Odometer over (c_0, ..., c_{m-1}) with c_{m-1} varying fastest, so
        // candidates come in lexicographic order with c_0 as the primary key.
        std::vector<Residue> low(m, 0);
        for (;;) {
            f.assign(low.begin(), low.end());
            f.push_back(1);
            if (is_irreducible(p, f)) break;
            unsigned i = m;
            while (i > 0) {
                --i;
                if (++low[i] < p) break;
                low[i] = 0;
            }
        }
    }

    auto field = std::make_shared<FieldParams>(FieldParams::Token{}, p, m, std::move(f));
    field->trace_form_.resize(std::size_t{m} * m);
    FieldElement ti = field->one();
    const FieldElement t = field->root();
    for (unsigned i = 0; i < m; ++i) {
        FieldElement tij = ti;
        for (unsigned j = 0; j < m; ++j) {
            field->trace_form_[std::size_t{i} * m + j] = trace(tij);
            tij = mul(tij, t);
        }
        ti = mul(ti, t);
    }
    return field;
}

// ---------------------------------------------------------------------------
// arithmetic

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r(a.field_);
    const Residue p = a.field().p();
    for (unsigned i = 0; i < a.field().m(); ++i) {
        const Residue s = a.c_[i] + b.c_[i];
        r.c_[i] = s >= p ? s - p : s;
    }
    return r;
}

FieldElement neg(const FieldElement& a) {
    FieldElement r(a.field_);
    const Residue p = a.field().p();
    for (unsigned i = 0; i < a.field().m(); ++i) r.c_[i] = a.c_[i] == 0 ? 0 : p - a.c_[i];
    return r;
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return add(a, neg(b));
}

FieldElement scale(const FieldElement& a, Residue c) {
    FieldElement r(a.field_);
    const std::uint64_t p = a.field().p();
    for (unsigned i = 0; i < a.field().m(); ++i) r.c_[i] = static_cast<Residue>(std::uint64_t{a.c_[i]} * (c % p) % p);
    return r;
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const FieldParams& f = a.field();
    const unsigned m = f.m();
    const std::uint64_t p = f.p();
    // p < 2^28, so each product is < 2^56 and at most 2m - 1 < 32 of them
    // land in any slot.
    std::array<std::uint64_t, 2 * kMaxDegree - 1> prod{};
    for (unsigned i = 0; i < m; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) prod[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
    }
    for (unsigned k = 2 * m - 1; k-- > m;) {
        const std::uint64_t c = prod[k] % p;
        if (c == 0) continue;
        const unsigned shift = k - m;
        for (unsigned i = 0; i < m; ++i) prod[shift + i] += c * f.neg_low_[i];
    }
    FieldElement r(a.field_);
    for (unsigned i = 0; i < m; ++i) r.c_[i] = static_cast<Residue>(prod[i] % p);
    return r;
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
    FieldElement result = a.field().one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero has no inverse");
    return pow(a, a.field().q() - 2);
}

Residue trace(const FieldElement& x) {
    const FieldParams& f = x.field();
    FieldElement sum = x;
    FieldElement conj = x;
    for (unsigned i = 1; i < f.m(); ++i) {
        conj = pow(conj, f.p());
        sum = add(sum, conj);
    }
    if (!sum.in_prime_field()) {
        throw Error(ErrorKind::ReducibleModulus, "Frobenius sum left the prime field");
    }
    return sum.coeff(0);
}

Residue trace_linear(const FieldElement& x) noexcept {
    const FieldParams& f = x.field();
    const auto form = f.trace_form();
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < f.m(); ++i) acc += std::uint64_t{x.coeff(i)} * form[i];
    return static_cast<Residue>(acc % f.p());
}

int quadratic_character(const FieldElement& x) {
    if (x.is_zero()) return 0;
    const FieldElement r = pow(x, (x.field().q() - 1) / 2);
    return r.is_one() ? 1 : -1;
}

std::vector<FieldElement> enumerate_field(const FieldParams& field, bool nonzero_only) {
    std::vector<FieldElement> out;
    out.reserve(field.q());
    for (std::uint64_t i = nonzero_only ? 1 : 0; i < field.q(); ++i) out.push_back(field.element_at(i));
    return out;
}

}  // namespace cccodes
