#include "core/gf2field.hpp"

#include <algorithm>
#include <bit>

#include "core/errors.hpp"

namespace qnp::gf2 {

Field::Field(int n, const GF2Poly& modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > 32) throw UsageError("field degree out of range");
    if (modulus.degree() != n) throw UsageError("modulus degree must equal n");
    if (!is_irreducible(modulus)) throw UsageError("modulus " + modulus.str() + " is reducible");
    modulus_bits_ = modulus.packed();
}

std::uint64_t Field::reduce(std::uint64_t v) const {
    for (int b = 63; b >= n_; --b)
        if (v >> b & 1) v ^= modulus_bits_ << (b - n_);
    return v;
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    // carry-less product fits: both factors have degree < n <= 32
    std::uint64_t prod = 0;
    while (b) {
        int bit = std::countr_zero(b);
        b &= b - 1;
        prod ^= a << bit;
    }
    return reduce(prod);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a = reduce(a);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = square(a);
        e >>= 1;
    }
    return r;
}

GF2Poly Field::minimal_polynomial(std::uint64_t e) const {
    e = reduce(e);
    std::vector<std::uint64_t> orbit;
    std::uint64_t v = e;
    do {
        orbit.push_back(v);
        v = square(v);
    } while (v != e);
    // expand prod (X + c) over the orbit; coefficients must land in F2
    std::vector<std::uint64_t> coeffs{1};
    for (std::uint64_t c : orbit) {
        std::vector<std::uint64_t> next(coeffs.size() + 1, 0);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= mul(coeffs[i], c);
        }
        coeffs = std::move(next);
    }
    GF2Poly out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw ConsistencyError("minimal polynomial has a coefficient outside F2");
        if (coeffs[i]) out.set_coeff(static_cast<int>(i), 1);
    }
    return out;
}

bool frobenius_orbit_independent(const Field& field, std::uint64_t beta) {
    const int n = field.n();
    std::vector<std::uint64_t> rows;
    std::uint64_t v = beta;
    for (int i = 0; i < n; ++i) {
        rows.push_back(v);
        v = field.square(v);
    }
    int rank = 0;
    for (int bit = n - 1; bit >= 0 && rank < n; --bit) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (rows[static_cast<size_t>(r)] >> bit & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && rows[static_cast<size_t>(r)] >> bit & 1)
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank == n;
}

NormalBasis::NormalBasis(const Field& field, std::uint64_t beta_exponent)
    : field_(field), beta_exponent_(beta_exponent) {
    std::uint64_t beta = field_.pow(field_.alpha(), beta_exponent);
    if (!frobenius_orbit_independent(field_, beta))
        throw UsageError("alpha^" + std::to_string(beta_exponent) +
                         " does not generate a normal basis");
    build_orbit(beta);
}

NormalBasis::NormalBasis(const Field& field, std::uint64_t beta_bits, ByElement)
    : field_(field) {
    if (!frobenius_orbit_independent(field_, beta_bits))
        throw UsageError("element does not generate a normal basis");
    build_orbit(beta_bits);
}

void NormalBasis::build_orbit(std::uint64_t beta) {
    std::uint64_t v = beta;
    for (int i = 0; i < field_.n(); ++i) {
        orbit_.push_back(v);
        v = field_.square(v);
    }
}

std::uint64_t NormalBasis::encode(const BitString& s) const {
    const int n = field_.n();
    if (s.size() != n) throw UsageError("string length does not match the field degree");
    std::uint64_t e = 0;
    for (int i = 0; i < n; ++i)
        if (s.bit(i)) e ^= orbit_[static_cast<size_t>(n - 1 - i)];
    return e;
}

NormalBasis find_normal_basis(int n, const GF2Poly& modulus,
                              std::optional<std::uint64_t> exponent_hint) {
    Field field(n, modulus);
    if (exponent_hint) return NormalBasis(field, *exponent_hint);
    const std::uint64_t group_order = (1ull << n) - 1;
    for (std::uint64_t k = 1; k <= group_order; ++k)
        if (frobenius_orbit_independent(field, field.pow(field.alpha(), k)))
            return NormalBasis(field, k);
    // alpha need not generate the multiplicative group, and its cyclic
    // subgroup can miss every normal element; fall back to a sweep over
    // raw coordinate vectors, which the normal basis theorem guarantees
    for (std::uint64_t bits = 1; bits < (1ull << n); ++bits)
        if (frobenius_orbit_independent(field, bits)) return NormalBasis(field, bits, ByElement{});
    throw ConsistencyError("no normal basis found; modulus invalid?");
}

GF2Poly default_modulus(int n) {
    switch (n) {
        case 4: return GF2Poly(0b10011);          // x^4+x+1
        case 5: return GF2Poly(0b100101);         // x^5+x^2+1
        case 6: return GF2Poly(0b1000011);        // x^6+x+1
        default: break;
    }
    if (n < 1 || n > 32) throw UsageError("field degree out of range");
    if (n == 1) return GF2Poly(0b11);
    for (std::uint64_t bits = (1ull << n) | 1; bits < (2ull << n); bits += 2)
        if (is_irreducible(GF2Poly(bits))) return GF2Poly(bits);
    throw ConsistencyError("no irreducible of requested degree");
}

std::optional<std::uint64_t> default_beta_exponent_hint(int n) {
    switch (n) {
        case 4: return 3;
        case 5: return 3;
        case 6: return 5;
        default: return std::nullopt;
    }
}

GF2Poly reutenauer(const Necklace& x, const NormalBasis& basis) {
    const int n = basis.field().n();
    const int d = x.size();
    if (d < 1 || n % d != 0)
        throw UsageError("necklace length " + std::to_string(d) + " does not divide " +
                         std::to_string(n));
    const BitString rep = x.canonical();
    std::uint64_t acc = 0;
    for (int i = 0; i < n / d; ++i) acc = acc << d | rep.packed();
    const BitString whole(acc, n);
    if (whole.packed() == 0 && n > 1)
        throw UsageError("the all-zero necklace of length >= 2 is outside the correspondence");
    // rotation corresponds to Frobenius, so the minimal polynomial degree
    // equals the primitive core length; the zero string (n = 1) maps to x
    return basis.field().minimal_polynomial(basis.encode(whole));
}

}  // namespace qnp::gf2
