#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/bitstring.hpp"
#include "core/gf2poly.hpp"

namespace qnp::gf2 {

// F_{2^n} in the power basis of a root alpha of an irreducible modulus.
// Elements are packed coefficient vectors, bit i = coordinate of alpha^i.
class Field {
public:
    Field(int n, const GF2Poly& modulus);

    int n() const { return n_; }
    const GF2Poly& modulus() const { return modulus_; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t square(std::uint64_t a) const { return mul(a, a); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t alpha() const { return n_ == 1 ? reduce(2) : 2; }

    // minimal polynomial over F2 (product over the Frobenius orbit)
    GF2Poly minimal_polynomial(std::uint64_t e) const;

private:
    std::uint64_t reduce(std::uint64_t v) const;

    int n_;
    GF2Poly modulus_;
    std::uint64_t modulus_bits_;
};

// beta with independent Frobenius orbit; strings are read against the
// ordered basis (phi^(n-1)(beta), ..., phi(beta), beta).
struct ByElement {};

class NormalBasis {
public:
    NormalBasis(const Field& field, std::uint64_t beta_exponent);
    NormalBasis(const Field& field, std::uint64_t beta_bits, ByElement);

    const Field& field() const { return field_; }
    std::uint64_t beta() const { return orbit_[0]; }
    std::optional<std::uint64_t> beta_exponent() const { return beta_exponent_; }
    const std::vector<std::uint64_t>& frobenius_orbit() const { return orbit_; }

    std::uint64_t encode(const BitString& s) const;

private:
    void build_orbit(std::uint64_t beta);

    Field field_;
    std::optional<std::uint64_t> beta_exponent_;
    std::vector<std::uint64_t> orbit_;
};

bool frobenius_orbit_independent(const Field& field, std::uint64_t beta);

// beta = alpha^k for the hinted k, else the smallest k >= 1 that works.
NormalBasis find_normal_basis(int n, const GF2Poly& modulus,
                              std::optional<std::uint64_t> exponent_hint = std::nullopt);

// Paper-table defaults for n = 4, 5, 6; otherwise the smallest irreducible
// (coefficient bits high-to-low) and the smallest normal exponent.
GF2Poly default_modulus(int n);
std::optional<std::uint64_t> default_beta_exponent_hint(int n);

// Minimal polynomial of the field element a necklace spells in the normal
// basis. The necklace length must divide n; shorter necklaces are repeated.
GF2Poly reutenauer(const Necklace& x, const NormalBasis& basis);

}  // namespace qnp::gf2
