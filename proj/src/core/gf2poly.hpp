#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qnp::gf2 {

// Polynomial over F2, bit i = coefficient of x^i, packed little-endian in
// 64-bit words.
class GF2Poly {
public:
    GF2Poly() = default;
    explicit GF2Poly(std::uint64_t bits);

    static GF2Poly zero() { return GF2Poly(); }
    static GF2Poly one() { return GF2Poly(1); }
    static GF2Poly x() { return GF2Poly(2); }
    static GF2Poly monomial(int degree);
    static GF2Poly parse(std::string_view text);  // "x^4+x+1" or "0x13"

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    int coeff(int i) const;
    void set_coeff(int i, int v);
    std::uint64_t packed() const;  // requires degree < 64

    GF2Poly operator+(const GF2Poly& o) const;
    GF2Poly operator*(const GF2Poly& o) const;
    GF2Poly squared() const;
    GF2Poly shifted(int k) const;  // * x^k

    // quotient/remainder; divisor must be nonzero
    std::pair<GF2Poly, GF2Poly> divmod(const GF2Poly& d) const;
    GF2Poly operator%(const GF2Poly& d) const { return divmod(d).second; }
    GF2Poly operator/(const GF2Poly& d) const { return divmod(d).first; }

    GF2Poly derivative() const;

    bool operator==(const GF2Poly&) const = default;
    // degree first, then coefficient bits high-to-low
    std::strong_ordering operator<=>(const GF2Poly& o) const;

    std::string str(char var = 'x') const;
    std::string hex() const;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

GF2Poly gcd(GF2Poly a, GF2Poly b);

// x^(2^k) mod f starting from base
GF2Poly frobenius_pow(const GF2Poly& base, int k, const GF2Poly& f);

bool is_irreducible(const GF2Poly& f);

// sum of roots nonzero <=> coefficient of x^(deg-1) set
bool is_centered(const GF2Poly& f);

// Irreducible factors with multiplicity, ordered by degree then
// coefficient bits. Product reproduces the input.
std::vector<std::pair<GF2Poly, int>> factor(const GF2Poly& f);

enum class IrreducibleSet { IMinus, ITildePlus };

// IMinus: non-centered irreducible of degree n. ITildePlus: centered of
// degree n plus (even n) non-centered of degree n/2.
std::vector<GF2Poly> enumerate_irreducibles(IrreducibleSet set, int n);

}  // namespace qnp::gf2
