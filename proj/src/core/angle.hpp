#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "core/bitstring.hpp"

namespace qnp {

// Exact rational a / (2^n - 1) in [0, 1); the binary expansion repeats the
// n-bit pattern of a.
struct Angle {
    std::uint64_t numerator = 0;
    int period = 1;

    std::uint64_t denominator() const { return (1ull << period) - 1; }

    BitString digits() const { return BitString(numerator, period); }
    static Angle from_digits(const BitString& t) { return {t.packed(), t.size()}; }

    bool operator==(const Angle&) const = default;

    // exact comparison of a/(2^n-1) with p/q
    int compare_fraction(std::uint64_t p, std::uint64_t q) const;

    std::string str() const;          // unreduced, e.g. "28/63"
    std::string str_reduced() const;  // e.g. "4/9"
    static Angle parse(std::string_view text);
};

Angle doubling_map(const Angle& a);
// min(x, 1-x) and max(x, 1-x); both preserve the period-n denominator
Angle fold_min(const Angle& a);
Angle fold_max(const Angle& a);

}  // namespace qnp
