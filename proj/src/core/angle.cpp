#include "core/angle.hpp"

#include <numeric>

#include "core/errors.hpp"

namespace qnp {

int Angle::compare_fraction(std::uint64_t p, std::uint64_t q) const {
    // numerator * q vs p * (2^n - 1); n <= 32 keeps this in 128 bits
    unsigned __int128 lhs = static_cast<unsigned __int128>(numerator) * q;
    unsigned __int128 rhs = static_cast<unsigned __int128>(p) * denominator();
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

std::string Angle::str() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator());
}

std::string Angle::str_reduced() const {
    std::uint64_t g = std::gcd(numerator, denominator());
    if (g == 0) g = 1;
    return std::to_string(numerator / g) + "/" + std::to_string(denominator() / g);
}

Angle Angle::parse(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        throw UsageError("angle must be written a/b with b = 2^n-1, e.g. 7/15");
    std::uint64_t num = std::stoull(std::string(text.substr(0, slash)));
    std::uint64_t den = std::stoull(std::string(text.substr(slash + 1)));
    int period = 0;
    while (period <= BitString::kMaxLength && (1ull << period) - 1 < den) ++period;
    if ((1ull << period) - 1 != den)
        throw UsageError("angle denominator must be 2^n-1 for n <= " +
                         std::to_string(BitString::kMaxLength));
    if (num >= den && !(num == 0 && den == 1))
        throw UsageError("angle numerator must lie in [0, 2^n-1)");
    return {num, period};
}

Angle doubling_map(const Angle& a) {
    return {(2 * a.numerator) % a.denominator(), a.period};
}

Angle fold_min(const Angle& a) {
    std::uint64_t other = a.denominator() - a.numerator;
    return {std::min(a.numerator, other % a.denominator()), a.period};
}

Angle fold_max(const Angle& a) {
    std::uint64_t other = (a.denominator() - a.numerator) % a.denominator();
    return {std::max(a.numerator, other), a.period};
}

}  // namespace qnp
