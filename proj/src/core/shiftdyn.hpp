#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/bitstring.hpp"

namespace qnp::shiftdyn {

// One period of an F-periodic ±1 sequence.
struct PmSequence {
    std::vector<std::int8_t> entries;  // each ±1

    int size() const { return static_cast<int>(entries.size()); }
    int signature() const { return entries.back(); }

    bool operator==(const PmSequence&) const = default;

    std::string str() const;
    static PmSequence parse(std::string_view text);
};

// F(s): cyclic left shift, inverted whenever the shifted string starts
// with 0. Output always starts with 1.
BitString twisted_shift(const BitString& s);

// Sign is kept iff F(word) ends in 1.
SignedBitString extended_twisted_shift(const SignedBitString& x);

// The n successive F-iterates of t. Requires t starting with 1 and
// [t] in Nbar2 (all iterates distinct).
std::vector<BitString> f_orbit(const BitString& t);

// The n successive extended iterates of t^-. Requires t starting with 1
// and [t] in Nbar1; the (n/2+1)-th item is t^+.
std::vector<SignedBitString> ftilde_orbit(const BitString& t);

// Cumulative sign word: entry i is (-1)^(s1+...+si).
PmSequence omega(const BitString& s);

// Left shift followed by multiplication with the leading entry, reading
// the input as one period of an element of Per(n).
PmSequence pm_twisted_shift(const PmSequence& e);

}  // namespace qnp::shiftdyn
