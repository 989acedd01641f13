#pragma once

#include <vector>

#include "core/bitstring.hpp"
#include "core/cup.hpp"

namespace qnp::bij {

// Partial sums mod 2; a bijection on length-n words.
BitString xi(const BitString& s);
// Consecutive differences; inverse of xi.
BitString xi_inv(const BitString& s);

// <s> in NTilde+(n) -> [xi(s)]; representative-independent.
InversionClass psi_plus(const Necklace& x);
// Inverse of psi_plus: xi_inv of any class member ending in 0.
Necklace theta_plus(const InversionClass& y);

Itinerary itinerary(const Cup& sigma);

// Itinerary with + -> 0, - -> 1 and the '*' chosen for even total weight.
BitString a_of_sigma(const Cup& sigma);

// <A(sigma)>, always in NTilde+(n).
Necklace phi(const Cup& sigma);

// Rank permutation of the twisted-shift orbit of the class's
// lexicographically smallest member starting with 1.
Cup lambda_map(const InversionClass& y);

// Weiss-Rogers maps between odd-weight primitive necklaces and cyclic
// unimodal permutations.
Cup wr_phi(const Necklace& x);
Necklace wr_psi(const Cup& sigma);
// The raw string behind wr_psi ('*' resolved to odd total weight).
BitString wr_psi_string(const Cup& sigma);

// All of CUP(n), ascending by image array.
std::vector<Cup> enumerate_cup(int n);

// True iff the cycle from 1 splits into paired halves (x_i odd, y_i = x_i+1
// or x_i even, y_i = x_i-1); equivalently phi(sigma) is a doubled necklace.
bool is_satellite_cup(const Cup& sigma);

}  // namespace qnp::bij
