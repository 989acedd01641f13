#pragma once

#include <gmpxx.h>

#include <vector>

#include "core/angle.hpp"
#include "core/bitstring.hpp"
#include "core/cup.hpp"
#include "core/gf2poly.hpp"
#include "core/intpoly.hpp"
#include "core/words.hpp"

namespace qnp::gleason {

// f_c^n(0) as a polynomial in c: Q_1 = c, Q_{k+1} = Q_k^2 + c.
const IntPoly& qn(int n);

// Q_n divided by all lower-index values at divisors of n; cached.
const IntPoly& gleason_poly(int n);

// The same computed natively in F2[c].
const gf2::GF2Poly& gleason_mod2(int n);

// Exact rational bracket lo/2^k .. hi/2^k with opposite signs of G_n.
struct Bracket {
    mpz_class lo;
    mpz_class hi;
    unsigned k = 0;

    long double lo_value() const;
    long double hi_value() const;
    long double midpoint() const;
    std::string lo_str() const;
    std::string hi_str() const;
};

struct HyperbolicCenter {
    int n = 0;
    Bracket bracket;
    long double value = 0;
    std::vector<long double> orbit;  // f_c(0) .. f_c^n(0)
    Itinerary kappa;                 // '*' in the leading slot of kappa_order()
    BitString kneading_word;
    Angle kneading_angle;
    Cup orbit_permutation;
};

// All real roots of G_n ascending, each certified by an exact bracket and
// refined to |hi-lo| <= precision. Fails if the squarefree check or the
// gamma_n root-count certificate cannot be established.
std::vector<HyperbolicCenter> real_roots(int n, double precision = 1e-12);

// f_c(0), ..., f_c^n(0)
std::vector<long double> critical_orbit(long double c, int n);

// Signs of 0, f_c(0), ..., f_c^(n-1)(0); the star sits at the leading slot.
// sign_tolerance guards against undecidable signs near zero.
Itinerary itinerary_of_center(const std::vector<long double>& orbit,
                              long double sign_tolerance = 1e-6L);

// t_1 = 0; t_{i+1} = t_i under '+', flipped under '-'.
BitString kneading_sequence(const Itinerary& kappa);

// Value 0.(t_1 ... t_n) repeating, constrained to [0, 1/2].
Angle kneading_angle(const BitString& t);

struct DoublingClass {
    InversionClass cls;
    words::ClassKind kind;                  // Nbar1 = self-paired cycle
    std::vector<std::vector<Angle>> cycles; // one or two, each ordered by doubling
};

// Orbits of period-n doubling-map cycles under x -> -x, n >= 2; count is
// gamma_n and the attached class realizes the correspondence with Nbar(n).
std::vector<DoublingClass> enumerate_dbar(int n);

// The n-th entry is 1 exactly when G_n is verified squarefree.
bool verify_squarefree(int n);

}  // namespace qnp::gleason
