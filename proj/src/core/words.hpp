#pragma once

#include <vector>

#include "core/bitstring.hpp"

namespace qnp::words {

enum class ClassKind { Nbar1, Nbar2 };

// Nbar1 iff the class is reflexive (inversion is a rotation). Requires a
// primitive class.
ClassKind classify(const InversionClass& x);

enum class NecklaceSet { NMinus, NPlus, NTildePlus };
enum class ClassSet { Nbar, Nbar1, Nbar2 };

// Complete, duplicate-free, ascending in the canonical representative.
// NTildePlus embeds the odd-weight length-n/2 necklaces as doubled strings.
std::vector<Necklace> enumerate_necklaces(NecklaceSet set, int n);
std::vector<InversionClass> enumerate_classes(ClassSet set, int n);

bool in_n_minus(const Necklace& x);
bool in_n_plus(const Necklace& x);
bool in_n_tilde_plus(const Necklace& x);

}  // namespace qnp::words
