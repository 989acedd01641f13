#include "core/words.hpp"

#include "core/errors.hpp"

namespace qnp::words {

ClassKind classify(const InversionClass& x) {
    if (!x.primitive())
        throw UsageError("classify requires a primitive inversion class, got " + x.str());
    return is_reflexive(x.canonical()) ? ClassKind::Nbar1 : ClassKind::Nbar2;
}

bool in_n_minus(const Necklace& x) {
    return x.primitive() && x.weight() % 2 == 1;
}

bool in_n_plus(const Necklace& x) {
    return x.primitive() && x.weight() % 2 == 0;
}

bool in_n_tilde_plus(const Necklace& x) {
    if (in_n_plus(x)) return true;
    const BitString& s = x.canonical();
    return s.is_doubled() && in_n_minus(Necklace(s.first_half()));
}

std::vector<Necklace> enumerate_necklaces(NecklaceSet set, int n) {
    if (n < 1 || n > BitString::kMaxLength) throw UsageError("n out of range");
    std::vector<Necklace> out;
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        BitString s(v, n);
        if (necklace_canonical(s) != s) continue;
        bool take = false;
        switch (set) {
            case NecklaceSet::NMinus: take = is_primitive(s) && s.weight() % 2 == 1; break;
            case NecklaceSet::NPlus: take = is_primitive(s) && s.weight() % 2 == 0; break;
            case NecklaceSet::NTildePlus:
                take = (is_primitive(s) && s.weight() % 2 == 0) ||
                       (s.is_doubled() && is_primitive(s.first_half()) &&
                        s.first_half().weight() % 2 == 1);
                break;
        }
        if (take) out.emplace_back(Necklace(s));
    }
    return out;
}

std::vector<InversionClass> enumerate_classes(ClassSet set, int n) {
    if (n < 1 || n > BitString::kMaxLength) throw UsageError("n out of range");
    std::vector<InversionClass> out;
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        BitString s(v, n);
        if (class_canonical(s) != s || !is_primitive(s)) continue;
        if (set != ClassSet::Nbar) {
            bool refl = is_reflexive(s);
            if ((set == ClassSet::Nbar1) != refl) continue;
        }
        out.emplace_back(InversionClass(s));
    }
    return out;
}

}  // namespace qnp::words
