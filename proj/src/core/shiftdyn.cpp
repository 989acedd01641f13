#include "core/shiftdyn.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/words.hpp"

namespace qnp::shiftdyn {

std::string PmSequence::str() const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += entries[i] > 0 ? "+1" : "-1";
    }
    return out;
}

PmSequence PmSequence::parse(std::string_view text) {
    PmSequence seq;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (tok == "+1" || tok == "1")
            seq.entries.push_back(1);
        else if (tok == "-1")
            seq.entries.push_back(-1);
        else
            throw UsageError("pm sequence entries must be +1 or -1");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (seq.entries.empty()) throw UsageError("empty pm sequence");
    return seq;
}

BitString twisted_shift(const BitString& s) {
    BitString t = s.rotated_left(1);
    return t.bit(0) == 1 ? t : t.inverted();
}

SignedBitString extended_twisted_shift(const SignedBitString& x) {
    BitString w = twisted_shift(x.word);
    bool keep = w.bit(w.size() - 1) == 1;
    return {w, keep ? x.sign : flipped(x.sign)};
}

std::vector<BitString> f_orbit(const BitString& t) {
    if (t.bit(0) != 1) throw UsageError("orbit seed must begin with 1, got " + t.str());
    if (words::classify(InversionClass(t)) != words::ClassKind::Nbar2)
        throw UsageError("[" + t.str() + "] is reflexive; use the extended orbit");
    std::vector<BitString> orbit{t};
    for (int i = 1; i < t.size(); ++i) orbit.push_back(twisted_shift(orbit.back()));
    for (size_t i = 0; i < orbit.size(); ++i)
        for (size_t j = i + 1; j < orbit.size(); ++j)
            if (orbit[i] == orbit[j])
                throw ConsistencyError("twisted-shift orbit of " + t.str() + " is not free");
    return orbit;
}

std::vector<SignedBitString> ftilde_orbit(const BitString& t) {
    if (t.bit(0) != 1) throw UsageError("orbit seed must begin with 1, got " + t.str());
    if (words::classify(InversionClass(t)) != words::ClassKind::Nbar1)
        throw UsageError("[" + t.str() + "] is not reflexive; use the plain orbit");
    std::vector<SignedBitString> orbit{{t, Sign::Minus}};
    for (int i = 1; i < t.size(); ++i) orbit.push_back(extended_twisted_shift(orbit.back()));
    for (size_t i = 0; i < orbit.size(); ++i)
        for (size_t j = i + 1; j < orbit.size(); ++j)
            if (orbit[i] == orbit[j])
                throw ConsistencyError("extended orbit of " + t.str() + " is not free");
    const int half = t.size() / 2;
    if (orbit[static_cast<size_t>(half)] != SignedBitString{t, Sign::Plus})
        throw ConsistencyError("extended orbit of " + t.str() + " does not return to t+ halfway");
    return orbit;
}

PmSequence omega(const BitString& s) {
    PmSequence seq;
    seq.entries.reserve(static_cast<size_t>(s.size()));
    int acc = 0;
    for (int i = 0; i < s.size(); ++i) {
        acc ^= s.bit(i);
        seq.entries.push_back(acc ? -1 : 1);
    }
    return seq;
}

PmSequence pm_twisted_shift(const PmSequence& e) {
    const int n = e.size();
    PmSequence out;
    out.entries.resize(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i)
        out.entries[static_cast<size_t>(i)] =
            static_cast<std::int8_t>(e.entries[0] * e.entries[static_cast<size_t>(i) + 1]);
    // periodic extension: e_{n+1} = e_n * e_1, so the last entry is e_n
    out.entries[static_cast<size_t>(n) - 1] = e.entries[static_cast<size_t>(n) - 1];
    return out;
}

}  // namespace qnp::shiftdyn
