#include "core/bijections.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "core/shiftdyn.hpp"
#include "core/words.hpp"

namespace qnp::bij {

BitString xi(const BitString& s) {
    std::uint64_t out = 0;
    int acc = 0;
    for (int i = 0; i < s.size(); ++i) {
        acc ^= s.bit(i);
        out = out << 1 | static_cast<std::uint64_t>(acc);
    }
    return BitString(out, s.size());
}

BitString xi_inv(const BitString& s) {
    std::uint64_t out = 0;
    int prev = 0;
    for (int i = 0; i < s.size(); ++i) {
        out = out << 1 | static_cast<std::uint64_t>(s.bit(i) ^ prev);
        prev = s.bit(i);
    }
    return BitString(out, s.size());
}

InversionClass psi_plus(const Necklace& x) {
    if (!words::in_n_tilde_plus(x))
        throw UsageError("psi+ requires a necklace in NTilde+(n), got <" + x.str() + ">");
    return InversionClass(xi(x.canonical()));
}

Necklace theta_plus(const InversionClass& y) {
    if (!y.primitive())
        throw UsageError("theta+ requires a primitive inversion class, got " + y.str());
    // any member ending in 0 works; use the canonical one's rotations first
    const BitString& c = y.canonical();
    for (const BitString& base : {c, c.inverted()})
        for (int k = 0; k < c.size(); ++k) {
            BitString r = base.rotated_left(k);
            if (r.bit(r.size() - 1) == 0) return Necklace(xi_inv(r));
        }
    throw ConsistencyError("no class member of " + y.str() + " ends in 0");
}

Itinerary itinerary(const Cup& sigma) {
    const int n = sigma.size();
    const int m = sigma.turning_point();
    std::string sym;
    sym.reserve(static_cast<size_t>(n));
    int x = m;
    for (int i = 1; i < n; ++i) {
        x = sigma.apply(x);
        sym += x > m ? '+' : '-';
    }
    sym += '*';
    return Itinerary{sym};
}

namespace {
BitString string_from_itinerary(const Itinerary& it, int star_parity) {
    std::uint64_t out = 0;
    int weight = 0;
    for (char ch : it.symbols) {
        int b = 0;
        if (ch == '-')
            b = 1;
        else if (ch == '*')
            b = (weight % 2 == star_parity) ? 0 : 1;
        weight += b;
        out = out << 1 | static_cast<std::uint64_t>(b);
    }
    return BitString(out, it.size());
}
}  // namespace

BitString a_of_sigma(const Cup& sigma) {
    return string_from_itinerary(itinerary(sigma), 0);
}

Necklace phi(const Cup& sigma) {
    Necklace out(a_of_sigma(sigma));
    if (!words::in_n_tilde_plus(out))
        throw ConsistencyError("phi image <" + out.str() + "> escapes NTilde+");
    return out;
}

namespace {
// lexicographically smallest class member beginning with 1
BitString seed_starting_with_one(const InversionClass& y) {
    const BitString& c = y.canonical();
    bool found = false;
    BitString best;
    for (const BitString& base : {c, c.inverted()})
        for (int k = 0; k < c.size(); ++k) {
            BitString r = base.rotated_left(k);
            if (r.bit(0) != 1) continue;
            if (!found || r < best) {
                best = r;
                found = true;
            }
        }
    if (!found) throw ConsistencyError("no class member of " + y.str() + " starts with 1");
    return best;
}

template <typename Item>
Cup rank_cycle(const std::vector<Item>& orbit) {
    std::vector<Item> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) throw ConsistencyError("tied ranks in orbit");
    std::vector<int> cycle;
    cycle.reserve(orbit.size());
    for (const Item& item : orbit) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), item);
        cycle.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Cup::from_cycle(cycle);
}
}  // namespace

Cup lambda_map(const InversionClass& y) {
    if (!y.primitive())
        throw UsageError("lambda requires a primitive inversion class, got " + y.str());
    BitString t = seed_starting_with_one(y);
    if (words::classify(y) == words::ClassKind::Nbar2)
        return rank_cycle(shiftdyn::f_orbit(t));
    return rank_cycle(shiftdyn::ftilde_orbit(t));
}

Cup wr_phi(const Necklace& x) {
    if (!words::in_n_minus(x))
        throw UsageError("the Weiss-Rogers map needs a primitive odd-weight necklace, got <" +
                         x.str() + ">");
    const BitString s = x.canonical();
    std::vector<BitString> nu;
    nu.reserve(static_cast<size_t>(s.size()));
    for (int k = 0; k < s.size(); ++k) nu.push_back(xi(s.rotated_left(k)).inverted());
    return rank_cycle(nu);
}

BitString wr_psi_string(const Cup& sigma) {
    return string_from_itinerary(itinerary(sigma), 1);
}

Necklace wr_psi(const Cup& sigma) {
    return Necklace(wr_psi_string(sigma));
}

std::vector<Cup> enumerate_cup(int n) {
    if (n < 1 || n > BitString::kMaxLength) throw UsageError("n out of range");
    std::vector<Cup> out;
    // a unimodal permutation is fixed by the value set of its descending
    // prefix (which must contain 1): 2^(n-1) candidates
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        std::vector<int> images;
        images.reserve(static_cast<size_t>(n));
        std::vector<int> desc{1}, asc;
        for (int v = 2; v <= n; ++v)
            (mask >> (v - 2) & 1 ? desc : asc).push_back(v);
        images.assign(desc.rbegin(), desc.rend());
        images.insert(images.end(), asc.begin(), asc.end());
        // images as a mapping: position i+1 -> images[i]
        int x = 1, period = 0;
        do {
            x = images[static_cast<size_t>(x) - 1];
            ++period;
        } while (x != 1 && period <= n);
        if (period == n) out.emplace_back(Cup(std::move(images)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_satellite_cup(const Cup& sigma) {
    const int n = sigma.size();
    if (n % 2) return false;
    std::vector<int> cyc = sigma.cycle_from_one();
    for (int i = 0; i < n / 2; ++i) {
        int x = cyc[static_cast<size_t>(i)];
        int y = cyc[static_cast<size_t>(i + n / 2)];
        if (y != (x % 2 == 1 ? x + 1 : x - 1)) return false;
    }
    return true;
}

}  // namespace qnp::bij
