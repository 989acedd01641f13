#include "core/gf2poly.hpp"

#include <algorithm>
#include <bit>

#include "core/errors.hpp"

namespace qnp::gf2 {

namespace {
// interleave the low 32 bits of v with zeros
std::uint64_t spread32(std::uint64_t v) {
    v &= 0xffffffffull;
    v = (v | v << 16) & 0x0000ffff0000ffffull;
    v = (v | v << 8) & 0x00ff00ff00ff00ffull;
    v = (v | v << 4) & 0x0f0f0f0f0f0f0f0full;
    v = (v | v << 2) & 0x3333333333333333ull;
    v = (v | v << 1) & 0x5555555555555555ull;
    return v;
}
}  // namespace

GF2Poly::GF2Poly(std::uint64_t bits) {
    if (bits) words_.push_back(bits);
}

GF2Poly GF2Poly::monomial(int degree) {
    GF2Poly p;
    p.set_coeff(degree, 1);
    return p;
}

void GF2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int GF2Poly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size()) * 64 - std::countl_zero(words_.back()) - 1;
}

int GF2Poly::coeff(int i) const {
    if (i < 0) throw UsageError("negative exponent");
    size_t w = static_cast<size_t>(i) / 64;
    if (w >= words_.size()) return 0;
    return static_cast<int>(words_[w] >> (i % 64)) & 1;
}

void GF2Poly::set_coeff(int i, int v) {
    if (i < 0) throw UsageError("negative exponent");
    size_t w = static_cast<size_t>(i) / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v)
        words_[w] |= 1ull << (i % 64);
    else
        words_[w] &= ~(1ull << (i % 64));
    trim();
}

std::uint64_t GF2Poly::packed() const {
    if (degree() >= 64) throw UsageError("polynomial too large for packed form");
    return words_.empty() ? 0 : words_[0];
}

GF2Poly GF2Poly::operator+(const GF2Poly& o) const {
    GF2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i];
    for (size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

GF2Poly GF2Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw UsageError("negative shift");
    GF2Poly r;
    size_t wordshift = static_cast<size_t>(k) / 64;
    int bitshift = k % 64;
    r.words_.assign(words_.size() + wordshift + 1, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wordshift] ^= words_[i] << bitshift;
        if (bitshift) r.words_[i + wordshift + 1] ^= words_[i] >> (64 - bitshift);
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::operator*(const GF2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    const auto &a = words_, &b = o.words_;
    GF2Poly r;
    r.words_.assign(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t av = a[i];
        while (av) {
            int bit = std::countr_zero(av);
            av &= av - 1;
            for (size_t j = 0; j < b.size(); ++j) {
                r.words_[i + j] ^= b[j] << bit;
                if (bit) r.words_[i + j + 1] ^= b[j] >> (64 - bit);
            }
        }
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::squared() const {
    GF2Poly r;
    r.words_.assign(words_.size() * 2, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[2 * i] = spread32(words_[i]);
        r.words_[2 * i + 1] = spread32(words_[i] >> 32);
    }
    r.trim();
    return r;
}

std::pair<GF2Poly, GF2Poly> GF2Poly::divmod(const GF2Poly& d) const {
    if (d.is_zero()) throw UsageError("division by the zero polynomial");
    GF2Poly rem = *this, quot;
    const int dd = d.degree();
    int rd = rem.degree();
    if (rd >= dd) quot.words_.assign(static_cast<size_t>(rd - dd) / 64 + 1, 0);
    while (rd >= dd) {
        int shift = rd - dd;
        quot.words_[static_cast<size_t>(shift) / 64] |= 1ull << (shift % 64);
        // rem ^= d << shift, in place
        size_t ws = static_cast<size_t>(shift) / 64;
        int bs = shift % 64;
        if (rem.words_.size() < d.words_.size() + ws + 1) rem.words_.resize(d.words_.size() + ws + 1, 0);
        for (size_t j = 0; j < d.words_.size(); ++j) {
            rem.words_[j + ws] ^= d.words_[j] << bs;
            if (bs) rem.words_[j + ws + 1] ^= d.words_[j] >> (64 - bs);
        }
        rem.trim();
        rd = rem.degree();
    }
    quot.trim();
    return {quot, rem};
}

GF2Poly GF2Poly::derivative() const {
    // odd-exponent terms survive with exponent lowered by one
    GF2Poly r;
    r.words_.resize(words_.size(), 0);
    for (size_t i = 0; i < words_.size(); ++i)
        r.words_[i] = (words_[i] & 0xaaaaaaaaaaaaaaaaull) >> 1;
    r.trim();
    return r;
}

std::strong_ordering GF2Poly::operator<=>(const GF2Poly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (size_t i = words_.size(); i-- > 0;)
        if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string GF2Poly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += var;
        else
            out += std::string(1, var) + "^" + std::to_string(i);
    }
    return out;
}

std::string GF2Poly::hex() const {
    if (is_zero()) return "0x0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (int i = 0; i <= degree(); i += 4) {
        int nib = coeff(i) | coeff(i + 1) << 1 | coeff(i + 2) << 2 | coeff(i + 3) << 3;
        out += digits[nib];
    }
    std::reverse(out.begin(), out.end());
    return "0x" + out;
}

GF2Poly GF2Poly::parse(std::string_view text) {
    std::string clean;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) clean += ch;
    if (clean.empty()) throw UsageError("empty polynomial");
    if (clean.starts_with("0x") || clean.starts_with("0X")) {
        GF2Poly p;
        int pos = 0;
        for (size_t i = clean.size(); i-- > 2;) {
            char ch = static_cast<char>(tolower(static_cast<unsigned char>(clean[i])));
            int v;
            if (ch >= '0' && ch <= '9')
                v = ch - '0';
            else if (ch >= 'a' && ch <= 'f')
                v = ch - 'a' + 10;
            else
                throw UsageError("bad hex digit in polynomial");
            for (int b = 0; b < 4; ++b)
                if (v >> b & 1) p.set_coeff(pos + b, 1);
            pos += 4;
        }
        return p;
    }
    if (clean == "0") return {};
    GF2Poly p;
    size_t pos = 0;
    while (pos < clean.size()) {
        size_t plus = clean.find('+', pos);
        std::string term = clean.substr(pos, plus == std::string::npos ? plus : plus - pos);
        if (term.empty()) throw UsageError("empty term in polynomial");
        int e;
        if (term == "1")
            e = 0;
        else if (term == "x" || term == "c")
            e = 1;
        else if ((term.starts_with("x^") || term.starts_with("c^")) && term.size() > 2)
            e = std::stoi(term.substr(2));
        else
            throw UsageError("cannot parse polynomial term '" + term + "'");
        if (p.coeff(e)) throw UsageError("repeated exponent in polynomial");
        p.set_coeff(e, 1);
        pos = plus == std::string::npos ? clean.size() : plus + 1;
    }
    return p;
}

GF2Poly gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        GF2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

GF2Poly frobenius_pow(const GF2Poly& base, int k, const GF2Poly& f) {
    GF2Poly r = base % f;
    for (int i = 0; i < k; ++i) r = r.squared() % f;
    return r;
}

bool is_irreducible(const GF2Poly& f) {
    const int d = f.degree();
    if (d < 1) throw UsageError("irreducibility is asked of non-constant polynomials");
    if (d == 1) return true;
    const GF2Poly x = GF2Poly::x();
    if (frobenius_pow(x, d, f) != x % f) return false;
    int rest = d;
    for (int p = 2; rest > 1; ++p) {
        if (p * p > rest) p = rest;
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        if (gcd(frobenius_pow(x, d / p, f) + x, f).degree() != 0) return false;
    }
    return true;
}

bool is_centered(const GF2Poly& f) {
    const int d = f.degree();
    if (d < 1) throw UsageError("centeredness is asked of non-constant polynomials");
    return f.coeff(d - 1) == 0;
}

namespace {

// f = g(x)^2 exactly when every exponent is even
GF2Poly square_root(const GF2Poly& f) {
    GF2Poly r;
    for (int i = 0; i <= f.degree(); i += 2) {
        if (f.coeff(i + 1)) throw ConsistencyError("square root of a non-square");
        if (f.coeff(i)) r.set_coeff(i / 2, 1);
    }
    return r;
}

void squarefree_parts(const GF2Poly& f, int mult, std::vector<std::pair<GF2Poly, int>>& out) {
    GF2Poly df = f.derivative();
    if (df.is_zero()) {
        squarefree_parts(square_root(f), 2 * mult, out);
        return;
    }
    GF2Poly c = gcd(f, df);
    GF2Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        GF2Poly y = gcd(w, c);
        GF2Poly z = w / y;
        if (!z.is_one()) out.emplace_back(z, i * mult);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    // the leftover carries the even-multiplicity part; it is a perfect
    // square, so the derivative-zero branch above doubles mult
    if (!c.is_one()) squarefree_parts(c, mult, out);
}

// trace map h + h^2 + ... + h^(2^(d-1)) mod f
GF2Poly trace_map(const GF2Poly& h, int d, const GF2Poly& f) {
    GF2Poly acc = h % f, pw = h % f;
    for (int i = 1; i < d; ++i) {
        pw = pw.squared() % f;
        acc = acc + pw;
    }
    return acc;
}

// Candidates for the trace-map split must range over the whole residue
// ring: the trace bits are linear in h, and the separating functional for a
// factor pair can vanish on every low-degree polynomial. A fixed-seed
// generator keeps runs reproducible; the factor set is unique anyway.
struct SplitRng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    GF2Poly poly_below(int degree_bound) {
        GF2Poly h;
        for (int base = 0; base < degree_bound; base += 64) {
            std::uint64_t w = next();
            for (int b = 0; b < 64 && base + b < degree_bound; ++b)
                if (w >> b & 1) h.set_coeff(base + b, 1);
        }
        return h;
    }
};

void split_equal_degree(const GF2Poly& f, int d, SplitRng& rng, std::vector<GF2Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    for (int attempt = 0; attempt < 4096; ++attempt) {
        GF2Poly t = trace_map(rng.poly_below(f.degree()), d, f);
        for (const GF2Poly& candidate : {t, t + GF2Poly::one()}) {
            GF2Poly g = gcd(candidate, f);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                split_equal_degree(g, d, rng, out);
                split_equal_degree(f / g, d, rng, out);
                return;
            }
        }
    }
    throw ConsistencyError("equal-degree splitting did not separate");
}

void distinct_degree_split(GF2Poly f, std::vector<std::pair<GF2Poly, int>>& out, int mult) {
    const GF2Poly x = GF2Poly::x();
    GF2Poly h = x % f;
    SplitRng rng;
    int d = 0;
    while (f.degree() > 0 && f.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.squared() % f;
        GF2Poly g = gcd(h + x, f);
        if (g.degree() > 0) {
            std::vector<GF2Poly> irr;
            split_equal_degree(g, d, rng, irr);
            for (auto& p : irr) out.emplace_back(std::move(p), mult);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(std::move(f), mult);
}

}  // namespace

std::vector<std::pair<GF2Poly, int>> factor(const GF2Poly& f) {
    if (f.degree() < 1) throw UsageError("factoring a constant polynomial");
    std::vector<std::pair<GF2Poly, int>> sf;
    squarefree_parts(f, 1, sf);
    std::vector<std::pair<GF2Poly, int>> out;
    for (const auto& [part, mult] : sf) distinct_degree_split(part, out, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates arising from distinct squarefree multiplicities
    std::vector<std::pair<GF2Poly, int>> merged;
    for (auto& item : out) {
        if (!merged.empty() && merged.back().first == item.first)
            merged.back().second += item.second;
        else
            merged.push_back(std::move(item));
    }
    GF2Poly check = GF2Poly::one();
    for (const auto& [p, m] : merged)
        for (int i = 0; i < m; ++i) check = check * p;
    if (check != f) throw ConsistencyError("factorization does not multiply back");
    return merged;
}

std::vector<GF2Poly> enumerate_irreducibles(IrreducibleSet set, int n) {
    if (n < 1 || n > 32) throw UsageError("degree out of range");
    auto degree_list = [](int d, bool centered) {
        std::vector<GF2Poly> out;
        if (d == 1) {
            // x is centered (root 0), x+1 is not
            out.push_back(centered ? GF2Poly(0b10) : GF2Poly(0b11));
            return out;
        }
        // monic, constant term 1
        for (std::uint64_t bits = (1ull << d) | 1; bits < (2ull << d); bits += 2) {
            GF2Poly f(bits);
            if (is_centered(f) == centered && is_irreducible(f)) out.push_back(std::move(f));
        }
        return out;
    };
    std::vector<GF2Poly> out;
    if (set == IrreducibleSet::IMinus) {
        out = degree_list(n, false);
    } else {
        if (n % 2 == 0) out = degree_list(n / 2, false);
        auto top = degree_list(n, true);
        out.insert(out.end(), top.begin(), top.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qnp::gf2
