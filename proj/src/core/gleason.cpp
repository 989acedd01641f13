#include "core/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "core/bijections.hpp"
#include "core/counting.hpp"
#include "core/errors.hpp"

namespace qnp::gleason {

namespace {
std::mutex cache_mutex;

template <typename T, typename Fn>
const T& cached(std::map<int, T>& table, int n, Fn&& compute) {
    std::scoped_lock lock(cache_mutex);
    auto it = table.find(n);
    if (it == table.end()) it = table.emplace(n, compute()).first;
    return it->second;
}

std::vector<int> proper_divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}
}  // namespace

const IntPoly& qn(int n) {
    if (n < 1) throw UsageError("n must be positive");
    static std::map<int, IntPoly> table;
    return cached(table, n, [n] {
        IntPoly q = IntPoly::monomial(1);
        const IntPoly c = IntPoly::monomial(1);
        for (int i = 1; i < n; ++i) q = q.squared() + c;
        return q;
    });
}

const IntPoly& gleason_poly(int n) {
    if (n < 1) throw UsageError("n must be positive");
    static std::map<int, IntPoly> table;
    // compute divisors outside the cache lock; the recursion reenters
    IntPoly value;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = table.find(n);
        if (it != table.end()) return it->second;
    }
    value = qn(n);
    for (int d : proper_divisors(n)) value = value.divide_exact_by_monic(gleason_poly(d));
    std::scoped_lock lock(cache_mutex);
    return table.emplace(n, std::move(value)).first->second;
}

const gf2::GF2Poly& gleason_mod2(int n) {
    if (n < 1) throw UsageError("n must be positive");
    static std::map<int, gf2::GF2Poly> table;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = table.find(n);
        if (it != table.end()) return it->second;
    }
    gf2::GF2Poly q = gf2::GF2Poly::x();
    for (int i = 1; i < n; ++i) q = q.squared() + gf2::GF2Poly::x();
    for (int d : proper_divisors(n)) {
        auto [quot, rem] = q.divmod(gleason_mod2(d));
        if (!rem.is_zero()) throw ConsistencyError("mod-2 recursion left a remainder");
        q = std::move(quot);
    }
    std::scoped_lock lock(cache_mutex);
    return table.emplace(n, std::move(q)).first->second;
}

bool verify_squarefree(int n) {
    // gcd(G, G') = 1 over Q follows from coprimality mod any prime since G
    // is monic; mod 2 is free, small odd primes are the fallback
    const gf2::GF2Poly& g2 = gleason_mod2(n);
    if (gcd(g2, g2.derivative()).degree() == 0) return true;
    for (unsigned p : {3u, 5u, 7u}) {
        const IntPoly& g = gleason_poly(n);
        std::vector<unsigned> a(static_cast<size_t>(g.degree()) + 1);
        for (int i = 0; i <= g.degree(); ++i)
            a[static_cast<size_t>(i)] =
                mpz_fdiv_ui(g.coeff(i).get_mpz_t(), p);
        std::vector<unsigned> b(a.size() - 1);
        for (size_t i = 1; i < a.size(); ++i)
            b[i - 1] = static_cast<unsigned>((static_cast<std::uint64_t>(a[i]) * (i % p)) % p);
        auto deg = [](std::vector<unsigned>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            return static_cast<int>(v.size()) - 1;
        };
        auto modp = [&](std::vector<unsigned> x, std::vector<unsigned> y) {
            // returns x mod y over F_p
            int dy = deg(y);
            std::uint64_t inv = 1;
            for (std::uint64_t e = p - 2, base = y.back(); e; e >>= 1) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
            }
            while (deg(x) >= dy && dy >= 0) {
                std::uint64_t q = static_cast<std::uint64_t>(x.back()) * inv % p;
                size_t off = x.size() - y.size();
                for (size_t i = 0; i < y.size(); ++i)
                    x[off + i] =
                        static_cast<unsigned>((x[off + i] + p * p - q * y[i] % p) % p);
                deg(x);
            }
            return x;
        };
        while (deg(b) >= 0) {
            auto r = modp(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (deg(a) == 0) return true;
    }
    return false;
}

long double Bracket::lo_value() const {
    long double v = 0;
    mpz_class a = abs(lo);
    for (size_t limb = mpz_size(a.get_mpz_t()); limb-- > 0;)
        v = v * 18446744073709551616.0L + mpz_getlimbn(a.get_mpz_t(), limb);
    return std::ldexp(sgn(lo) < 0 ? -v : v, -static_cast<int>(k));
}

long double Bracket::hi_value() const {
    Bracket tmp{hi, hi, k};
    return tmp.lo_value();
}

long double Bracket::midpoint() const {
    return (lo_value() + hi_value()) / 2;
}

std::string Bracket::lo_str() const {
    return lo.get_str() + "/2^" + std::to_string(k);
}

std::string Bracket::hi_str() const {
    return hi.get_str() + "/2^" + std::to_string(k);
}

std::vector<long double> critical_orbit(long double c, int n) {
    if (n < 1) throw UsageError("n must be positive");
    std::vector<long double> orbit;
    orbit.reserve(static_cast<size_t>(n));
    long double z = 0;
    for (int i = 0; i < n; ++i) {
        z = z * z + c;
        orbit.push_back(z);
    }
    return orbit;
}

Itinerary itinerary_of_center(const std::vector<long double>& orbit, long double sign_tolerance) {
    const size_t n = orbit.size();
    if (n == 0) throw UsageError("empty orbit");
    if (std::fabs(orbit.back()) > sign_tolerance)
        throw UsageError("orbit does not close up: |f^n(0)| above tolerance");
    std::string kappa = "*";
    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(orbit[i]) <= sign_tolerance)
            throw UsageError("orbit point too close to 0 for a certain sign");
        kappa += orbit[i] > 0 ? '+' : '-';
    }
    return Itinerary::parse(kappa);
}

BitString kneading_sequence(const Itinerary& kappa) {
    const std::string sym = kappa.kappa_order();
    // t_1 = 0 for the star slot; '+' repeats the previous digit, '-' flips
    std::uint64_t bits = 0;
    int prev = 0;
    for (size_t i = 1; i < sym.size(); ++i) {
        int cur = sym[i] == '+' ? prev : 1 - prev;
        bits = bits << 1 | static_cast<std::uint64_t>(cur);
        prev = cur;
    }
    return BitString(bits, static_cast<int>(sym.size()));
}

Angle kneading_angle(const BitString& t) {
    Angle a = Angle::from_digits(t);
    if (a.compare_fraction(1, 2) > 0)
        throw UsageError("kneading angles lie in [0, 1/2], got " + a.str());
    return a;
}

namespace {

double qn_double(double c, int n) {
    double z = 0;
    for (int i = 0; i < n; ++i) z = z * z + c;
    return z;
}

struct Candidate {
    double value;
};

// approximate all real roots of Q_n in [-2, 1/4] by scanning + bisection
std::vector<double> discover_qn_roots(int n, std::uint64_t expected) {
    const double lo = -2.0, hi = 0.25;
    for (int mexp = std::max(14, n + 6); mexp <= 26; mexp += 2) {
        const std::uint64_t m = 1ull << mexp;
        std::vector<double> roots;
        const double step = (hi - lo) / static_cast<double>(m);
        double prev = qn_double(lo, n);
        double prev_x = lo;
        for (std::uint64_t i = 1; i <= m; ++i) {
            const double x = lo + step * static_cast<double>(i);
            const double v = qn_double(x, n);
            if (prev == 0.0) {
                roots.push_back(prev_x);
            } else if (v != 0.0 && std::signbit(prev) != std::signbit(v)) {
                double a = prev_x, b = x, fa = prev;
                for (int it = 0; it < 80 && b - a > 1e-16; ++it) {
                    double mid = 0.5 * (a + b);
                    double fm = qn_double(mid, n);
                    if (fm == 0.0) {
                        a = b = mid;
                        break;
                    }
                    if (std::signbit(fm) == std::signbit(fa)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                roots.push_back(0.5 * (a + b));
            }
            prev = v;
            prev_x = x;
        }
        if (qn_double(hi, n) == 0.0) roots.push_back(hi);
        if (roots.size() == expected) return roots;
    }
    throw ConsistencyError("root discovery for Q_n did not reach the expected count");
}

int exact_sign(const IntPoly& g, const mpz_class& num, unsigned k) {
    return g.sign_at_dyadic(num, k);
}

}  // namespace

std::vector<HyperbolicCenter> real_roots(int n, double precision) {
    if (n < 1 || n > 24) throw UsageError("root isolation supports 1 <= n <= 24");
    if (precision <= 0 || precision > 0.25) throw UsageError("precision out of range");
    if (!verify_squarefree(n))
        throw ConsistencyError("squarefree certificate for the degree-" + std::to_string(n) +
                               " Gleason polynomial failed");
    const std::uint64_t gamma_n = counting::gamma(n);
    std::uint64_t qn_roots = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) qn_roots += counting::gamma(d);

    const IntPoly& g = gleason_poly(n);
    std::vector<double> approx = discover_qn_roots(n, qn_roots);
    std::sort(approx.begin(), approx.end());

    // initial dyadic half-width per candidate, kept clear of the neighbours
    const unsigned k0 = 40;
    std::vector<Bracket> brackets;
    for (size_t i = 0; i < approx.size(); ++i) {
        double gap = 0.25;
        if (i > 0) gap = std::min(gap, (approx[i] - approx[i - 1]) / 4);
        if (i + 1 < approx.size()) gap = std::min(gap, (approx[i + 1] - approx[i]) / 4);
        double w = std::min(1e-10, gap);
        mpz_class lo(std::floor(std::ldexp(approx[i] - w, k0)));
        mpz_class hi(std::ceil(std::ldexp(approx[i] + w, k0)));
        int slo = exact_sign(g, lo, k0), shi = exact_sign(g, hi, k0);
        for (int widen = 0; (slo == 0 || shi == 0) && widen < 4; ++widen) {
            if (slo == 0) --lo;
            if (shi == 0) ++hi;
            slo = exact_sign(g, lo, k0);
            shi = exact_sign(g, hi, k0);
        }
        if (slo * shi < 0) brackets.push_back({std::move(lo), std::move(hi), k0});
    }
    if (brackets.size() != gamma_n)
        throw ConsistencyError("isolated " + std::to_string(brackets.size()) +
                               " real roots of G_" + std::to_string(n) + ", expected " +
                               std::to_string(gamma_n));
    for (size_t i = 0; i + 1 < brackets.size(); ++i)
        if (!(brackets[i].hi < brackets[i + 1].lo))
            throw ConsistencyError("isolating brackets overlap");

    std::vector<HyperbolicCenter> centers;
    for (Bracket& br : brackets) {
        // refine to the requested width by exact bisection
        auto width_ok = [&](const Bracket& b, double target) {
            mpz_class diff = b.hi - b.lo;
            long double w = std::ldexp(diff.get_d(), -static_cast<int>(b.k));
            return w <= static_cast<long double>(target);
        };
        int slo = exact_sign(g, br.lo, br.k);
        auto bisect_once = [&] {
            br.lo *= 2;
            br.hi *= 2;
            br.k += 1;
            mpz_class mid = (br.lo + br.hi) / 2;
            int sm = exact_sign(g, mid, br.k);
            if (sm == 0) mid += 1, sm = exact_sign(g, mid, br.k);  // dyadic root nudged
            if (sm == slo)
                br.lo = std::move(mid);
            else
                br.hi = std::move(mid);
        };
        while (!width_ok(br, precision)) bisect_once();

        HyperbolicCenter hc;
        hc.n = n;
        // orbit sign decisions may demand a narrower bracket
        for (int attempt = 0;; ++attempt) {
            hc.value = br.midpoint();
            hc.orbit = critical_orbit(hc.value, n);
            try {
                hc.kappa = itinerary_of_center(hc.orbit);
                break;
            } catch (const UsageError&) {
                if (attempt >= 200)
                    throw ConsistencyError("orbit signs undecidable after repeated refinement");
                for (int i = 0; i < 8; ++i) bisect_once();
            }
        }
        hc.bracket = br;
        hc.kneading_word = kneading_sequence(hc.kappa);
        hc.kneading_angle = kneading_angle(hc.kneading_word);
        if (!is_primitive(hc.kneading_word))
            throw ConsistencyError("kneading angle of a period-" + std::to_string(n) +
                                   " center has a shorter period");
        // ranks of f(0) .. f^n(0); final slot is the critical point itself
        std::vector<long double> sorted = hc.orbit;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> cycle;
        for (long double v : hc.orbit) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
            cycle.push_back(static_cast<int>(it - sorted.begin()) + 1);
        }
        try {
            hc.orbit_permutation = Cup::from_cycle(cycle);
        } catch (const UsageError& e) {
            throw ConsistencyError(std::string("orbit rank permutation invalid: ") + e.what());
        }
        centers.push_back(std::move(hc));
    }
    return centers;
}

std::vector<DoublingClass> enumerate_dbar(int n) {
    if (n < 2) throw UsageError("doubling-map classes need n >= 2");
    std::vector<DoublingClass> out;
    for (const InversionClass& cls : words::enumerate_classes(words::ClassSet::Nbar, n)) {
        DoublingClass dc{cls, words::classify(cls), {}};
        auto cycle_of = [n](const BitString& s) {
            // order the cycle by successive doubling from the smallest member
            BitString best = necklace_canonical(s);
            std::vector<Angle> cyc;
            BitString cur = best;
            for (int i = 0; i < n; ++i) {
                cyc.push_back(Angle::from_digits(cur));
                cur = cur.rotated_left(1);
            }
            return cyc;
        };
        dc.cycles.push_back(cycle_of(cls.canonical()));
        if (dc.kind == words::ClassKind::Nbar2)
            dc.cycles.push_back(cycle_of(cls.canonical().inverted()));
        out.push_back(std::move(dc));
    }
    return out;
}

}  // namespace qnp::gleason
