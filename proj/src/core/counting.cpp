#include "core/counting.hpp"

#include <bit>

#include "core/bijections.hpp"
#include "core/bitstring.hpp"
#include "core/errors.hpp"

namespace qnp::counting {

int mobius(std::uint64_t m) {
    if (m < 1) throw UsageError("mobius argument must be positive");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::uint64_t gamma(int n) {
    if (n < 1 || n > 62) throw UsageError("gamma supports 1 <= n <= 62");
    std::int64_t total = 0;
    for (int m = 1; m <= n; m += 2)
        if (n % m == 0) total += mobius(static_cast<std::uint64_t>(m)) * (1ll << (n / m));
    if (total <= 0 || total % (2 * n))
        throw ConsistencyError("gamma sum not divisible by 2n");
    return static_cast<std::uint64_t>(total) / (2 * static_cast<unsigned>(n));
}

CountReport appendix_counts(int n) {
    if (n < 1 || n > 62) throw UsageError("appendix counts support 1 <= n <= 62");
    CountReport r;
    r.n = n;
    r.gamma = gamma(n);
    std::int64_t p = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) p += mobius(static_cast<std::uint64_t>(n / d)) * (1ll << d);
    r.p = static_cast<std::uint64_t>(p);
    if (r.p % static_cast<unsigned>(n)) throw ConsistencyError("p not divisible by n");
    r.c = r.p / static_cast<unsigned>(n);
    if (n % 2 == 0) {
        std::int64_t xi = 0;
        for (int m = 1; m <= n / 2; m += 2)
            if ((n / 2) % m == 0)
                xi += mobius(static_cast<std::uint64_t>(m)) * (1ll << (n / (2 * m)));
        r.xi = static_cast<std::uint64_t>(xi);
        r.epsilon = r.xi / static_cast<unsigned>(n);
        if (r.xi % static_cast<unsigned>(n)) throw ConsistencyError("xi not divisible by n");
    }
    r.delta = (r.p - r.xi) / (2 * static_cast<unsigned>(n));
    if ((r.p - r.xi) % (2 * static_cast<unsigned>(n)))
        throw ConsistencyError("p - xi not divisible by 2n");
    r.appendix_verdict = n % 2 == 0 ? r.epsilon + r.delta == r.gamma : r.c == 2 * r.gamma;
    return r;
}

CountReport subset_sum_counts(int n) {
    if (n < 2 || n > 24) throw UsageError("subset-sum counts support 2 <= n <= 24");
    CountReport r;
    r.n = n;
    r.gamma = gamma(n);
    r.s1_by_k.assign(static_cast<size_t>(n), 0);
    std::uint64_t s0 = 0, s1 = 0;
    if (n <= 20) {
        for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
            unsigned sum = 0;
            for (std::uint64_t m = mask; m; m &= m - 1)
                sum += static_cast<unsigned>(std::countr_zero(m)) + 1;
            unsigned residue = sum % static_cast<unsigned>(n);
            if (residue == 0) ++s0;
            if (residue == 1) {
                ++s1;
                ++r.s1_by_k[static_cast<size_t>(std::popcount(mask))];
            }
        }
    } else {
        // residue x size tally, one item at a time
        std::vector<std::uint64_t> dp(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        auto at = [n](std::vector<std::uint64_t>& t, int res, int size) -> std::uint64_t& {
            return t[static_cast<size_t>(res) * static_cast<size_t>(n) + static_cast<size_t>(size)];
        };
        at(dp, 0, 0) = 1;
        for (int item = 1; item <= n - 1; ++item) {
            std::vector<std::uint64_t> next = dp;
            for (int res = 0; res < n; ++res)
                for (int size = 0; size + 1 < n; ++size)
                    if (at(dp, res, size))
                        at(next, (res + item) % n, size + 1) += at(dp, res, size);
            dp = std::move(next);
        }
        for (int size = 0; size < n; ++size) {
            s0 += at(dp, 0, size);
            s1 += at(dp, 1, size);
            r.s1_by_k[static_cast<size_t>(size)] = at(dp, 1, size);
        }
    }
    r.s0 = s0;
    r.s1 = s1;

    std::uint64_t t_minus = 0;
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
        BitString s(v, n);
        if (s.weight() % 2 == 1 && necklace_canonical(s) == s) ++t_minus;
    }
    r.t_minus = t_minus;

    r.cup_by_k.assign(static_cast<size_t>(n), 0);
    for (const Cup& sigma : bij::enumerate_cup(n))
        ++r.cup_by_k[static_cast<size_t>(sigma.turning_point()) - 1];

    r.s1_verdict = s1 == r.gamma;
    bool pairing = true;
    for (int k = 0; k < n; ++k) {
        std::uint64_t cup = k + 1 <= n ? r.cup_by_k[static_cast<size_t>(k)] : 0;
        if (r.s1_by_k[static_cast<size_t>(k)] != cup) pairing = false;
    }
    r.s1k_verdict = pairing;
    r.s0_verdict = s0 == t_minus;
    return r;
}

CountReport count_report(int n) {
    CountReport r = appendix_counts(n);
    if (n >= 2 && n <= 24) {
        CountReport s = subset_sum_counts(n);
        r.s0 = s.s0;
        r.s1 = s.s1;
        r.t_minus = s.t_minus;
        r.s1_by_k = std::move(s.s1_by_k);
        r.cup_by_k = std::move(s.cup_by_k);
        r.s1_verdict = s.s1_verdict;
        r.s1k_verdict = s.s1k_verdict;
        r.s0_verdict = s.s0_verdict;
    }
    return r;
}

}  // namespace qnp::counting
