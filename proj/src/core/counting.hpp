#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qnp::counting {

int mobius(std::uint64_t m);

// (1/2n) sum over odd m | n of mobius(m) 2^(n/m)
std::uint64_t gamma(int n);

struct CountReport {
    int n = 0;
    std::uint64_t gamma = 0;
    std::uint64_t p = 0;        // primitive strings
    std::uint64_t c = 0;        // primitive necklaces
    std::uint64_t xi = 0;       // primitive reflexive strings (0 for odd n)
    std::uint64_t epsilon = 0;  // inversion-fixed primitive necklaces
    std::uint64_t delta = 0;    // two-element inversion classes
    bool appendix_verdict = false;  // eps+delta = gamma (even n) / c = 2 gamma (odd n)

    std::optional<std::uint64_t> s0, s1, t_minus;
    std::vector<std::uint64_t> s1_by_k;   // [k] = k-element subsets, k = 0..n-1
    std::vector<std::uint64_t> cup_by_k;  // [k-1] = permutations with sigma(k) = 1
    std::optional<bool> s1_verdict;       // s1 = gamma
    std::optional<bool> s1k_verdict;      // s1_by_k[k] = cup_by_k[k+1] for all k
    std::optional<bool> s0_verdict;       // s0 = t_minus
};

// Formula-driven quantities p, c, xi, epsilon, delta and their verdict.
CountReport appendix_counts(int n);

// Subset-sum quantities over {1..n-1} mod n plus the CUP tallies; 2 <= n <= 24.
CountReport subset_sum_counts(int n);

// appendix_counts plus, for n >= 2, the subset-sum quantities.
CountReport count_report(int n);

}  // namespace qnp::counting
