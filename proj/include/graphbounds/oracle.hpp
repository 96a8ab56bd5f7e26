#ifndef GRAPHBOUNDS_ORACLE_HPP
#define GRAPHBOUNDS_ORACLE_HPP

#include <graphbounds/exact.hpp>
#include <graphbounds/graph.hpp>

#include <cstdint>
#include <map>

namespace graphbounds
{
    struct OracleLimits
    {
        unsigned gamma_max_n = 24;
        unsigned alpha_max_n = 40;
        std::uint64_t enumeration_limit = 10'000'000;
    };

    /**
     * Distribution of an integer random variable over equally likely
     * outcomes, with exact moments.
     */
    struct ExactDistribution
    {
        std::map<long long, BigInt> support;
        BigInt total;
        Rational mean;
        Rational variance;
        long long min_val = 0;
        long long max_val = 0;

        static auto from_counts(std::map<long long, BigInt> counts) -> ExactDistribution;

        /// Var <= (mean - min)(max - mean).
        auto satisfies_bhatia_davis() const -> bool;
    };

    /// Minimum dominating set size; n <= limits.gamma_max_n.
    auto exact_gamma(const Graph & g, const OracleLimits & limits = {}) -> unsigned;

    /// Maximum independent set size; n <= limits.alpha_max_n.
    auto exact_alpha(const Graph & g, const OracleLimits & limits = {}) -> unsigned;

    /// z = |X| + |{u : N[u] ∩ X = ∅}| over all t-subsets X.
    auto exhaustive_dom_distribution(const Graph & g, unsigned t, const OracleLimits & limits = {}) -> ExactDistribution;

    /// z = |X_A| + |X_B| + |Y_A| + |Y_B| over all a-subsets of A and
    /// b-subsets of B.
    auto exhaustive_bip_distribution(const Graph & g, const Bipartition & bip, unsigned a, unsigned b,
            const OracleLimits & limits = {}) -> ExactDistribution;

    /// z = |X \ {u ∈ X : N(u) ∩ X ≠ ∅}| over all t-subsets X.
    auto exhaustive_ind_distribution(const Graph & g, unsigned t, const OracleLimits & limits = {}) -> ExactDistribution;

    /// Calls f(mask) for every k-subset of {0..n-1} in colex order.
    template <typename F>
    auto for_each_subset(unsigned n, unsigned k, F && f) -> void
    {
        if (k > n || n > 64)
            return;
        if (k == 0) {
            f(std::uint64_t{ 0 });
            return;
        }
        std::uint64_t mask = (k == 64) ? ~std::uint64_t{ 0 } : ((std::uint64_t{ 1 } << k) - 1);
        std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{ 1 } << n);
        while (true) {
            f(mask);
            if (k == n)
                return;
            // Gosper's hack
            std::uint64_t c = mask & (~mask + 1);
            std::uint64_t r = mask + c;
            if (r == 0 || (limit != 0 && r >= limit))
                return;
            mask = (((r ^ mask) >> 2) / c) | r;
            if (limit != 0 && mask >= limit)
                return;
        }
    }
}

#endif
