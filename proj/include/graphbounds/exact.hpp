#ifndef GRAPHBOUNDS_EXACT_HPP
#define GRAPHBOUNDS_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace graphbounds
{
    using BigInt = mpz_class;
    using Rational = mpq_class;

    /// Multiplicities keyed by the top argument s of a ratio C(s,t)/C(n,t).
    using Histogram = std::map<std::uint64_t, std::uint64_t>;

    auto make_rational(const BigInt & numerator, const BigInt & denominator) -> Rational;

    /// C(a, b), zero whenever b < 0, b > a or a < 0.
    auto binom(long long a, long long b) -> BigInt;

    auto floor_rat(const Rational & x) -> BigInt;
    auto ceil_rat(const Rational & x) -> BigInt;

    /// "p/q", or just "p" when the value is integral.
    auto to_string(const Rational & x) -> std::string;

    /// Decimal rendering with the given number of significant digits.
    /// Display only.
    auto to_decimal(const Rational & x, int significant = 6) -> std::string;

    /// C(s, k) / C(total, k) for a single s. Costs min(k, total - s)
    /// multiplications.
    auto binom_ratio(std::uint64_t total, std::uint64_t s, std::uint64_t k) -> Rational;

    /**
     * The ratios r[s] = C(s, t) / C(n, t).
     *
     * Entries are produced by the downward recurrence
     * r[s] = r[s+1] * (s+1-t) / (s+1) starting from r[n] = 1, so the entry at
     * s is the falling-factorial quotient (n-t)_{n-s} / (n)_{n-s}. Entries
     * with s < t are zero and are never stored.
     *
     * A table can be full (every s in 0..n) or sparse (only the requested s
     * values are kept, although the recurrence still walks down to the
     * smallest of them). Bound sweeps use the sparse form with the support
     * of their multiplicity histograms, so a whole sum costs a handful of
     * big-integer operations.
     */
    class RatioTable
    {
        public:
            RatioTable(std::uint64_t n, std::uint64_t t);
            RatioTable(std::uint64_t n, std::uint64_t t, const std::vector<std::uint64_t> & support);

            auto n() const -> std::uint64_t { return _n; }
            auto t() const -> std::uint64_t { return _t; }

            /// r[s]. Throws std::out_of_range for s > n or for an s >= t
            /// that a sparse table did not materialise.
            auto operator[](std::uint64_t s) const -> Rational;

            /// Sum over the histogram of count * r[s], reduced once at the
            /// end.
            auto weighted_sum(const Histogram & histogram) const -> Rational;

        private:
            auto build(std::vector<std::uint64_t> wanted) -> void;
            auto find(std::uint64_t s) const -> std::size_t;

            std::uint64_t _n;
            std::uint64_t _t;
            // descending s values with their unreduced numerator/denominator
            std::vector<std::uint64_t> _s;
            std::vector<BigInt> _num;
            std::vector<BigInt> _den;
    };
}

#endif
