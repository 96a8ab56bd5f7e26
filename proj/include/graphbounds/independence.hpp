#ifndef GRAPHBOUNDS_INDEPENDENCE_HPP
#define GRAPHBOUNDS_INDEPENDENCE_HPP

#include <graphbounds/domination.hpp>
#include <graphbounds/exact.hpp>
#include <graphbounds/graph.hpp>
#include <graphbounds/profile.hpp>

#include <cstdint>
#include <map>

namespace graphbounds
{
    /// Raw binomial sums at sampling size t (not divided by C(n,t)):
    ///   a_ind = Σ_u C(n-d(u)-1, t-1)
    ///   b_ind = 2 Σ_{non-edges uv} C(n-d(u)-1, t-2) + C(n-d(v)-1, t-2) - C(n-|N[u]∪N[v]|, t-2)
    /// and hm_value = 2t - 1 - b_ind / a_ind.
    ///
    /// b_exact is the same sum with C(n-d(u)-2, t-2) and C(n-d(v)-2, t-2):
    /// P(u, v in X, N(u) ∩ X = ∅) must also keep v's slot, so only b_exact
    /// reproduces the variance of z exactly. b_exact <= b_ind for t >= 2
    /// (equal at t = 2), so hm_value stays below E[z] + Var(z)/E[z].
    struct IndTermsAtT
    {
        std::uint64_t t = 0;
        BigInt a_ind;
        BigInt b_ind;
        BigInt b_exact;
        Rational hm_value;
    };

    /**
     * The multiset {d(u) + 1 - ψ(u)} after l greedy unit decrements, each
     * applied to a current maximum. Its reciprocal sum is the minimum of
     * Σ 1/(d(u)+1-ψ(u)) over all ψ with 0 <= ψ(u) <= d(u), Σ ψ = l.
     */
    class DegreeFamily
    {
        public:
            explicit DegreeFamily(const GraphProfile & g);

            auto decrements() const -> std::uint64_t { return _l; }
            auto size() const -> std::uint64_t { return _size; }
            auto sum() const -> std::uint64_t { return _sum; }

            /// Σ 1/f over the members.
            auto reciprocal_sum() const -> const Rational & { return _reciprocal_sum; }

            /// value -> multiplicity
            auto members() const -> const std::map<std::uint64_t, std::uint64_t> & { return _members; }

            /// Lowers one maximum member by one. DomainError once every
            /// member is 1.
            auto decrement() -> void;

        private:
            std::map<std::uint64_t, std::uint64_t> _members;
            std::uint64_t _l = 0;
            std::uint64_t _size = 0;
            std::uint64_t _sum = 0;
            Rational _reciprocal_sum;
    };

    struct IndependenceBounds
    {
        Rational cw;
        Rational s;
        Rational acl;
        std::uint64_t hr = 0;
        Optimum hm;
    };

    auto alpha_cw(const GraphProfile & g) -> Rational;
    auto alpha_s(const GraphProfile & g) -> Rational;

    /// The non-negative correction term A(G) of the ACL bound.
    auto acl_correction(const GraphProfile & g) -> Rational;
    auto alpha_acl(const GraphProfile & g) -> Rational;

    /// φ(G, l) for 0 <= l <= Σ d(u).
    auto phi(const GraphProfile & g, std::uint64_t l) -> Rational;

    /// Smallest k >= 1 with k >= φ(G, 2(k-1)).
    auto alpha_hr(const GraphProfile & g) -> std::uint64_t;

    /// Requires 2 <= t <= n - δ.
    auto ind_terms(const GraphProfile & g, std::uint64_t t) -> IndTermsAtT;

    /// Maximum of hm_value over 2 <= t <= n - δ (ties to the smaller t).
    /// Evaluated through ratio tables rather than the raw binomial sums.
    auto alpha_hm(const GraphProfile & g) -> Optimum;

    auto independence_bounds(const GraphProfile & g) -> IndependenceBounds;

    auto alpha_cw(const Graph & g) -> Rational;
    auto alpha_s(const Graph & g) -> Rational;
    auto alpha_acl(const Graph & g) -> Rational;
    auto phi(const Graph & g, std::uint64_t l) -> Rational;
    auto alpha_hr(const Graph & g) -> std::uint64_t;
    auto ind_terms(const Graph & g, std::uint64_t t) -> IndTermsAtT;
    auto alpha_hm(const Graph & g) -> Optimum;
}

#endif
