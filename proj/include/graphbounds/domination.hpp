#ifndef GRAPHBOUNDS_DOMINATION_HPP
#define GRAPHBOUNDS_DOMINATION_HPP

#include <graphbounds/exact.hpp>
#include <graphbounds/graph.hpp>
#include <graphbounds/profile.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace graphbounds
{
    /// An optimum over the sampling size t, with the (smallest) t attaining
    /// it.
    struct Optimum
    {
        Rational value;
        std::uint64_t t = 0;
    };

    /**
     * Terms of the random-subset alteration at one sampling size t: X is a
     * uniform t-subset of V and z = |X| + |{u : N[u] ∩ X = ∅}|.
     *
     *   a  = E[z]
     *   b  = E[|Y|] + 2 Σ_{u<v} P(u, v ∈ Y), so Var(z) = b - (a - t)^2
     *   c  = the same pair sum with |N[u] ∪ N[v]| relaxed to d(u)+d(v)+2
     *
     * hm1_value = a - (b - (a-t)^2) / (n - a) and hm2_value uses c instead
     * of b.
     */
    struct DomTermsAtT
    {
        std::uint64_t t = 0;
        Rational a;
        Rational b;
        Rational c;
        Rational hm1_value;
        Rational hm2_value;
    };

    struct DominationBounds
    {
        Optimum cssf;
        Optimum hm1;
        Optimum hm2;
    };

    /// Requires g in the class and 1 <= t <= n - δ.
    auto dom_terms(const Graph & g, std::uint64_t t) -> DomTermsAtT;
    auto dom_terms(const GraphProfile & g, std::uint64_t t) -> DomTermsAtT;

    /// Full sweep over t in [1, n-δ]; ties go to the smaller t.
    auto domination_bounds(const GraphProfile & g) -> DominationBounds;

    auto gamma_cssf(const Graph & g) -> Optimum;
    auto gamma_hm1(const Graph & g) -> Optimum;
    auto gamma_hm2(const Graph & g) -> Optimum;

    // Bipartite bound -------------------------------------------------------

    /**
     * Terms of the two-sided alteration on a bipartite graph with sides A
     * and B: X_A, X_B uniform a- and b-subsets of A and B, z counts X_A, X_B
     * and the vertices left undominated by the other side.
     *
     * e = E[z] and k = f + g + 2(h + i + j) = Var(z). The product terms in h
     * and i use P(u ∈ Y_A)P(v ∈ Y_A), whose side factor is
     * ((|A|-a)/|A|)^2.
     */
    struct BipTermsAtAB
    {
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        Rational e, f, g, h, i, j, k;
        Rational hm3_value;
    };

    struct GridOptimum
    {
        Rational value;
        std::uint64_t a = 0;
        std::uint64_t b = 0;
    };

    /**
     * A connected bipartite graph's twin profile together with the side of
     * every twin class. Construction checks connectivity and that both
     * sides hold at least two vertices.
     */
    class BipartiteProfile
    {
        public:
            BipartiteProfile(GraphProfile profile, std::vector<int> class_sides);

            /// Uses the given bipartition of g.
            static auto from_graph(const Graph & g, const Bipartition & bip) -> BipartiteProfile;

            /// Uses the profile's own two-colouring; empty when not
            /// bipartite or a side is smaller than two.
            static auto try_from(const GraphProfile & profile) -> std::optional<BipartiteProfile>;

            auto profile() const -> const GraphProfile & { return _profile; }
            auto sides() const -> const std::vector<int> & { return _sides; }
            auto size_a() const -> std::uint64_t { return _size_a; }
            auto size_b() const -> std::uint64_t { return _size_b; }

        private:
            GraphProfile _profile;
            std::vector<int> _sides;
            std::uint64_t _size_a = 0;
            std::uint64_t _size_b = 0;
    };

    /// Requires (a, b) in S(|A|,|B|): 0 <= a <= |A|, 0 <= b <= |B|,
    /// 0 < a + b < |A| + |B|.
    auto bip_terms(const BipartiteProfile & g, std::uint64_t a, std::uint64_t b) -> BipTermsAtAB;
    auto bip_terms(const Graph & g, const Bipartition & bip, std::uint64_t a, std::uint64_t b) -> BipTermsAtAB;

    /// Sweep of the whole grid S(|A|,|B|); ties go to smaller a, then b.
    auto gamma_hm3(const BipartiteProfile & g) -> GridOptimum;
    auto gamma_hm3(const Graph & g, const Bipartition & bip) -> GridOptimum;
}

#endif
