#ifndef GRAPHBOUNDS_PROFILE_HPP
#define GRAPHBOUNDS_PROFILE_HPP

#include <graphbounds/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace graphbounds
{
    /// A set of pairwise non-adjacent vertices sharing one open
    /// neighbourhood.
    struct TwinClass
    {
        std::uint64_t size = 0;
        std::uint64_t degree = 0;
    };

    /// All vertex pairs {u, v} with u in class `first`, v in class `second`
    /// (two distinct members of one class when first == second). Every
    /// quantity the bounds read off a pair is the same across the group.
    struct PairGroup
    {
        std::uint32_t first = 0;
        std::uint32_t second = 0;
        std::uint64_t multiplicity = 0;
        bool adjacent = false;
        std::uint64_t degree_first = 0;
        std::uint64_t degree_second = 0;
        std::uint64_t common = 0;       ///< |N(u) ∩ N(v)|
        std::uint64_t open_union = 0;   ///< |N(u) ∪ N(v)|

        /// |N[u] ∪ N[v]|
        auto closed_union() const -> std::uint64_t { return adjacent ? open_union : open_union + 2; }
    };

    /**
     * The false-twin quotient of a graph: vertices with identical open
     * neighbourhoods are merged into one weighted class. Bounds evaluated on
     * the profile sum over class pairs with multiplicities, so highly
     * regular graphs (stars, complete bipartite graphs) cost O(1) per
     * summand no matter how many vertices they have.
     */
    class GraphProfile
    {
        public:
            static auto from_graph(const Graph & g) -> GraphProfile;

            /// Stars and complete bipartite graphs are built directly as a
            /// two-class quotient, without materialising the graph.
            static auto from_named(const NamedGraph & spec) -> GraphProfile;

            auto n() const -> std::uint64_t { return _n; }
            auto edge_count() const -> std::uint64_t { return _edge_count; }
            auto min_degree() const -> std::uint64_t { return _min_degree; }
            auto max_degree() const -> std::uint64_t { return _max_degree; }

            auto classes() const -> const std::vector<TwinClass> & { return _classes; }
            auto quotient() const -> const Graph & { return _quotient; }

            /// Class index of each vertex; empty for profiles built from a
            /// named family.
            auto class_of() const -> const std::vector<std::uint32_t> & { return _class_of; }

            auto gamma_class() const -> GammaClassProof;
            auto require_gamma_class() const -> void;

            /// Side (0 = A, 1 = B) of every class under the BFS two-colouring
            /// of the quotient, or empty if the graph is not bipartite.
            auto class_sides() const -> std::optional<std::vector<int>>;

            /// Sum of class sizes over the classes in a quotient bitset row.
            auto weight(std::span<const BitWord> classes) const -> std::uint64_t;

            /// Visits every PairGroup once.
            template <typename Callback>
            auto for_each_pair(Callback && callback) const -> void
            {
                std::vector<BitWord> scratch(_quotient.words_per_row());
                auto k = static_cast<std::uint32_t>(_classes.size());
                for (std::uint32_t c = 0; c < k; ++c) {
                    if (_classes[c].size >= 2) {
                        PairGroup p;
                        p.first = p.second = c;
                        p.multiplicity = _classes[c].size * (_classes[c].size - 1) / 2;
                        p.degree_first = p.degree_second = _classes[c].degree;
                        p.common = p.open_union = _classes[c].degree;
                        callback(p);
                    }
                    for (std::uint32_t d = c + 1; d < k; ++d) {
                        PairGroup p;
                        p.first = c;
                        p.second = d;
                        p.multiplicity = _classes[c].size * _classes[d].size;
                        p.adjacent = _quotient.adjacent(c, d);
                        p.degree_first = _classes[c].degree;
                        p.degree_second = _classes[d].degree;
                        auto rc = _quotient.row(c), rd = _quotient.row(d);
                        for (std::size_t w = 0; w < scratch.size(); ++w)
                            scratch[w] = rc[w] & rd[w];
                        p.common = weight(scratch);
                        p.open_union = p.degree_first + p.degree_second - p.common;
                        callback(p);
                    }
                }
            }

        private:
            auto finish() -> void;

            std::uint64_t _n = 0;
            std::uint64_t _edge_count = 0;
            std::uint64_t _min_degree = 0;
            std::uint64_t _max_degree = 0;
            bool _unit_sizes = true;
            std::vector<TwinClass> _classes;
            Graph _quotient;
            std::vector<std::uint32_t> _class_of;
    };
}

#endif
