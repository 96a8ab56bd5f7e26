#ifndef GRAPHBOUNDS_GRAPH_HPP
#define GRAPHBOUNDS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphbounds
{
    using Vertex = std::uint32_t;
    using Edge = std::pair<Vertex, Vertex>;

    using BitWord = std::uint64_t;
    inline constexpr unsigned bits_per_word = 64;

    /**
     * Simple undirected graph on the dense vertex set 0..n-1, stored as one
     * fixed-width bitset row per vertex. Immutable once built.
     */
    class Graph
    {
        public:
            Graph() = default;

            /// Builds from an edge list. Duplicate edges (in either
            /// orientation) collapse; loops and out-of-range endpoints throw
            /// DomainError.
            static auto from_edges(Vertex n, std::span<const Edge> edges) -> Graph;

            auto n() const -> Vertex { return _n; }
            auto edge_count() const -> std::uint64_t { return _edge_count; }
            auto words_per_row() const -> std::size_t { return _words; }

            auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return (row(u)[v / bits_per_word] >> (v % bits_per_word)) & 1;
            }

            auto degree(Vertex u) const -> std::uint32_t { return _degrees[u]; }
            auto degrees() const -> std::span<const std::uint32_t> { return _degrees; }
            auto min_degree() const -> std::uint32_t;
            auto max_degree() const -> std::uint32_t;

            /// The open neighbourhood N(u) as a bitset row.
            auto row(Vertex u) const -> std::span<const BitWord>
            {
                return { _rows.data() + static_cast<std::size_t>(u) * _words, _words };
            }

            auto neighbours(Vertex u) const -> std::vector<Vertex>;
            auto edges() const -> std::vector<Edge>;

            /// N(u) as a single word; requires n <= 64.
            auto mask(Vertex u) const -> std::uint64_t;

            friend auto operator==(const Graph &, const Graph &) -> bool = default;

        private:
            Vertex _n = 0;
            std::size_t _words = 0;
            std::uint64_t _edge_count = 0;
            std::vector<BitWord> _rows;
            std::vector<std::uint32_t> _degrees;
    };

    /// Membership in the class of connected, non-complete graphs on at least
    /// three vertices.
    struct GammaClassProof
    {
        bool connected = false;
        bool non_complete = false;
        bool n_ge_3 = false;

        auto in_class() const -> bool { return connected && non_complete && n_ge_3; }
        auto describe() const -> std::string;
    };

    auto gamma_class(const Graph & g) -> GammaClassProof;

    /// Throws DomainError unless g is connected, non-complete, n >= 3.
    auto require_gamma_class(const Graph & g) -> void;

    struct Bipartition
    {
        std::vector<Vertex> side_a;
        std::vector<Vertex> side_b;
    };

    /// BFS two-colouring, component by component; vertex 0's component puts
    /// its lowest vertex on side A. Empty when an odd cycle exists.
    auto find_bipartition(const Graph & g) -> std::optional<Bipartition>;

    /// Throws DomainError unless the sides partition V and every edge
    /// crosses.
    auto validate_bipartition(const Graph & g, const Bipartition & bip) -> void;

    /// |N[u] ∪ N[v]| for u != v.
    auto closed_union_size(const Graph & g, Vertex u, Vertex v) -> std::uint32_t;

    // graph6 interchange ------------------------------------------------------

    auto parse_graph6(std::string_view text) -> Graph;
    auto encode_graph6(const Graph & g) -> std::string;

    /// First line "n", then one "u v" edge per line. Blank lines and lines
    /// starting with '#' are ignored.
    auto parse_edge_list(std::string_view text) -> Graph;

    // named families ------------------------------------------------------------

    enum class Family
    {
        star,
        path,
        cycle,
        complete_bipartite
    };

    struct NamedGraph
    {
        Family family;
        std::vector<std::uint64_t> params;

        auto vertex_count() const -> std::uint64_t;
        auto label() const -> std::string;
    };

    /// "star:m", "path:n", "cycle:n", "cbip:a,b".
    auto parse_named(std::string_view text) -> NamedGraph;

    /// Vertex order: star centre is 0; complete_bipartite(a,b) puts side A
    /// on 0..a-1; path and cycle follow 0-1-2-...
    auto make_named(const NamedGraph & spec) -> Graph;
    auto make_named(Family family, std::span<const std::uint64_t> params) -> Graph;
}

#endif
